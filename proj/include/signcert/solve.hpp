#pragma once
// Exact-rational search. Three layers:
//   * a dense two-phase primal simplex (Bland's rule) for equality-form LPs,
//   * lp_max_margin: best lambda for a fixed R, maximizing the smallest
//     cumulative partial of R - L(lambda) over the simplex,
//   * qp_min_norm: the minimum-norm (R, lambda) of a case, solved for one
//     concrete slot by a taut-string construction (least concave majorant of
//     the 0-anchored running max of cumsum(L)) and in general by enumerating
//     contact sets / lambda supports and solving the stationarity system.
// Nothing from the search is trusted: every result must pass the exact
// optimality conditions (R in Q, e R' >= RR' per slot) before it is returned.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "certify.hpp"
#include "cone.hpp"
#include "vector.hpp"

namespace signcert {

struct LPResult {
  std::vector<Rational> lambda;  // full tuple arity, zeros on wildcard slots
  Rational margin;
};

enum class QPStatus { CERT, REFUTE };

struct QPResult {
  RowVector R;
  std::vector<Rational> lambda;
  Rational value;  // dot(R,R)
  QPStatus status = QPStatus::CERT;
  DualWitness dual;
};

namespace lp {

enum class Status { OPTIMAL, INFEASIBLE, UNBOUNDED };

struct Solution {
  Status status = Status::OPTIMAL;
  std::vector<Rational> x;
  Rational objective;
};

// min c'x  s.t.  Ax = b, x >= 0.  Dense tableau, two phases, Bland's rule
// (entering: lowest index with negative reduced cost; leaving: smallest ratio,
// ties by lowest basic index).
inline Solution simplex_min(std::vector<Rational> c,
                            std::vector<std::vector<Rational>> A,
                            std::vector<Rational> b) {
  const int m = static_cast<int>(A.size());
  const int nv = static_cast<int>(c.size());
  for (int i = 0; i < m; ++i)
    if (static_cast<int>(A[i].size()) != nv)
      throw std::invalid_argument("simplex: ragged constraint matrix");
  for (int i = 0; i < m; ++i) {
    if (b[i] < 0) {
      b[i] = -b[i];
      for (auto& x : A[i]) x = -x;
    }
  }

  // columns: nv originals, m artificials, then rhs
  const int width = nv + m;
  std::vector<std::vector<Rational>> T(m, std::vector<Rational>(width + 1, 0));
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < nv; ++j) T[i][j] = A[i][j];
    T[i][nv + i] = 1;
    T[i][width] = b[i];
    basis[i] = nv + i;
  }

  std::vector<Rational> r(width + 1, 0);  // reduced-cost row, rhs = -objective

  auto pivot = [&](int pr, int pc) {
    Rational piv = T[pr][pc];
    for (auto& x : T[pr]) x /= piv;
    for (int i = 0; i < m; ++i) {
      if (i == pr || T[i][pc] == 0) continue;
      Rational f = T[i][pc];
      for (int j = 0; j <= width; ++j) T[i][j] -= f * T[pr][j];
    }
    if (r[pc] != 0) {
      Rational f = r[pc];
      for (int j = 0; j <= width; ++j) r[j] -= f * T[pr][j];
    }
    basis[pr] = pc;
  };

  auto iterate = [&](int col_limit) -> Status {
    while (true) {
      int enter = -1;
      for (int j = 0; j < col_limit; ++j)
        if (r[j] < 0) {
          enter = j;
          break;
        }
      if (enter < 0) return Status::OPTIMAL;
      int leave = -1;
      Rational best_num, best_den;
      for (int i = 0; i < m; ++i) {
        if (T[i][enter] <= 0) continue;
        // compare T[i][width]/T[i][enter] ratios exactly
        if (leave < 0 ||
            T[i][width] * best_den < best_num * T[i][enter] ||
            (T[i][width] * best_den == best_num * T[i][enter] &&
             basis[i] < basis[leave])) {
          leave = i;
          best_num = T[i][width];
          best_den = T[i][enter];
        }
      }
      if (leave < 0) return Status::UNBOUNDED;
      pivot(leave, enter);
    }
  };

  // phase 1: minimize the artificial sum; with the artificial basis the
  // reduced cost of column j is c_j minus its column sum
  for (int j = 0; j <= width; ++j) {
    Rational s = 0;
    for (int i = 0; i < m; ++i) s += T[i][j];
    r[j] = (j >= nv && j < width ? Rational(1) : Rational(0)) - s;
  }
  if (iterate(width) == Status::UNBOUNDED)
    throw std::logic_error("simplex: phase 1 unbounded");
  Rational art_sum = 0;
  for (int i = 0; i < m; ++i)
    if (basis[i] >= nv) art_sum += T[i][width];
  if (art_sum > 0) return {Status::INFEASIBLE, {}, 0};

  // drive remaining artificials out of the basis
  for (int i = 0; i < m; ++i) {
    if (basis[i] < nv) continue;
    int pc = -1;
    for (int j = 0; j < nv; ++j)
      if (T[i][j] != 0) {
        pc = j;
        break;
      }
    if (pc >= 0) pivot(i, pc);
    // else: redundant row, its artificial stays basic at level 0
  }

  // phase 2 reduced costs for the real objective
  for (int j = 0; j <= width; ++j) r[j] = 0;
  for (int j = 0; j < nv; ++j) r[j] = c[j];
  for (int i = 0; i < m; ++i) {
    if (basis[i] >= nv || c[basis[i]] == 0) continue;
    Rational f = c[basis[i]];
    for (int j = 0; j <= width; ++j) r[j] -= f * T[i][j];
  }
  if (iterate(nv) == Status::UNBOUNDED) return {Status::UNBOUNDED, {}, 0};

  std::vector<Rational> x(nv, 0);
  Rational obj = 0;
  for (int i = 0; i < m; ++i)
    if (basis[i] < nv) x[basis[i]] = T[i][width];
  for (int j = 0; j < nv; ++j) obj += c[j] * x[j];
  return {Status::OPTIMAL, std::move(x), obj};
}

// row-reduce M x = rhs; inconsistent -> nullopt, free variables -> 0
inline std::optional<std::vector<Rational>> gauss_solve(
    std::vector<std::vector<Rational>> M, std::vector<Rational> rhs) {
  const int rows = static_cast<int>(M.size());
  const int cols = rows ? static_cast<int>(M[0].size()) : 0;
  std::vector<int> pivcol;
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int pr = -1;
    for (int i = row; i < rows; ++i)
      if (M[i][col] != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    std::swap(M[pr], M[row]);
    std::swap(rhs[pr], rhs[row]);
    Rational piv = M[row][col];
    for (auto& x : M[row]) x /= piv;
    rhs[row] /= piv;
    for (int i = 0; i < rows; ++i) {
      if (i == row || M[i][col] == 0) continue;
      Rational f = M[i][col];
      for (int j = 0; j < cols; ++j) M[i][j] -= f * M[row][j];
      rhs[i] -= f * rhs[row];
    }
    pivcol.push_back(col);
    ++row;
  }
  for (int i = row; i < rows; ++i)
    if (rhs[i] != 0) return std::nullopt;
  std::vector<Rational> x(cols, 0);
  for (int r2 = 0; r2 < row; ++r2) x[pivcol[r2]] = rhs[r2];
  return x;
}

// lexicographic r-subsets of {0,...,n-1}
template <class F>
void for_each_combination(int n, int r, F&& f) {
  std::vector<int> idx(r);
  for (int i = 0; i < r; ++i) idx[i] = i;
  while (true) {
    f(const_cast<const std::vector<int>&>(idx));
    int i = r - 1;
    while (i >= 0 && idx[i] == n - r + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace lp

namespace detail {
inline std::vector<int> effective_slots(const CasePattern& p) {
  std::vector<int> out;
  for (int l = 1; l <= p.k(); ++l)
    if (!p.is_wildcard(l)) out.push_back(l);
  return out;
}
}  // namespace detail

// best lambda for a fixed R: maximize x subject to every cumulative partial of
// R - L(lambda) being >= x, lambda on the simplex (wildcard slots pinned to 0)
inline LPResult lp_max_margin(const RowVector& R, const TupleSpec& t,
                              const CasePattern& p) {
  validate_tuple(t);
  validate_pattern(t, p);
  if (static_cast<int>(R.size()) != t.n)
    throw std::invalid_argument("lp_max_margin: R has wrong dimension");
  std::vector<int> slots = detail::effective_slots(p);
  const int m = static_cast<int>(slots.size());
  if (m == 0)
    throw std::invalid_argument("pattern " + to_string(p) +
                                " has no concrete slot");
  const int n = t.n;
  RowVector Rbar = cumsum(R);
  std::vector<RowVector> Ebar(m);
  for (int s = 0; s < m; ++s)
    Ebar[s] = cumsum(case_leg_row(t, p, slots[s]));

  // vars: lambda_0..m-1, x+, x-, slack_1..n
  const int nv = m + 2 + n;
  std::vector<std::vector<Rational>> A(n + 1, std::vector<Rational>(nv, 0));
  std::vector<Rational> b(n + 1, 0), c(nv, 0);
  for (int i = 0; i < n; ++i) {
    for (int s = 0; s < m; ++s) A[i][s] = Ebar[s][i];
    A[i][m] = 1;
    A[i][m + 1] = -1;
    A[i][m + 2 + i] = 1;
    b[i] = Rbar[i];
  }
  for (int s = 0; s < m; ++s) A[n][s] = 1;
  b[n] = 1;
  c[m] = -1;
  c[m + 1] = 1;

  lp::Solution sol = lp::simplex_min(c, A, b);
  if (sol.status != lp::Status::OPTIMAL)
    throw std::logic_error("margin LP did not solve to optimality");
  LPResult out;
  out.lambda.assign(t.k(), Rational(0));
  for (int s = 0; s < m; ++s) out.lambda[slots[s] - 1] = sol.x[s];
  out.margin = sol.x[m] - sol.x[m + 1];
  return out;
}

// minimum-norm R with cumsum(R) >= cumsum(L) pointwise: the slopes of the
// least concave majorant of the 0-anchored running max of cumsum(L)
inline RowVector taut_string_min_norm(const RowVector& L) {
  const int n = static_cast<int>(L.size());
  RowVector Lb = cumsum(L);
  std::vector<Rational> y(n + 1, 0);
  for (int i = 1; i <= n; ++i) y[i] = std::max(y[i - 1], Lb[i - 1]);
  std::vector<int> hull{0};
  for (int k = 1; k <= n; ++k) {
    while (hull.size() >= 2) {
      int a = hull[hull.size() - 2], b2 = hull.back();
      // pop while slope(a,b) <= slope(b,k)
      if ((y[b2] - y[a]) * Rational(k - b2) <=
          (y[k] - y[b2]) * Rational(b2 - a))
        hull.pop_back();
      else
        break;
    }
    hull.push_back(k);
  }
  RowVector R(n, Rational(0));
  for (std::size_t h = 1; h < hull.size(); ++h) {
    int a = hull[h - 1], b2 = hull[h];
    Rational slope = (y[b2] - y[a]) / Rational(b2 - a);
    for (int i = a + 1; i <= b2; ++i) R[i - 1] = slope;
  }
  return R;
}

namespace detail {
// piecewise-linear cumulative interpolation through (0,0) and the contact
// points (c, vals[c-1]), slope 0 past the last contact; returns the slopes
inline RowVector interp_through(const RowVector& vals,
                                const std::vector<int>& contacts, int n) {
  RowVector R(n, Rational(0));
  int prev_i = 0;
  Rational prev_v = 0;
  for (int c : contacts) {
    Rational slope = (vals[c - 1] - prev_v) / Rational(c - prev_i);
    for (int i = prev_i + 1; i <= c; ++i) R[i - 1] = slope;
    prev_i = c;
    prev_v = vals[c - 1];
  }
  return R;
}
}  // namespace detail

// globally optimal (R, lambda) for one case. The returned result always
// carries a passed exact optimality check; search failure throws.
inline QPResult qp_min_norm(const TupleSpec& t, const CasePattern& p) {
  validate_tuple(t);
  validate_pattern(t, p);
  const int n = t.n;
  std::vector<int> slots = detail::effective_slots(p);
  const int m = static_cast<int>(slots.size());
  if (m == 0)
    throw std::invalid_argument("pattern " + to_string(p) +
                                " has no concrete slot");
  std::vector<RowVector> legs(m);
  for (int s = 0; s < m; ++s) legs[s] = case_leg_row(t, p, slots[s]);

  RowVector R;
  std::vector<Rational> lambda(t.k(), Rational(0));
  bool found = false;

  if (m == 1) {
    lambda[slots[0] - 1] = 1;
    R = taut_string_min_norm(legs[0]);
    found = true;
  } else {
    LPResult at_zero = lp_max_margin(zero_vector(n), t, p);
    if (at_zero.margin >= 0) {
      R = zero_vector(n);
      lambda = at_zero.lambda;
      found = true;
    }
  }

  if (!found) {
    std::vector<RowVector> Ebar(m);
    for (int s = 0; s < m; ++s) Ebar[s] = cumsum(legs[s]);
    std::vector<RowVector> K(m);

    for (int csize = 1; csize <= n && !found; ++csize) {
      lp::for_each_combination(n, csize, [&](const std::vector<int>& cc) {
        if (found) return;
        std::vector<int> contacts(cc.size());
        for (std::size_t i = 0; i < cc.size(); ++i) contacts[i] = cc[i] + 1;
        for (int s = 0; s < m; ++s)
          K[s] = detail::interp_through(Ebar[s], contacts, n);
        for (int ssize = m; ssize >= 1 && !found; --ssize) {
          lp::for_each_combination(m, ssize, [&](const std::vector<int>& S) {
            if (found) return;
            // unknowns: lambda over S, then the common product value
            const int q = ssize + 1;
            std::vector<std::vector<Rational>> M(
                q, std::vector<Rational>(q, Rational(0)));
            std::vector<Rational> rhs(q, Rational(0));
            for (int r2 = 0; r2 < ssize; ++r2) {
              for (int cidx = 0; cidx < ssize; ++cidx)
                M[r2][cidx] = dot(legs[S[r2]], K[S[cidx]]);
              M[r2][ssize] = -1;
            }
            for (int cidx = 0; cidx < ssize; ++cidx) M[ssize][cidx] = 1;
            rhs[ssize] = 1;
            auto sol = lp::gauss_solve(std::move(M), std::move(rhs));
            if (!sol) return;
            std::vector<Rational> lam_try(t.k(), Rational(0));
            for (int cidx = 0; cidx < ssize; ++cidx) {
              if ((*sol)[cidx] < 0) return;
              lam_try[slots[S[cidx]] - 1] = (*sol)[cidx];
            }
            RowVector R_try = zero_vector(n);
            for (int cidx = 0; cidx < ssize; ++cidx)
              if ((*sol)[cidx] != 0)
                R_try = add(R_try, scale((*sol)[cidx], K[S[cidx]]));
            // exact optimality screen (feasibility + Q + slot slacks)
            RowVector L = build_L(t, p, lam_try);
            if (!in_Qstar(sub(R_try, L))) return;
            if (!in_Q(R_try)) return;
            Rational rr = norm2(R_try);
            for (int s = 0; s < m; ++s)
              if (dot(legs[s], R_try) < rr) return;
            R = std::move(R_try);
            lambda = std::move(lam_try);
            found = true;
          });
        }
      });
    }
  }

  if (!found)
    throw std::logic_error("minimum-norm search exhausted for tuple " +
                           to_string(t) + " case " + to_string(p));

  CheckResult opt = check_qp_optimality(R, lambda, t, p);
  if (!opt.ok)
    throw std::logic_error("search produced a non-optimal point: " +
                           opt.clause);
  QPResult out;
  out.value = norm2(R);
  out.status = out.value <= 1 ? QPStatus::CERT : QPStatus::REFUTE;
  out.dual = dual_from_primal(R, lambda, t, p);
  out.R = std::move(R);
  out.lambda = std::move(lambda);
  return out;
}

// the certificate-or-witness dichotomy for one leg: solve the one-slot case
// with sign -1 on eps_leg; value <= 1 certifies, value > 1 refutes
inline QPResult decide_leg(int leg, int n = 9) {
  if (leg < 0 || leg >= static_cast<int>(half_size(n)))
    throw std::invalid_argument("leg " + std::to_string(leg) +
                                " outside S+ for n=" + std::to_string(n));
  TupleSpec t{n, {{leg, static_cast<int>(conjugate_index(leg, n))}}};
  CasePattern p{{1}};
  return qp_min_norm(t, p);
}

inline Certificate certificate_from(const TupleSpec& t, const CasePattern& p,
                                    const QPResult& qp) {
  if (qp.status != QPStatus::CERT)
    throw std::invalid_argument("certificate_from on a refuting result");
  return Certificate{t, p, qp.R, qp.lambda};
}

inline Witness witness_from(int leg, const QPResult& qp) {
  if (qp.status != QPStatus::REFUTE)
    throw std::invalid_argument("witness_from on a certifying result");
  return Witness{leg, qp.R};
}

}  // namespace signcert
