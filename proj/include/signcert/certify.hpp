#pragma once
// Certificate data model and exact verification.
//
// A tuple groups k conjugate pairs of S+ indices; a case pattern picks one leg
// per slot (slot 1 enters with sign -1, the rest with +1; '*' marks an unused
// slot). A certificate (tuple, pattern, R, lambda) is accepted when lambda
// lies on the simplex, dot(R,R) <= 1 and R - L has non-negative partial sums,
// where L is the lambda-combination of the signed case legs. That acceptance
// proves: for every a in Q satisfying the case's sign conditions, the smallest
// selected |product| is at most ||a||.
//
// A witness (leg, R) is accepted when R in Q, dot(R,R) > 1 and the leg's
// negated product at R is >= dot(R,R); then a = R itself defeats both legs of
// the conjugate pair.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cone.hpp"
#include "signspace.hpp"
#include "vector.hpp"

namespace signcert {

struct TupleSpec {
  int n = 9;
  std::vector<std::pair<int, int>> pairs;  // k pairs, 1 <= k <= 4

  int k() const { return static_cast<int>(pairs.size()); }
};

// slot value: position in {2l-1, 2l} for slot l, or 0 for the wildcard '*'
struct CasePattern {
  std::vector<int> slots;

  int k() const { return static_cast<int>(slots.size()); }
  bool is_wildcard(int l) const { return slots[l - 1] == 0; }
  bool concrete() const {
    for (int s : slots)
      if (s == 0) return false;
    return true;
  }
};

struct Certificate {
  TupleSpec tuple;
  CasePattern pattern;
  RowVector R;
  std::vector<Rational> lambda;
};

struct Witness {
  int leg = 0;
  RowVector R;
};

// u = -QR' for the bidiagonal Q (diagonal -1, superdiagonal +1), v the slot
// slacks e_l R' - RR', w = -RR'
struct DualWitness {
  RowVector u;
  std::vector<Rational> v;
  Rational w;
};

struct CheckResult {
  bool ok = true;
  std::string clause;  // first violated clause, empty when ok
};

inline std::string to_string(const TupleSpec& t) {
  std::string s = "(";
  for (int l = 0; l < t.k(); ++l) {
    if (l) s += ' ';
    s += "(" + std::to_string(t.pairs[l].first) + "," +
         std::to_string(t.pairs[l].second) + ")";
  }
  return s + ")";
}

inline std::string to_string(const CasePattern& p) {
  std::string s = "[";
  for (int l = 0; l < p.k(); ++l) {
    if (l) s += ',';
    s += p.slots[l] == 0 ? "*" : std::to_string(p.slots[l]);
  }
  return s + "]";
}

inline void validate_tuple(const TupleSpec& t) {
  check_dim(t.n);
  if (t.k() < 1 || t.k() > 4)
    throw std::invalid_argument("tuple " + to_string(t) + ": arity " +
                                std::to_string(t.k()) + " outside 1..4");
  int conj_sum = static_cast<int>(half_size(t.n)) - 1;
  std::vector<int> seen;
  for (auto [a, b] : t.pairs) {
    if (a < 0 || b < 0 || a > conj_sum || b > conj_sum)
      throw std::invalid_argument("tuple " + to_string(t) +
                                  ": index outside S+");
    if (a + b != conj_sum)
      throw std::invalid_argument("tuple " + to_string(t) + ": pair (" +
                                  std::to_string(a) + "," + std::to_string(b) +
                                  ") not conjugate");
    for (int x : {a, b}) {
      for (int s : seen)
        if (s == x)
          throw std::invalid_argument("tuple " + to_string(t) + ": duplicate " +
                                      std::to_string(x));
      seen.push_back(x);
    }
  }
}

inline void validate_pattern(const TupleSpec& t, const CasePattern& p) {
  if (p.k() != t.k())
    throw std::invalid_argument("pattern " + to_string(p) + " arity " +
                                std::to_string(p.k()) + " vs tuple arity " +
                                std::to_string(t.k()));
  for (int l = 1; l <= p.k(); ++l) {
    int s = p.slots[l - 1];
    if (s != 0 && s != 2 * l - 1 && s != 2 * l)
      throw std::invalid_argument("pattern " + to_string(p) + " slot " +
                                  std::to_string(l) + " must be " +
                                  std::to_string(2 * l - 1) + ", " +
                                  std::to_string(2 * l) + " or *");
  }
}

inline int case_sign(int l) { return l == 1 ? -1 : +1; }

// the S+ index selected by slot l's position
inline int slot_leg(const TupleSpec& t, int l, int position) {
  const auto& pr = t.pairs[l - 1];
  return position == 2 * l - 1 ? pr.first : pr.second;
}

// signed case leg sigma_l * eps_{s_l} as a row vector
inline RowVector case_leg_row(const TupleSpec& t, const CasePattern& p, int l) {
  RowVector row = sign_row(static_cast<std::uint32_t>(slot_leg(t, l, p.slots[l - 1])), t.n);
  return case_sign(l) < 0 ? neg(row) : row;
}

// L = lambda_1 (-eps_{s_1}) + sum_{l>=2} lambda_l eps_{s_l}; wildcard slots
// must carry lambda = 0 and contribute nothing
inline RowVector build_L(const TupleSpec& t, const CasePattern& p,
                         const std::vector<Rational>& lambda) {
  validate_tuple(t);
  validate_pattern(t, p);
  if (static_cast<int>(lambda.size()) != t.k())
    throw std::invalid_argument("lambda arity " +
                                std::to_string(lambda.size()) +
                                " vs tuple arity " + std::to_string(t.k()));
  RowVector L = zero_vector(t.n);
  for (int l = 1; l <= t.k(); ++l) {
    if (p.is_wildcard(l)) {
      if (lambda[l - 1] != 0)
        throw std::invalid_argument("wildcard slot " + std::to_string(l) +
                                    " has lambda = " +
                                    to_string(lambda[l - 1]));
      continue;
    }
    L = add(L, scale(lambda[l - 1], case_leg_row(t, p, l)));
  }
  return L;
}

inline void validate_certificate_shape(const Certificate& c) {
  validate_tuple(c.tuple);
  validate_pattern(c.tuple, c.pattern);
  if (static_cast<int>(c.R.size()) != c.tuple.n)
    throw std::invalid_argument("certificate R has dimension " +
                                std::to_string(c.R.size()));
  if (static_cast<int>(c.lambda.size()) != c.tuple.k())
    throw std::invalid_argument("certificate lambda arity " +
                                std::to_string(c.lambda.size()));
}

// clause order: lambda sign, wildcard zeros, simplex sum, norm, dual cone
inline CheckResult check_certificate(const Certificate& c) {
  validate_certificate_shape(c);
  Rational sum = 0;
  for (int l = 1; l <= c.tuple.k(); ++l) {
    const Rational& lam = c.lambda[l - 1];
    if (lam < 0)
      return {false, "lambda[" + std::to_string(l) + "] = " + to_string(lam) +
                         " is negative"};
    if (c.pattern.is_wildcard(l) && lam != 0)
      return {false, "wildcard slot " + std::to_string(l) +
                         " has nonzero lambda " + to_string(lam)};
    sum += lam;
  }
  if (sum != 1)
    return {false, "lambda sums to " + to_string(sum) + ", expected 1"};
  Rational rr = norm2(c.R);
  if (rr > 1) return {false, "dot(R,R) = " + to_string(rr) + " exceeds 1"};
  RowVector diff = sub(c.R, build_L(c.tuple, c.pattern, c.lambda));
  if (int pos = first_negative_partial(diff); pos != 0) {
    RowVector partials = cumsum(diff);
    return {false, "R - L leaves the dual cone: partial sum " +
                       std::to_string(pos) + " is " +
                       to_string(partials[pos - 1])};
  }
  return {};
}

inline CheckResult check_witness(const Witness& w, int n = 9) {
  if (static_cast<int>(w.R.size()) != n)
    throw std::invalid_argument("witness R has dimension " +
                                std::to_string(w.R.size()));
  if (w.leg < 0 || w.leg >= static_cast<int>(half_size(n)))
    throw std::invalid_argument("witness leg outside S+");
  if (!in_Q(w.R)) return {false, "R not in Q"};
  Rational rr = norm2(w.R);
  if (rr <= 1) return {false, "dot(R,R) = " + to_string(rr) + " not above 1"};
  Rational margin = -eval_product(static_cast<std::uint32_t>(w.leg), n, w.R);
  if (margin < rr)
    return {false, "eval(-eps_" + std::to_string(w.leg) + ", R) = " +
                       to_string(margin) + " below dot(R,R) = " + to_string(rr)};
  return {};
}

namespace detail {
inline void require_feasible(const RowVector& R, const std::vector<Rational>& lambda,
                             const TupleSpec& t, const CasePattern& p) {
  Rational sum = 0;
  for (int l = 1; l <= t.k(); ++l) {
    if (lambda[l - 1] < 0)
      throw std::invalid_argument("infeasible: lambda[" + std::to_string(l) +
                                  "] negative");
    sum += lambda[l - 1];
  }
  if (sum != 1) throw std::invalid_argument("infeasible: lambda sum not 1");
  RowVector diff = sub(R, build_L(t, p, lambda));
  if (!in_Qstar(diff))
    throw std::invalid_argument("infeasible: R - L outside the dual cone");
}
}  // namespace detail

// global-optimality test for the minimum-norm problem of a case: a feasible
// (R, lambda) is optimal exactly when R is in Q and every signed case leg has
// e_l R' >= RR'. Feasibility is a checked precondition.
inline CheckResult check_qp_optimality(const RowVector& R,
                                       const std::vector<Rational>& lambda,
                                       const TupleSpec& t,
                                       const CasePattern& p) {
  validate_tuple(t);
  validate_pattern(t, p);
  detail::require_feasible(R, lambda, t, p);
  if (!in_Q(R)) return {false, "R not in Q"};
  Rational rr = norm2(R);
  for (int l = 1; l <= t.k(); ++l) {
    if (p.is_wildcard(l)) continue;
    Rational prod = dot(case_leg_row(t, p, l), R);
    if (prod < rr)
      return {false, "slot " + std::to_string(l) + ": e R' = " +
                         to_string(prod) + " below dot(R,R) = " + to_string(rr)};
  }
  return {};
}

// dual data for an optimal (R, lambda); throws (naming the violated sign
// condition) when the input is not optimal
inline DualWitness dual_from_primal(const RowVector& R,
                                    const std::vector<Rational>& lambda,
                                    const TupleSpec& t, const CasePattern& p) {
  CheckResult opt = check_qp_optimality(R, lambda, t, p);
  if (!opt.ok)  // u >= 0 is exactly "R in Q", v >= 0 exactly the slot slacks
    throw std::invalid_argument("dual sign violation: " + opt.clause);
  int n = t.n;
  DualWitness d;
  d.u.resize(n);
  for (int i = 0; i < n - 1; ++i) d.u[i] = R[i] - R[i + 1];
  d.u[n - 1] = R[n - 1];
  Rational rr = norm2(R);
  d.w = -rr;
  d.v.resize(t.k());
  for (int l = 1; l <= t.k(); ++l)
    d.v[l - 1] =
        p.is_wildcard(l) ? Rational(0) : dot(case_leg_row(t, p, l), R) - rr;
  return d;
}

}  // namespace signcert
