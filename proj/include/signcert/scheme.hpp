#pragma once
// Proof-scheme model and the end-to-end pipeline. A scheme partitions the
// +1-leading half of sign space into explicit tuples plus implied conjugate
// twins (every index not mentioned pairs with its conjugate). Verification:
// (a) the partition is valid, (b) non-leading pairs of every tuple are
// classified twins, (c) implied twins are classified twins, (d) the 2^k
// concrete cases of every tuple and both cases of every twin are covered by
// certificates, (e) every certificate checks. A PASS is a machine-checked
// proof that at least half of all sign vectors satisfy |eps a| <= ||a|| for
// every weight vector of this dimension (lower dimensions follow by
// zero-padding).
//
// The row-structured variant keeps the printed row layout; selecting the rows
// with odd leading index and halving every index reduces an n-scheme to an
// (n-1)-scheme, checked structurally.

#include <algorithm>
#include <cstdint>
#include <future>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "certify.hpp"
#include "solve.hpp"

namespace signcert {

struct ProofScheme {
  int n = 9;
  std::vector<TupleSpec> tuples;
  std::vector<std::pair<int, int>> implied_twins;
};

// validates tuples, rejects cross-tuple duplicates, derives implied twins
inline ProofScheme finalize_scheme(int n, std::vector<TupleSpec> tuples) {
  check_dim(n);
  const int half = static_cast<int>(half_size(n));
  std::vector<char> mentioned(half, 0);
  for (const auto& t : tuples) {
    if (t.n != n)
      throw std::invalid_argument("tuple " + to_string(t) +
                                  " has mismatched dimension");
    validate_tuple(t);
    for (auto [a, b] : t.pairs)
      for (int x : {a, b}) {
        if (mentioned[x])
          throw std::invalid_argument("duplicate " + std::to_string(x));
        mentioned[x] = 1;
      }
  }
  ProofScheme s;
  s.n = n;
  s.tuples = std::move(tuples);
  for (int i = 0; i < half; ++i) {
    if (mentioned[i]) continue;
    int j = static_cast<int>(conjugate_index(i, n));
    if (j < i) continue;  // handled from the smaller end
    if (mentioned[j])
      throw std::invalid_argument("index " + std::to_string(i) +
                                  " unmentioned but its conjugate " +
                                  std::to_string(j) + " is used");
    s.implied_twins.emplace_back(i, j);
  }
  return s;
}

// paper-style parenthesized text: one tuple per "(a b (c d) (e f) ...)"
inline ProofScheme parse_scheme_text(const std::string& text, int n) {
  std::vector<TupleSpec> tuples;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() &&
           (text[pos] == ' ' || text[pos] == '\n' || text[pos] == '\t' ||
            text[pos] == '\r' || text[pos] == ','))
      ++pos;
  };
  auto read_int = [&]() -> int {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == start) throw std::invalid_argument("scheme text: number expected");
    return std::stoi(text.substr(start, pos - start));
  };
  while (true) {
    skip_ws();
    if (pos >= text.size()) break;
    if (text[pos] != '(')
      throw std::invalid_argument("scheme text: '(' expected");
    ++pos;
    TupleSpec t;
    t.n = n;
    int a = read_int(), b = read_int();
    t.pairs.emplace_back(a, b);
    while (true) {
      skip_ws();
      if (pos >= text.size())
        throw std::invalid_argument("scheme text: unterminated tuple");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (text[pos] != '(')
        throw std::invalid_argument("scheme text: '(' expected in tuple");
      ++pos;
      int c = read_int(), d = read_int();
      skip_ws();
      if (pos >= text.size() || text[pos] != ')')
        throw std::invalid_argument("scheme text: ')' expected after pair");
      ++pos;
      t.pairs.emplace_back(c, d);
    }
    tuples.push_back(std::move(t));
  }
  return finalize_scheme(n, std::move(tuples));
}

struct LegDecision {
  int leg = 0;
  QPStatus status = QPStatus::CERT;
  RowVector R;
  Rational value;
};

struct Classification {
  int n = 9;
  std::vector<std::pair<int, int>> twins;      // ordered by smaller leg
  std::vector<std::pair<int, int>> non_twins;  // ditto
  std::vector<Witness> witnesses;              // one per refuted leg
  std::vector<LegDecision> decisions;          // all legs of S+

  bool is_twin(int a, int b) const {
    for (const auto& p : twins)
      if ((p.first == a && p.second == b) || (p.first == b && p.second == a))
        return true;
    return false;
  }
};

// decide every leg, then split the conjugate pairs: a pair is non-twin exactly
// when one of its legs refutes
inline Classification classify_pairs(int n = 9, int jobs = 1) {
  check_dim(n);
  const int half = static_cast<int>(half_size(n));
  Classification cls;
  cls.n = n;
  cls.decisions.resize(half);
  auto run_range = [&](int lo, int hi) {
    for (int leg = lo; leg < hi; ++leg) {
      QPResult qp = decide_leg(leg, n);
      cls.decisions[leg] =
          LegDecision{leg, qp.status, std::move(qp.R), qp.value};
    }
  };
  if (jobs <= 1) {
    run_range(0, half);
  } else {
    std::vector<std::future<void>> fs;
    int chunk = (half + jobs - 1) / jobs;
    for (int lo = 0; lo < half; lo += chunk)
      fs.push_back(std::async(std::launch::async, run_range, lo,
                              std::min(half, lo + chunk)));
    for (auto& f : fs) f.get();
  }
  for (int i = 0; i < half / 2; ++i) {
    int j = static_cast<int>(conjugate_index(i, n));
    bool bad_i = cls.decisions[i].status == QPStatus::REFUTE;
    bool bad_j = cls.decisions[j].status == QPStatus::REFUTE;
    if (bad_i || bad_j)
      cls.non_twins.emplace_back(i, j);
    else
      cls.twins.emplace_back(i, j);
    if (bad_i) cls.witnesses.push_back(Witness{i, cls.decisions[i].R});
    if (bad_j) cls.witnesses.push_back(Witness{j, cls.decisions[j].R});
  }
  return cls;
}

// twin legs j with R1 - eps_j in Q* and (R2 + eps_j in Q* or R3 + eps_j in
// Q*). R_m here is the vector with m^2 leading entries 1/m.
inline std::vector<int> special_twins(const Classification& cls) {
  const int n = cls.n;
  if (n != 9)
    throw std::invalid_argument("special twin census is defined for n = 9");
  auto Rm = [&](int m2) {
    RowVector v = zero_vector(n);
    for (int i = 0; i < m2 * m2; ++i) v[i] = make_rational(1, m2);
    return v;
  };
  RowVector R1 = Rm(1), R2 = Rm(2), R3 = Rm(3);
  std::vector<int> out;
  for (std::uint32_t j = 0; j < half_size(n); ++j) {
    RowVector e = sign_row(j, n);
    if (!in_Qstar(sub(R1, e))) continue;
    if (!in_Qstar(add(R2, e)) && !in_Qstar(add(R3, e))) continue;
    out.push_back(static_cast<int>(j));
  }
  for (int j : out) {
    int c = static_cast<int>(conjugate_index(j, n));
    if (!cls.is_twin(std::min(j, c), std::max(j, c)))
      throw std::logic_error("special twin " + std::to_string(j) +
                             " is not a classified twin");
  }
  return out;
}

// the 2^k concrete patterns, first slot varying slowest
inline std::vector<CasePattern> expand_cases(const TupleSpec& t) {
  validate_tuple(t);
  const int k = t.k();
  std::vector<CasePattern> out;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << k); ++mask) {
    CasePattern p;
    p.slots.resize(k);
    for (int l = 1; l <= k; ++l)
      p.slots[l - 1] = ((mask >> (k - l)) & 1u) ? 2 * l : 2 * l - 1;
    out.push_back(std::move(p));
  }
  return out;
}

inline bool pattern_covers(const CasePattern& cert_pat,
                           const CasePattern& concrete) {
  if (cert_pat.k() != concrete.k()) return false;
  for (int l = 1; l <= cert_pat.k(); ++l)
    if (!cert_pat.is_wildcard(l) &&
        cert_pat.slots[l - 1] != concrete.slots[l - 1])
      return false;
  return true;
}

namespace detail {
inline bool same_pairs(const TupleSpec& a, const TupleSpec& b) {
  return a.n == b.n && a.pairs == b.pairs;
}

// maps a certificate's pattern onto a unit tuple: exact pair order, or a
// reversed single pair (slot 1 renumbered)
inline std::optional<CasePattern> align_pattern(const TupleSpec& unit,
                                                const Certificate& c) {
  if (same_pairs(unit, c.tuple)) return c.pattern;
  if (unit.k() == 1 && c.tuple.k() == 1 && unit.n == c.tuple.n &&
      unit.pairs[0].first == c.tuple.pairs[0].second &&
      unit.pairs[0].second == c.tuple.pairs[0].first) {
    CasePattern p = c.pattern;
    if (p.slots[0] == 1)
      p.slots[0] = 2;
    else if (p.slots[0] == 2)
      p.slots[0] = 1;
    return p;
  }
  return std::nullopt;
}
}  // namespace detail

struct CoverageResult {
  bool covered = true;
  std::vector<CasePattern> uncovered;
};

// every concrete case of t must be matched by at least one certificate whose
// tuple aligns with t (wildcards match both positions of their slot)
inline CoverageResult check_coverage(const TupleSpec& t,
                                     const std::vector<Certificate>& certs) {
  CoverageResult out;
  std::vector<CasePattern> aligned;
  for (const auto& c : certs)
    if (auto p = detail::align_pattern(t, c)) aligned.push_back(*p);
  for (const auto& concrete : expand_cases(t)) {
    bool hit = false;
    for (const auto& p : aligned)
      if (pattern_covers(p, concrete)) {
        hit = true;
        break;
      }
    if (!hit) {
      out.covered = false;
      out.uncovered.push_back(concrete);
    }
  }
  return out;
}

struct CaseReport {
  CasePattern pattern;
  int certificate_id = -1;  // index into the certificate list, -1 = uncovered
  bool ok = false;
};

struct TupleReport {
  TupleSpec tuple;
  std::vector<CaseReport> cases;
};

struct VerificationReport {
  int n = 9;
  bool pass = false;
  std::vector<TupleReport> tuples;
  std::vector<std::pair<int, int>> twins;
  std::vector<std::pair<int, int>> non_twins;
  std::vector<std::string> failures;
};

inline VerificationReport verify_all(const ProofScheme& scheme,
                                     const std::vector<Certificate>& certs,
                                     const Classification& cls) {
  VerificationReport rep;
  rep.n = scheme.n;
  rep.twins = cls.twins;
  rep.non_twins = cls.non_twins;
  auto fail = [&](std::string msg) { rep.failures.push_back(std::move(msg)); };

  // (a) the partition property is enforced by finalize_scheme; re-check
  {
    const int half = static_cast<int>(half_size(scheme.n));
    std::vector<int> seen(half, 0);
    for (const auto& t : scheme.tuples)
      for (auto [a, b] : t.pairs) ++seen[a], ++seen[b];
    for (auto [a, b] : scheme.implied_twins) ++seen[a], ++seen[b];
    for (int i = 0; i < half; ++i)
      if (seen[i] != 1) {
        fail("partition: index " + std::to_string(i) + " appears " +
             std::to_string(seen[i]) + " times");
        break;
      }
  }

  // (b) non-leading pairs of every tuple are classified twins
  for (const auto& t : scheme.tuples)
    for (int l = 2; l <= t.k(); ++l) {
      auto [a, b] = t.pairs[l - 1];
      if (!cls.is_twin(a, b))
        fail("tuple " + to_string(t) + " pair (" + std::to_string(a) + "," +
             std::to_string(b) + ") is not a classified twin");
    }

  // (c) implied twins are classified twins
  for (auto [a, b] : scheme.implied_twins)
    if (!cls.is_twin(a, b))
      fail("implied twin (" + std::to_string(a) + "," + std::to_string(b) +
           ") is not a classified twin");

  // units to cover: explicit tuples, then implied twins as one-pair tuples
  std::vector<TupleSpec> units = scheme.tuples;
  for (auto [a, b] : scheme.implied_twins)
    units.push_back(TupleSpec{scheme.n, {{a, b}}});

  // (e) every certificate checks.  The file may carry direct one-pair
  // certificates for twins that already sit inside a larger tuple; they create
  // no coverage duty but must still hold up.
  for (std::size_t ci = 0; ci < certs.size(); ++ci) {
    const auto& c = certs[ci];
    CheckResult r = check_certificate(c);
    if (!r.ok)
      fail("certificate #" + std::to_string(ci) + " tuple " +
           to_string(c.tuple) + " case " + to_string(c.pattern) + ": " +
           r.clause);
  }

  // (d) coverage, recorded case by case with the first covering certificate
  for (const auto& u : units) {
    TupleReport tr;
    tr.tuple = u;
    for (const auto& concrete : expand_cases(u)) {
      CaseReport cr;
      cr.pattern = concrete;
      for (std::size_t ci = 0; ci < certs.size(); ++ci) {
        auto p = detail::align_pattern(u, certs[ci]);
        if (p && pattern_covers(*p, concrete)) {
          cr.certificate_id = static_cast<int>(ci);
          cr.ok = check_certificate(certs[ci]).ok;
          break;
        }
      }
      if (cr.certificate_id < 0)
        fail("tuple " + to_string(u) + " case " + to_string(concrete) +
             " uncovered");
      tr.cases.push_back(std::move(cr));
    }
    rep.tuples.push_back(std::move(tr));
  }

  rep.pass = rep.failures.empty();
  return rep;
}

// printed row layout: rows of segments, each segment a leading pair plus twin
// pairs; '-'-decorated twins are flagged but carry no coverage obligation
struct RowScheme {
  struct Segment {
    std::vector<std::pair<int, int>> pairs;
    std::vector<std::pair<int, int>> decorated;
  };
  using Row = std::vector<Segment>;
  int n = 9;
  std::vector<Row> rows;
};

// structural check only: conjugate pairs partitioning the half space
inline void validate_row_scheme(const RowScheme& rs) {
  check_dim(rs.n);
  const int half = static_cast<int>(half_size(rs.n));
  std::vector<int> seen(half, 0);
  for (const auto& row : rs.rows)
    for (const auto& seg : row) {
      for (auto [a, b] : seg.pairs) {
        if (a < 0 || b < 0 || a >= half || b >= half)
          throw std::invalid_argument("row scheme: index outside S+ for n=" +
                                      std::to_string(rs.n));
        if (a + b != half - 1)
          throw std::invalid_argument("row scheme: pair (" + std::to_string(a) +
                                      "," + std::to_string(b) +
                                      ") not conjugate");
        ++seen[a], ++seen[b];
      }
      for (auto [a, b] : seg.decorated) {
        bool listed = false;
        for (auto [c, d] : seg.pairs) listed |= (c == a && d == b);
        if (!listed)
          throw std::invalid_argument("row scheme: decorated pair not in row");
      }
    }
  for (int i = 0; i < half; ++i)
    if (seen[i] != 1)
      throw std::invalid_argument("row scheme: index " + std::to_string(i) +
                                  " appears " + std::to_string(seen[i]) +
                                  " times");
}

// keep the rows whose leading index is odd, halve every index: n -> n-1
inline RowScheme reduce_even_rows(const RowScheme& rs) {
  if (rs.n < 2) throw std::invalid_argument("cannot reduce below n = 1");
  RowScheme out;
  out.n = rs.n - 1;
  for (const auto& row : rs.rows) {
    if (row.empty() || row[0].pairs.empty())
      throw std::invalid_argument("row scheme: empty row");
    if (row[0].pairs[0].first % 2 == 0) continue;
    RowScheme::Row nrow;
    for (const auto& seg : row) {
      RowScheme::Segment ns;
      for (auto [a, b] : seg.pairs) ns.pairs.emplace_back(a / 2, b / 2);
      for (auto [a, b] : seg.decorated) ns.decorated.emplace_back(a / 2, b / 2);
      nrow.push_back(std::move(ns));
    }
    out.rows.push_back(std::move(nrow));
  }
  validate_row_scheme(out);  // throws when the reduction is structurally bad
  return out;
}

// flatten a row scheme into a partition scheme (each segment one tuple)
inline ProofScheme scheme_from_rows(const RowScheme& rs) {
  std::vector<TupleSpec> tuples;
  for (const auto& row : rs.rows)
    for (const auto& seg : row)
      tuples.push_back(TupleSpec{rs.n, seg.pairs});
  return finalize_scheme(rs.n, std::move(tuples));
}

}  // namespace signcert
