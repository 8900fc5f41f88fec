#pragma once
// JSON loading/serialization for schemes, certificates, witnesses, the vector
// library, and verification/solver reports. Rationals travel as "p/q" strings;
// counts and fractions are never decimalized.

#include <fstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "oracle.hpp"
#include "scheme.hpp"
#include "solve.hpp"

namespace signcert {

using njson = nlohmann::json;

inline njson load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  njson j;
  try {
    in >> j;
  } catch (const njson::parse_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
  return j;
}

inline Rational rational_from_json(const njson& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw std::invalid_argument("rational entries must be \"p/q\" strings");
}

inline RowVector vector_from_json(const njson& arr) {
  if (!arr.is_array()) throw std::invalid_argument("vector must be an array");
  RowVector out;
  for (const auto& x : arr) out.push_back(rational_from_json(x));
  return out;
}

inline njson vector_to_json(const RowVector& v) {
  njson arr = njson::array();
  for (const auto& x : v) arr.push_back(to_string(x));
  return arr;
}

inline njson lambda_to_json(const std::vector<Rational>& v) {
  njson arr = njson::array();
  for (const auto& x : v) arr.push_back(to_string(x));
  return arr;
}

inline std::vector<std::pair<int, int>> pairs_from_json(const njson& arr) {
  std::vector<std::pair<int, int>> out;
  for (const auto& p : arr) {
    if (!p.is_array() || p.size() != 2)
      throw std::invalid_argument("pair must be a two-element array");
    out.emplace_back(p[0].get<int>(), p[1].get<int>());
  }
  return out;
}

inline njson pairs_to_json(const std::vector<std::pair<int, int>>& pairs) {
  njson arr = njson::array();
  for (auto [a, b] : pairs) arr.push_back(njson::array({a, b}));
  return arr;
}

inline CasePattern pattern_from_json(const njson& arr) {
  CasePattern p;
  for (const auto& s : arr) {
    std::string tok = s.get<std::string>();
    p.slots.push_back(tok == "*" ? 0 : std::stoi(tok));
  }
  return p;
}

inline njson pattern_to_json(const CasePattern& p) {
  njson arr = njson::array();
  for (int s : p.slots)
    arr.push_back(s == 0 ? std::string("*") : std::to_string(s));
  return arr;
}

// "2,*,7" style, for command lines
inline CasePattern parse_pattern(const std::string& text) {
  CasePattern p;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string tok = text.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    if (tok == "*")
      p.slots.push_back(0);
    else if (!tok.empty() &&
             tok.find_first_not_of("0123456789") == std::string::npos)
      p.slots.push_back(std::stoi(tok));
    else
      throw std::invalid_argument("bad case token '" + tok + "'");
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return p;
}

inline ProofScheme scheme_from_json(const njson& j) {
  int n = j.at("n").get<int>();
  std::vector<TupleSpec> tuples;
  for (const auto& t : j.at("tuples"))
    tuples.push_back(TupleSpec{n, pairs_from_json(t)});
  return finalize_scheme(n, std::move(tuples));
}

inline std::vector<Certificate> certificates_from_json(const njson& j,
                                                       int n = 9) {
  std::vector<Certificate> out;
  for (const auto& e : j) {
    Certificate c;
    c.tuple = TupleSpec{n, pairs_from_json(e.at("tuple"))};
    c.pattern = pattern_from_json(e.at("case"));
    c.R = vector_from_json(e.at("R"));
    for (const auto& x : e.at("lambda"))
      c.lambda.push_back(rational_from_json(x));
    validate_certificate_shape(c);
    out.push_back(std::move(c));
  }
  return out;
}

inline njson certificate_to_json(const Certificate& c) {
  return njson{{"tuple", pairs_to_json(c.tuple.pairs)},
               {"case", pattern_to_json(c.pattern)},
               {"R", vector_to_json(c.R)},
               {"lambda", lambda_to_json(c.lambda)}};
}

inline std::vector<Witness> witnesses_from_json(const njson& j) {
  std::vector<Witness> out;
  for (const auto& e : j)
    out.push_back(Witness{e.at("leg").get<int>(), vector_from_json(e.at("R"))});
  return out;
}

inline njson witness_to_json(const Witness& w) {
  return njson{{"leg", w.leg}, {"R", vector_to_json(w.R)}};
}

inline RowScheme row_scheme_from_json(const njson& j) {
  RowScheme rs;
  rs.n = j.at("n").get<int>();
  for (const auto& row : j.at("rows")) {
    RowScheme::Row r;
    for (const auto& seg : row) {
      RowScheme::Segment s;
      s.pairs = pairs_from_json(seg.at("pairs"));
      if (seg.contains("decorated"))
        s.decorated = pairs_from_json(seg.at("decorated"));
      r.push_back(std::move(s));
    }
    rs.rows.push_back(std::move(r));
  }
  validate_row_scheme(rs);
  return rs;
}

inline njson row_scheme_to_json(const RowScheme& rs) {
  njson rows = njson::array();
  for (const auto& row : rs.rows) {
    njson r = njson::array();
    for (const auto& seg : row) {
      njson s{{"pairs", pairs_to_json(seg.pairs)}};
      if (!seg.decorated.empty()) s["decorated"] = pairs_to_json(seg.decorated);
      r.push_back(std::move(s));
    }
    rows.push_back(std::move(r));
  }
  return njson{{"n", rs.n}, {"rows", rows}};
}

// vector library with optional claimed strict fractions, in claim-table order
inline std::vector<LibraryVector> library_from_json(const njson& j) {
  std::vector<LibraryVector> out;
  for (const auto& claim : j.at("claimed_fractions")) {
    LibraryVector lv;
    lv.name = claim.at("name").get<std::string>();
    lv.claimed_k = claim.at("k").get<int>();
    if (!claim.at("claimed").is_null()) {
      lv.has_claim = true;
      lv.claimed = rational_from_json(claim.at("claimed"));
    }
    bool found = false;
    for (const auto& v : j.at("vectors"))
      if (v.at("name").get<std::string>() == lv.name) {
        lv.v = vector_from_json(v.at("v"));
        found = true;
        break;
      }
    if (!found)
      throw std::invalid_argument("library vector " + lv.name + " missing");
    out.push_back(std::move(lv));
  }
  return out;
}

// named library lookup (R0, R2, ...) for commands that take a vector by name
inline RowVector library_vector(const njson& j, const std::string& name) {
  for (const auto& v : j.at("vectors"))
    if (v.at("name").get<std::string>() == name)
      return vector_from_json(v.at("v"));
  throw std::invalid_argument("no library vector named " + name);
}

inline njson dual_to_json(const DualWitness& d) {
  return njson{{"u", vector_to_json(d.u)},
               {"v", lambda_to_json(d.v)},
               {"w", to_string(d.w)}};
}

inline njson qp_result_to_json(const TupleSpec& t, const CasePattern& p,
                               const QPResult& qp) {
  return njson{{"tuple", pairs_to_json(t.pairs)},
               {"case", pattern_to_json(p)},
               {"R", vector_to_json(qp.R)},
               {"lambda", lambda_to_json(qp.lambda)},
               {"value", to_string(qp.value)},
               {"status", qp.status == QPStatus::CERT ? "CERT" : "REFUTE"},
               {"dual", dual_to_json(qp.dual)}};
}

inline njson report_to_json(const VerificationReport& rep) {
  njson tuples = njson::array();
  for (const auto& tr : rep.tuples) {
    njson cases = njson::array();
    for (const auto& cr : tr.cases) {
      njson c{{"pattern", pattern_to_json(cr.pattern)},
              {"verdict", cr.ok ? "PASS" : "FAIL"}};
      if (cr.certificate_id >= 0)
        c["certificate_id"] = cr.certificate_id;
      else
        c["certificate_id"] = nullptr;
      cases.push_back(std::move(c));
    }
    tuples.push_back(
        njson{{"pairs", pairs_to_json(tr.tuple.pairs)}, {"cases", cases}});
  }
  return njson{{"verdict", rep.pass ? "PASS" : "FAIL"},
               {"n", rep.n},
               {"tuples", tuples},
               {"classification",
                njson{{"twins", pairs_to_json(rep.twins)},
                      {"non_twins", pairs_to_json(rep.non_twins)}}},
               {"failures", rep.failures}};
}

}  // namespace signcert
