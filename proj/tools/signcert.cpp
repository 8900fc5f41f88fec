// Command-line front end. Subcommands: verify, classify, twin, solve-qp,
// solve-lambda, count, hk-table, sample, lattice, reduce-scheme.
// Exit codes: 0 success/PASS, 1 verification FAIL, 2 input error.
// Reports are deterministic; timing goes to stderr only.

#include <chrono>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <signcert/io_json.hpp>

using namespace signcert;

namespace {

int exit_code = 0;

TupleSpec tuple_from_flat(const std::string& text, int n) {
  std::vector<int> idx;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string tok = text.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    idx.push_back(std::stoi(tok));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (idx.size() % 2 != 0 || idx.empty())
    throw std::invalid_argument("tuple needs an even number of indices");
  TupleSpec t;
  t.n = n;
  for (std::size_t i = 0; i < idx.size(); i += 2)
    t.pairs.emplace_back(idx[i], idx[i + 1]);
  validate_tuple(t);
  return t;
}

void print_leg(const LegDecision& d, int n) {
  if (d.status == QPStatus::REFUTE)
    std::cout << "leg " << d.leg << ": non-twin leg, witness R=("
              << to_string(d.R) << "), RR'=" << to_string(d.value) << " > 1\n";
  else
    std::cout << "leg " << d.leg << ": certificate R=(" << to_string(d.R)
              << "), RR'=" << to_string(d.value) << " <= 1\n";
  (void)n;
}

void write_or_print(const njson& j, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << j.dump(1) << "\n";
  } else {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(1) << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact certificate toolkit for sign-vector concentration"};
  app.require_subcommand(1);

  // ---- verify ----
  auto* verify = app.add_subcommand(
      "verify", "check the shipped scheme + certificates end to end");
  std::string v_scheme = "data/partition_scheme.json";
  std::string v_certs = "data/case_certificates.json";
  std::string v_wit, v_report;
  int v_jobs = 1;
  verify->add_option("--scheme", v_scheme, "scheme JSON")->capture_default_str();
  verify->add_option("--certs", v_certs, "certificate JSON")
      ->capture_default_str();
  verify->add_option("--witnesses", v_wit,
                     "also validate this refutation-witness JSON");
  verify->add_option("--report", v_report, "write the report JSON here");
  verify->add_option("--jobs", v_jobs, "worker bound for classification");
  verify->callback([&] {
    auto t0 = std::chrono::steady_clock::now();
    ProofScheme scheme = scheme_from_json(load_json(v_scheme));
    std::vector<Certificate> certs =
        certificates_from_json(load_json(v_certs), scheme.n);
    Classification cls = classify_pairs(scheme.n, v_jobs);
    VerificationReport rep = verify_all(scheme, certs, cls);
    if (!v_wit.empty()) {
      std::vector<Witness> ws = witnesses_from_json(load_json(v_wit));
      std::vector<char> refuted(half_size(scheme.n), 0);
      for (const auto& d : cls.decisions)
        if (d.status == QPStatus::REFUTE) refuted[d.leg] = 1;
      std::size_t seen = 0;
      for (const auto& w : ws) {
        CheckResult r = check_witness(w, scheme.n);
        if (!r.ok)
          rep.failures.push_back("witness leg " + std::to_string(w.leg) + ": " +
                                 r.clause);
        else if (!refuted[w.leg])
          rep.failures.push_back("witness leg " + std::to_string(w.leg) +
                                 " is not a refuted leg");
        else
          ++seen;
      }
      if (seen != cls.witnesses.size())
        rep.failures.push_back(
            "witness file covers " + std::to_string(seen) + " of " +
            std::to_string(cls.witnesses.size()) + " refuted legs");
      rep.pass = rep.failures.empty();
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                              t0)
                    .count();
    std::cout << "verdict " << (rep.pass ? "PASS" : "FAIL") << "\n";
    std::cout << rep.tuples.size() << " covered units, "
              << rep.non_twins.size() << " non-twin pairs, "
              << rep.twins.size() << " twin pairs\n";
    for (const auto& f : rep.failures) std::cout << "failure: " << f << "\n";
    if (!v_report.empty()) write_or_print(report_to_json(rep), v_report);
    std::cerr << "verify took " << dt << "s\n";
    exit_code = rep.pass ? 0 : 1;
  });

  // ---- classify ----
  auto* classify =
      app.add_subcommand("classify", "split all conjugate pairs twin/non-twin");
  bool c_json = false;
  int c_jobs = 1;
  classify->add_flag("--json", c_json, "JSON output");
  classify->add_option("--jobs", c_jobs, "worker bound");
  classify->callback([&] {
    Classification cls = classify_pairs(9, c_jobs);
    if (c_json) {
      njson ws = njson::array();
      for (const auto& w : cls.witnesses) ws.push_back(witness_to_json(w));
      write_or_print(njson{{"twins", pairs_to_json(cls.twins)},
                           {"non_twins", pairs_to_json(cls.non_twins)},
                           {"witnesses", ws}},
                     "");
    } else {
      std::cout << cls.twins.size() + cls.non_twins.size()
                << " conjugate pairs: " << cls.twins.size() << " twin, "
                << cls.non_twins.size() << " non-twin\n";
      std::cout << "non-twin j-list:";
      for (const auto& p : cls.non_twins) std::cout << " " << p.second;
      std::cout << "\n";
    }
  });

  // ---- twin ----
  auto* twin = app.add_subcommand("twin", "decide one conjugate pair");
  int t_leg = 0;
  twin->add_option("leg", t_leg, "any leg index in S+")->required();
  twin->callback([&] {
    int n = 9;
    int a = t_leg, b = static_cast<int>(conjugate_index(t_leg, n));
    if (a > b) std::swap(a, b);
    QPResult qa = decide_leg(a, n), qb = decide_leg(b, n);
    bool nt = qa.status == QPStatus::REFUTE || qb.status == QPStatus::REFUTE;
    std::cout << "pair (" << a << "," << b << "): "
              << (nt ? "non-twin" : "twin") << "\n";
    print_leg(LegDecision{a, qa.status, qa.R, qa.value}, n);
    print_leg(LegDecision{b, qb.status, qb.R, qb.value}, n);
  });

  // ---- solve-qp ----
  auto* sqp = app.add_subcommand("solve-qp",
                                 "minimum-norm solve of one tuple case");
  std::string q_tuple, q_case;
  int q_n = 9;
  bool q_json = false;
  sqp->add_option("--tuple", q_tuple, "flat index list, pairs adjacent")
      ->required();
  sqp->add_option("--case", q_case, "slot list, e.g. 2,*,5,8")->required();
  sqp->add_option("--n", q_n, "dimension")->capture_default_str();
  sqp->add_flag("--json", q_json, "JSON output");
  sqp->callback([&] {
    TupleSpec t = tuple_from_flat(q_tuple, q_n);
    CasePattern p = parse_pattern(q_case);
    QPResult qp = qp_min_norm(t, p);
    if (q_json) {
      write_or_print(qp_result_to_json(t, p, qp), "");
    } else {
      std::cout << "R = (" << to_string(qp.R) << ")\n";
      std::cout << "lambda = (";
      for (std::size_t i = 0; i < qp.lambda.size(); ++i)
        std::cout << (i ? "," : "") << to_string(qp.lambda[i]);
      std::cout << ")\nvalue = " << to_string(qp.value) << "  ["
                << (qp.status == QPStatus::CERT ? "CERT" : "REFUTE") << "]\n";
      std::cout << "dual u = (" << to_string(qp.dual.u) << "), w = "
                << to_string(qp.dual.w) << "\n";
    }
    exit_code = 0;
  });

  // ---- solve-lambda ----
  auto* slam = app.add_subcommand(
      "solve-lambda", "best simplex weights for a fixed R (margin LP)");
  std::string l_R, l_tuple, l_case;
  int l_n = 9;
  bool l_json = false;
  slam->add_option("--R", l_R, "vector, comma-separated rationals")->required();
  slam->add_option("--tuple", l_tuple, "flat index list")->required();
  slam->add_option("--case", l_case, "slot list")->required();
  slam->add_option("--n", l_n, "dimension")->capture_default_str();
  slam->add_flag("--json", l_json, "JSON output");
  slam->callback([&] {
    TupleSpec t = tuple_from_flat(l_tuple, l_n);
    CasePattern p = parse_pattern(l_case);
    RowVector R = parse_vector(l_R, l_n);
    LPResult lp = lp_max_margin(R, t, p);
    if (l_json) {
      write_or_print(njson{{"lambda", lambda_to_json(lp.lambda)},
                           {"margin", to_string(lp.margin)}},
                     "");
    } else {
      std::cout << "lambda = (";
      for (std::size_t i = 0; i < lp.lambda.size(); ++i)
        std::cout << (i ? "," : "") << to_string(lp.lambda[i]);
      std::cout << ")\nmargin = " << to_string(lp.margin)
                << (lp.margin >= 0 ? "  (certificate body)" : "  (none here)")
                << "\n";
    }
  });

  // ---- count ----
  auto* count = app.add_subcommand(
      "count", "exhaustive good-sign count for a weight vector");
  std::string n_vec;
  bool n_strict = false;
  count->add_option("a", n_vec, "weight vector, comma-separated rationals")
      ->required();
  count->add_flag("--strict", n_strict, "count (eps a)^2 < aa' instead of <=");
  count->callback([&] {
    std::size_t dim = 1;
    for (char ch : n_vec)
      if (ch == ',') ++dim;
    RowVector a = parse_vector(n_vec, dim);
    CountResult c = count_good(a);
    std::cout << (n_strict ? c.count_lt : c.count_le) << "/" << c.total
              << "\n";
  });

  // ---- hk-table ----
  auto* hk = app.add_subcommand(
      "hk-table", "strict fractions at the library vectors vs claims");
  std::string h_vectors = "data/vector_library.json";
  std::string h_csv;
  hk->add_option("--vectors", h_vectors, "vector library JSON")
      ->capture_default_str();
  hk->add_option("--csv", h_csv, "write CSV here ('-' = stdout)");
  hk->callback([&] {
    auto lib = library_from_json(load_json(h_vectors));
    auto table = hk_table(lib);
    if (!h_csv.empty()) {
      std::string out = "k,vector,computed,claimed,match\n";
      for (const auto& e : table) {
        out += std::to_string(e.k) + "," + e.name + "," +
               to_string(e.fraction_lt) + ",";
        out += e.has_claim ? to_string(e.claimed) : "";
        out += ",";
        out += e.has_claim ? (e.match ? "true" : "false") : "";
        out += "\n";
      }
      if (h_csv == "-") {
        std::cout << out;
      } else {
        std::ofstream f(h_csv);
        if (!f) throw std::runtime_error("cannot write " + h_csv);
        f << out;
      }
    } else {
      std::cout << "k  vector  computed  claimed  match\n";
      for (const auto& e : table) {
        std::cout << e.k << "  " << e.name << "  " << to_string(e.fraction_lt)
                  << "  ";
        if (e.has_claim)
          std::cout << to_string(e.claimed) << "  "
                    << (e.match ? "agree" : "DISAGREE");
        else
          std::cout << "-  -";
        std::cout << "\n";
      }
    }
  });

  // ---- sample ----
  auto* sample = app.add_subcommand(
      "sample", "random-vector spot check of the half-space bound");
  int s_n = 9, s_jobs = 1;
  std::uint64_t s_samples = 0, s_seed = 0;
  sample->add_option("--n", s_n, "dimension")->capture_default_str();
  sample->add_option("--samples", s_samples, "number of draws")->required();
  sample->add_option("--seed", s_seed, "RNG seed (mandatory)")->required();
  sample->add_option("--jobs", s_jobs, "worker bound");
  sample->callback([&] {
    Rational f = sample_min_fraction(s_n, s_samples, s_seed, s_jobs);
    std::cout << "min_fraction " << to_string(f) << "\n";
    exit_code = f >= make_rational(1, 2) ? 0 : 1;
  });

  // ---- lattice ----
  auto* lattice =
      app.add_subcommand("lattice", "join or meet of two sign vectors");
  std::string op;
  int la = 0, lb = 0, lat_n = 9;
  lattice->add_option("op", op, "join or meet")->required();
  lattice->add_option("i", la, "first index")->required();
  lattice->add_option("j", lb, "second index")->required();
  lattice->add_option("--n", lat_n, "dimension")->capture_default_str();
  lattice->callback([&] {
    if (op != "join" && op != "meet")
      throw std::invalid_argument("lattice op must be join or meet");
    RowVector r = op == "join"
                      ? join(sign_row(la, lat_n), sign_row(lb, lat_n))
                      : meet(sign_row(la, lat_n), sign_row(lb, lat_n));
    std::vector<int> coords(lat_n);
    for (int m = 0; m < lat_n; ++m)
      coords[m] = r[m] == 1 ? 1 : (r[m] == -1 ? -1 : 0);
    SignVector sv{lat_n, index_of(coords)};
    std::cout << to_string(sv) << "\n";
  });

  // ---- reduce-scheme ----
  auto* reduce = app.add_subcommand(
      "reduce-scheme", "halve the row scheme down to lower dimensions");
  std::string r_rows = "data/row_scheme.json";
  int r_to = 5;
  bool r_json = false;
  reduce->add_option("--rows", r_rows, "row scheme JSON")->capture_default_str();
  reduce->add_option("--to", r_to, "stop dimension")->capture_default_str();
  reduce->add_flag("--json", r_json, "JSON output of every level");
  reduce->callback([&] {
    RowScheme rs = row_scheme_from_json(load_json(r_rows));
    njson levels = njson::array();
    std::ostream& log = r_json ? std::cerr : std::cout;
    log << "n=" << rs.n << ": " << rs.rows.size() << " rows, partition valid\n";
    if (r_json) levels.push_back(row_scheme_to_json(rs));
    while (rs.n > r_to) {
      rs = reduce_even_rows(rs);
      scheme_from_rows(rs);  // also valid as a partition scheme
      log << "n=" << rs.n << ": " << rs.rows.size()
          << " rows, partition valid\n";
      if (r_json) levels.push_back(row_scheme_to_json(rs));
    }
    if (r_json) write_or_print(levels, "");
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
