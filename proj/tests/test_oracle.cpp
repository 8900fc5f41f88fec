#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include <signcert/io_json.hpp>
#include <signcert/oracle.hpp>

#include "test_util.hpp"

using namespace signcert;

namespace {
CountResult count9(const std::string& text) { return count_good(vec9(text)); }
}  // namespace

TEST_CASE("exhaustive counts at the library vectors", "[oracle]") {
  CountResult r1 = count9("1,0,0,0,0,0,0,0,0");
  CHECK(r1.total == 512);
  CHECK(r1.count_lt == 0);
  CHECK(r1.count_le == 512);

  CountResult r2 = count9("1/2,1/2,1/2,1/2,0,0,0,0,0");
  CHECK(r2.count_lt == 192);  // 3/8
  CHECK(r2.count_le == 448);

  CountResult r3s = count9("2/3,1/3,1/3,1/3,1/3,1/3,0,0,0");
  CHECK(r3s.count_lt == 240);  // 15/32
  CHECK(r3s.count_le == 416);

  CountResult r3 = count9("1/3,1/3,1/3,1/3,1/3,1/3,1/3,1/3,1/3");
  CHECK(r3.count_lt == 252);  // 63/128
  CHECK(r3.count_le == 420);

  CountResult r4 = count9("3/4,1/4,1/4,1/4,1/4,1/4,1/4,1/4,0");
  CHECK(r4.count_lt == 252);  // 63/128, not the claimed 7/16

  CountResult r5 = count9("3/5,3/5,1/5,1/5,1/5,1/5,1/5,1/5,1/5");
  CHECK(r5.count_lt == 282);  // 141/256
  CHECK(r5.count_le == 380);

  CountResult r6 = count9("2/3,1/3,1/3,1/3,1/3,1/6,1/6,1/6,1/6");
  CHECK(r6.count_lt == 290);  // 145/256
}

TEST_CASE("counts are even and at least half weak for cone vectors",
          "[oracle]") {
  std::mt19937_64 gen(37);
  for (int it = 0; it < 60; ++it) {
    RowVector a = random_cone_vector(gen, 9);
    CountResult c = count_good(a);
    CHECK(c.count_lt % 2 == 0);
    CHECK(c.count_le % 2 == 0);
    CHECK(2 * c.count_le >= c.total);
    CHECK(8 * c.count_lt >= 3 * c.total);  // strict fraction floor seen at R2
  }
}

TEST_CASE("counting is invariant under permutation and sign flips",
          "[oracle]") {
  std::mt19937_64 gen(41);
  for (int it = 0; it < 30; ++it) {
    RowVector a = random_cone_vector(gen, 7);
    RowVector b = a;
    std::shuffle(b.begin(), b.end(), gen);
    for (auto& x : b)
      if (gen() & 1) x = -x;
    CountResult ca = count_good(a), cb = count_good(b);
    CHECK(ca.count_lt == cb.count_lt);
    CHECK(ca.count_le == cb.count_le);
  }
}

TEST_CASE("a trailing zero doubles both counts", "[oracle]") {
  std::mt19937_64 gen(43);
  for (int it = 0; it < 20; ++it) {
    RowVector a = random_cone_vector(gen, 6);
    RowVector b = a;
    b.push_back(Rational(0));
    CountResult ca = count_good(a), cb = count_good(b);
    CHECK(cb.total == 2 * ca.total);
    CHECK(cb.count_lt == 2 * ca.count_lt);
    CHECK(cb.count_le == 2 * ca.count_le);
  }
}

TEST_CASE("count_good survives adversarial denominators", "[oracle]") {
  // forces the arbitrary-precision path: lcm around 10^17, scaled sums > 2^62
  RowVector a = parse_vector(
      "999999999999999989/2,1000000000000000003/3,999999999999999999/7,1/11",
      4);
  CountResult c = count_good(a);
  CHECK(c.total == 16);
  CHECK(c.count_le == 8);
  CHECK(c.count_lt == 8);
  CHECK_THROWS_AS(count_good(RowVector{}), std::invalid_argument);
}

TEST_CASE("two-dimensional minimum over a positive grid is one half",
          "[oracle]") {
  Rational best = 1;
  for (int p = 1; p <= 6; ++p)
    for (int q = 0; q <= p; ++q) {
      RowVector a = {make_rational(p, 6), make_rational(q, 6)};
      CountResult c = count_good(a);
      Rational f = make_rational(c.count_le, c.total);
      best = std::min(best, f);
    }
  CHECK(best == make_rational(1, 2));
}

TEST_CASE("library table pins computed against claimed fractions", "[oracle]") {
  auto lib = library_from_json(load_json(data_path("vector_library.json")));
  auto table = hk_table(lib);
  REQUIRE(table.size() == 7);

  auto row = [&](const std::string& name) {
    for (const auto& e : table)
      if (e.name == name) return e;
    FAIL("missing row " + name);
    return table[0];
  };

  CHECK(row("R1").fraction_lt == 0);
  CHECK(row("R1").match);
  CHECK(row("R2").fraction_lt == make_rational(3, 8));
  CHECK(row("R2").match);
  CHECK(row("R3*").fraction_lt == make_rational(15, 32));
  CHECK(row("R3*").match);
  CHECK(row("R3").fraction_lt == make_rational(63, 128));
  CHECK(row("R3").match);

  auto r4 = row("R4");
  CHECK(r4.fraction_lt == make_rational(63, 128));
  CHECK(r4.has_claim);
  CHECK(r4.claimed == make_rational(7, 16));
  CHECK_FALSE(r4.match);  // computed value wins over the published one

  CHECK_FALSE(row("R5").has_claim);
  CHECK(row("R5").fraction_lt == make_rational(141, 256));
  CHECK_FALSE(row("R6").has_claim);
  CHECK(row("R6").fraction_lt == make_rational(145, 256));
}

TEST_CASE("seeded sampling is deterministic and job-count independent",
          "[oracle]") {
  Rational a = sample_min_fraction(9, 1500, 42, 1);
  Rational b = sample_min_fraction(9, 1500, 42, 1);
  Rational c = sample_min_fraction(9, 1500, 42, 4);
  CHECK(a == b);
  CHECK(a == c);
  Rational d = sample_min_fraction(9, 1500, 43, 1);
  CHECK(d >= make_rational(1, 2));  // different seed, same theorem
  CHECK(a >= make_rational(1, 2));
}

TEST_CASE("derive_seed spreads master seeds", "[oracle]") {
  CHECK(derive_seed(1, 0) != derive_seed(1, 1));
  CHECK(derive_seed(1, 0) != derive_seed(2, 0));
  CHECK(derive_seed(7, 3) == derive_seed(7, 3));
}
