#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <signcert/rational.hpp>
#include <signcert/vector.hpp>

#include "test_util.hpp"

using namespace signcert;

TEST_CASE("rational parse and print round-trip in lowest terms", "[exactnum]") {
  CHECK(to_string(parse_rational("2/4")) == "1/2");
  CHECK(to_string(parse_rational("-6/4")) == "-3/2");
  CHECK(to_string(parse_rational("3/-6")) == "-1/2");
  CHECK(to_string(parse_rational("0/7")) == "0");
  CHECK(to_string(parse_rational("7/1")) == "7");
  CHECK(to_string(parse_rational("+3")) == "3");
  CHECK(to_string(parse_rational("-0")) == "0");

  for (const char* s : {"1/2", "-3/7", "0", "12345/67", "-1"})
    CHECK(to_string(parse_rational(s)) == s);
}

TEST_CASE("rational parse rejects malformed tokens", "[exactnum]") {
  for (const char* s : {"1/0", "0/0", "1.5", "", " 1", "1 ", "1/ 2", "a",
                        "1//2", "1/", "/2", "0x10", "1e3"})
    CHECK_THROWS_AS(parse_rational(s), std::invalid_argument);
}

TEST_CASE("make_rational canonicalizes and rejects zero denominators",
          "[exactnum]") {
  CHECK(make_rational(3, -6) == make_rational(-1, 2));
  CHECK(make_rational(0, 5) == 0);
  CHECK(make_rational(2, 4) + make_rational(1, 4) == make_rational(3, 4));
  CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);
}

TEST_CASE("sign_of", "[exactnum]") {
  CHECK(sign_of(make_rational(3, 7)) == 1);
  CHECK(sign_of(make_rational(-3, 7)) == -1);
  CHECK(sign_of(Rational(0)) == 0);
}

TEST_CASE("vector parse enforces arity and token validity", "[exactnum]") {
  RowVector v = parse_vector("1/2,-3,0", 3);
  CHECK(to_string(v) == "1/2,-3,0");
  CHECK_THROWS_AS(parse_vector("1,2", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_vector("1,2,3,4", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_vector("1,x,3", 3), std::invalid_argument);
}

TEST_CASE("dot products of the library vectors", "[exactnum]") {
  RowVector r3 = vec9("1/3,1/3,1/3,1/3,1/3,1/3,1/3,1/3,1/3");
  RowVector w231 = vec9("1/2,1/2,1/2,1/2,1/5,1/5,1/5,1/5,1/5");
  RowVector w240 = vec9("3/5,3/5,3/5,3/5,3/5,0,0,0,0");
  CHECK(dot(r3, r3) == 1);
  CHECK(dot(w231, w231) == make_rational(6, 5));
  CHECK(dot(w240, w240) == make_rational(9, 5));
  CHECK(dot(r3, w240) == 1);  // (5 * 3/5) / 3
}

TEST_CASE("dot is symmetric and bilinear", "[exactnum]") {
  std::mt19937_64 gen(7);
  auto rnd = [&] {
    RowVector v(5);
    for (auto& x : v)
      x = make_rational(static_cast<long>(gen() % 21) - 10,
                        static_cast<long>(gen() % 9) + 1);
    return v;
  };
  for (int it = 0; it < 200; ++it) {
    RowVector a = rnd(), b = rnd(), c = rnd();
    Rational s = make_rational(static_cast<long>(gen() % 11) - 5,
                               static_cast<long>(gen() % 7) + 1);
    CHECK(dot(a, b) == dot(b, a));
    CHECK(dot(a, add(b, c)) == dot(a, b) + dot(a, c));
    CHECK(dot(scale(s, a), b) == s * dot(a, b));
    CHECK(norm2(a) >= 0);
    CHECK(norm2(sub(a, a)) == 0);
  }
}

TEST_CASE("cumsum and vector arithmetic", "[exactnum]") {
  RowVector v = parse_vector("1,-2,3", 3);
  RowVector c = cumsum(v);
  CHECK(to_string(c) == "1,-1,2");
  CHECK(is_zero(zero_vector(4)));
  CHECK(to_string(neg(v)) == "-1,2,-3");
  CHECK(to_string(add(v, neg(v))) == "0,0,0");
}

TEST_CASE("dimension mismatch is rejected", "[exactnum]") {
  RowVector a = parse_vector("1,2", 2), b = parse_vector("1,2,3", 3);
  CHECK_THROWS_AS(dot(a, b), std::invalid_argument);
  CHECK_THROWS_AS(add(a, b), std::invalid_argument);
  CHECK_THROWS_AS(sub(b, a), std::invalid_argument);
}
