#include <catch2/catch_amalgamated.hpp>

#include <signcert/signspace.hpp>

#include "test_util.hpp"

using namespace signcert;

namespace {
std::vector<int> coords_of(std::uint32_t index, int n) {
  return signvec_of_index(index, n).coords();
}
}  // namespace

TEST_CASE("index convention anchors", "[signspace]") {
  CHECK(coords_of(31, 9) == std::vector<int>{1, 1, 1, 1, -1, -1, -1, -1, -1});
  CHECK(coords_of(106, 9) == std::vector<int>{1, 1, -1, -1, 1, -1, 1, -1, 1});
  CHECK(index_of({1, -1, -1, -1, 1, 1, 1, 1, 1}) == 224);
  CHECK(coords_of(0, 9) == std::vector<int>(9, 1));
  CHECK(coords_of(511, 9) == std::vector<int>(9, -1));
}

TEST_CASE("space sizes and dimension guard", "[signspace]") {
  CHECK(space_size(9) == 512);
  CHECK(half_size(9) == 256);
  CHECK(space_size(2) == 4);
  CHECK_THROWS_AS(check_dim(0), std::invalid_argument);
  CHECK_THROWS_AS(check_dim(17), std::invalid_argument);
}

TEST_CASE("index round-trip over the full space", "[signspace]") {
  for (std::uint32_t i = 0; i < 512; ++i)
    CHECK(index_of(coords_of(i, 9)) == i);
  for (std::uint32_t i = 0; i < 8; ++i)
    CHECK(index_of(coords_of(i, 3)) == i);
  CHECK_THROWS_AS(index_of({1, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(signvec_of_index(512, 9), std::invalid_argument);
}

TEST_CASE("conjugation flips everything but the leading coordinate",
          "[signspace]") {
  for (std::uint32_t i = 0; i < 256; ++i) {
    std::uint32_t j = conjugate_index(i, 9);
    CHECK(j == 255 - i);
    auto a = coords_of(i, 9), b = coords_of(j, 9);
    CHECK(a[0] == b[0]);
    for (int m = 1; m < 9; ++m) CHECK(a[m] == -b[m]);
  }
  CHECK_THROWS_AS(conjugate_index(256, 9), std::invalid_argument);
}

TEST_CASE("negation and the xor group structure", "[signspace]") {
  CHECK(negation_index(0, 9) == 511);
  CHECK(negation_index(224, 9) == 287);
  CHECK(group_product(93, 162) == 255);
  for (std::uint32_t i : {0u, 31u, 106u, 224u, 511u}) {
    CHECK(group_product(i, 0) == i);
    CHECK(group_product(i, i) == 0);
    // coordinatewise product really is the xor of indices
    for (std::uint32_t j : {5u, 93u, 162u}) {
      auto a = coords_of(i, 9), b = coords_of(j, 9),
           c = coords_of(group_product(i, j), 9);
      for (int m = 0; m < 9; ++m) CHECK(c[m] == a[m] * b[m]);
    }
  }
}

TEST_CASE("eval_product against hand values", "[signspace]") {
  RowVector w240 = vec9("3/5,3/5,3/5,3/5,3/5,0,0,0,0");
  RowVector r5 = vec9("3/5,3/5,1/5,1/5,1/5,1/5,1/5,1/5,1/5");
  CHECK(eval_product(240, 9, w240) == make_rational(-9, 5));
  CHECK(eval_product(15, 9, w240) == 3);
  CHECK(eval_product(106, 9, r5) == 1);
  CHECK(eval_product(0, 9, r5) == make_rational(13, 5));
}

TEST_CASE("a pair and its conjugate sum to twice the leading weight",
          "[signspace]") {
  RowVector a = vec9("9,7,6,5,4,3,2,1,1/2");
  for (std::uint32_t i = 0; i < 256; ++i)
    CHECK(eval_product(i, 9, a) + eval_product(conjugate_index(i, 9), 9, a) ==
          2 * a[0]);
}

TEST_CASE("sign vector printing", "[signspace]") {
  CHECK(to_string(SignVector{9, 106}) == "ε106=(+,+,-,-,+,-,+,-,+)");
  CHECK(to_string(SignVector{3, 2}) == "ε2=(+,-,+)");
}

TEST_CASE("sign_row matches the coordinate view", "[signspace]") {
  RowVector r = sign_row(106, 9);
  auto c = coords_of(106, 9);
  for (int m = 0; m < 9; ++m) CHECK(r[m] == c[m]);
}
