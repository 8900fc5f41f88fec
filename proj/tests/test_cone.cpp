#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include <signcert/cone.hpp>
#include <signcert/oracle.hpp>
#include <signcert/signspace.hpp>

#include "test_util.hpp"

using namespace signcert;

namespace {
std::uint32_t index_of_row(const RowVector& r) {
  std::vector<int> c(r.size());
  for (std::size_t m = 0; m < r.size(); ++m)
    c[m] = r[m] == 1 ? 1 : (r[m] == -1 ? -1 : 0);
  return index_of(c);
}
}  // namespace

TEST_CASE("cone membership via sortedness and nonnegativity", "[cone]") {
  CHECK(in_Q(parse_vector("3,1,0", 3)));
  CHECK(in_Q(parse_vector("1/2,1/2,1/3", 3)));
  CHECK_FALSE(in_Q(parse_vector("1,2,0", 3)));
  CHECK_FALSE(in_Q(parse_vector("1,-1,0", 3)));
  CHECK(in_Q(zero_vector(5)));
  // equivalent first-principles definition
  std::mt19937_64 gen(11);
  for (int it = 0; it < 1000; ++it) {
    RowVector v(5);
    for (auto& x : v)
      x = make_rational(static_cast<long>(gen() % 7) - 3,
                        static_cast<long>(gen() % 4) + 1);
    bool ref = std::is_sorted(v.rbegin(), v.rend()) && v.back() >= 0;
    CHECK(in_Q(v) == ref);
  }
}

TEST_CASE("dual cone membership via partial sums", "[cone]") {
  CHECK(in_Qstar(parse_vector("1,0,-1", 3)));
  CHECK_FALSE(in_Qstar(parse_vector("-1,2,0", 3)));
  CHECK(in_Qstar(vec9("3/2,-1/2,-1/2,-1/2,1,1,1,1,1")));
  CHECK(first_negative_partial(parse_vector("1,-3,1", 3)) == 2);
  CHECK(first_negative_partial(parse_vector("1,0,-1", 3)) == 0);
}

TEST_CASE("failed dual membership yields an explicit separating cone vector",
          "[cone]") {
  std::mt19937_64 gen(13);
  for (int it = 0; it < 500; ++it) {
    RowVector x(6);
    for (auto& e : x)
      e = make_rational(static_cast<long>(gen() % 9) - 4,
                        static_cast<long>(gen() % 3) + 1);
    int k = first_negative_partial(x);
    if (k == 0) {
      CHECK(in_Qstar(x));
      continue;
    }
    CHECK_FALSE(in_Qstar(x));
    RowVector a(6, Rational(0));  // prefix indicator lies in Q
    for (int i = 0; i < k; ++i) a[i] = 1;
    CHECK(in_Q(a));
    CHECK(dot(x, a) < 0);
  }
}

TEST_CASE("pairing duality on random members", "[cone]") {
  std::mt19937_64 gen(17);
  for (int it = 0; it < 300; ++it) {
    RowVector a = random_cone_vector(gen, 9);
    REQUIRE(in_Q(a));
    // every sign vector with nonnegative partial sums pays out nonnegatively
    std::uint32_t i = static_cast<std::uint32_t>(gen() % 512);
    RowVector x = sign_row(i, 9);
    if (in_Qstar(x)) CHECK(dot(x, a) >= 0);
  }
}

TEST_CASE("join and meet of the motivating pair", "[cone]") {
  RowVector j = join(sign_row(219, 9), sign_row(234, 9));
  RowVector m = meet(sign_row(219, 9), sign_row(234, 9));
  CHECK(index_of_row(j) == 218);
  CHECK(index_of_row(m) == 235);
}

TEST_CASE("sign vectors are closed under join and meet", "[cone]") {
  std::mt19937_64 gen(19);
  for (int it = 0; it < 1000; ++it) {
    std::uint32_t i = static_cast<std::uint32_t>(gen() % 256);
    std::uint32_t j = static_cast<std::uint32_t>(gen() % 256);
    RowVector a = sign_row(i, 9), b = sign_row(j, 9);
    RowVector jo = join(a, b), me = meet(a, b);
    std::uint32_t ji = index_of_row(jo), mi = index_of_row(me);  // throws if not +-1
    CHECK(ji < 256);
    CHECK(mi < 256);
    // modular law: join + meet = a + b coordinatewise
    CHECK(add(jo, me) == add(a, b));
    // join dominates both in the partial-sum order, meet is dominated
    RowVector cj = cumsum(jo), cm = cumsum(me), ca = cumsum(a), cb = cumsum(b);
    for (int t = 0; t < 9; ++t) {
      CHECK(cj[t] == std::max(ca[t], cb[t]));
      CHECK(cm[t] == std::min(ca[t], cb[t]));
    }
  }
}

TEST_CASE("join is the least upper bound", "[cone]") {
  std::mt19937_64 gen(23);
  for (int it = 0; it < 2000; ++it) {
    std::uint32_t i = gen() % 512, j = gen() % 512, k = gen() % 512;
    RowVector cj = cumsum(join(sign_row(i, 9), sign_row(j, 9)));
    RowVector ci = cumsum(sign_row(i, 9)), cjj = cumsum(sign_row(j, 9));
    RowVector ck = cumsum(sign_row(k, 9));
    bool k_above = true, k_above_join = true;
    for (int t = 0; t < 9; ++t) {
      if (ck[t] < ci[t] || ck[t] < cjj[t]) k_above = false;
      if (ck[t] < cj[t]) k_above_join = false;
    }
    if (k_above) CHECK(k_above_join);
  }
}

TEST_CASE("componentwise order implies partial-sum order", "[cone]") {
  std::mt19937_64 gen(29);
  for (int it = 0; it < 500; ++it) {
    RowVector x(7), d(7);
    for (auto& e : x)
      e = make_rational(static_cast<long>(gen() % 9) - 4, 1);
    for (auto& e : d) e = make_rational(static_cast<long>(gen() % 3), 1);
    RowVector y = add(x, d);  // y >= x componentwise
    RowVector cx = cumsum(x), cy = cumsum(y);
    for (int t = 0; t < 7; ++t) CHECK(cy[t] >= cx[t]);
  }
}

TEST_CASE("greatest lower bounds over selections of the half space", "[cone]") {
  RowVector r2 = vec9("1/2,1/2,1/2,1/2,0,0,0,0,0");
  RowVector r3 = vec9("1/3,1/3,1/3,1/3,1/3,1/3,1/3,1/3,1/3");

  CHECK(glb_filter(9, [&](std::uint32_t i) {
          return in_Qstar(sign_row(i, 9));
        }).index == 170);

  CHECK(glb_filter(9, [&](std::uint32_t i) {
          return in_Qstar(add(r3, sign_row(i, 9)));
        }).index == 219);

  CHECK(glb_filter(9, [&](std::uint32_t i) {
          return in_Qstar(add(r2, sign_row(i, 9)));
        }).index == 234);

  CHECK_THROWS_AS(glb_filter(9, [](std::uint32_t) { return false; }),
                  std::invalid_argument);
}

TEST_CASE("least upper bounds over index ranges", "[cone]") {
  auto lub_of = [](std::vector<std::uint32_t> sel) {
    std::sort(sel.begin(), sel.end());
    return lub_filter(9, [&](std::uint32_t i) {
      return std::binary_search(sel.begin(), sel.end(), i);
    });
  };
  std::vector<std::uint32_t> top;
  for (std::uint32_t i = 240; i <= 255; ++i) top.push_back(i);
  CHECK(lub_of(top).index == 240);
  CHECK(lub_of({231, 235}).index == 231);
  std::vector<std::uint32_t> quads;
  for (std::uint32_t i : {124u, 125u, 126u, 127u, 188u, 189u, 190u, 191u,
                          220u, 221u, 222u, 223u, 236u, 237u, 238u, 239u})
    quads.push_back(i);
  CHECK(lub_of(quads).index == 124);
}
