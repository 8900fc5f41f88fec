#pragma once
// Brute-force ground truth. count_good enumerates all 2^n sign vectors in
// Gray-code order with incremental sums, after scaling the weight vector to
// integers; comparisons are on squared values throughout. A 64-bit fast path
// (products widened to 128 bits) covers small scaled data, with an
// arbitrary-precision fallback. Also: the per-vector fraction table and a
// seeded random-sampling falsification harness.

#include <algorithm>
#include <cstdint>
#include <future>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "cone.hpp"
#include "vector.hpp"

namespace signcert {

struct CountResult {
  int n = 0;
  std::uint64_t total = 0;
  std::uint64_t count_le = 0;  // #{eps : (eps a)^2 <= aa'}
  std::uint64_t count_lt = 0;  // #{eps : (eps a)^2 <  aa'}
};

namespace detail {

template <class Int>
CountResult gray_count(const std::vector<Int>& c, const Int& threshold, int n) {
  CountResult out;
  out.n = n;
  out.total = std::uint64_t{1} << n;
  Int s = 0;
  for (const Int& x : c) s += x;
  std::uint32_t signs = 0;  // bit b set = coordinate n-b currently -1
  auto tally = [&](const Int& cur) {
    Int sq = cur * cur;
    if (sq <= threshold) {
      ++out.count_le;
      if (sq < threshold) ++out.count_lt;
    }
  };
  tally(s);
  for (std::uint64_t step = 1; step < out.total; ++step) {
    int b = __builtin_ctzll(step);
    std::uint32_t bit = std::uint32_t{1} << b;
    signs ^= bit;
    const Int& cj = c[n - 1 - b];
    if (signs & bit)
      s -= 2 * cj;
    else
      s += 2 * cj;
    tally(s);
  }
  return out;
}

using int128 = __int128;

}  // namespace detail

// exact counts of good sign vectors by full enumeration; n <= 16
inline CountResult count_good(const RowVector& a) {
  const int n = static_cast<int>(a.size());
  if (n < 1 || n > 16)
    throw std::invalid_argument("count_good: dimension " + std::to_string(n) +
                                " outside [1,16]");
  Integer lcm = 1;
  for (const auto& x : a) {
    Integer den = x.get_den();
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
  }
  std::vector<Integer> scaled(n);
  Integer abs_sum = 0;
  for (int i = 0; i < n; ++i) {
    Rational v = a[i] * Rational(lcm);
    v.canonicalize();
    scaled[i] = v.get_num();
    abs_sum += abs(scaled[i]);
  }
  // 64-bit path when |sum| can never overflow and squares fit in 128 bits
  if (abs_sum.fits_slong_p() && abs_sum.get_si() < (1L << 62)) {
    std::vector<detail::int128> c64(n);
    detail::int128 threshold = 0;
    for (int i = 0; i < n; ++i) {
      c64[i] = scaled[i].get_si();
      threshold += c64[i] * c64[i];
    }
    return detail::gray_count<detail::int128>(c64, threshold, n);
  }
  Integer threshold = 0;
  for (const auto& x : scaled) threshold += x * x;
  return detail::gray_count<Integer>(scaled, threshold, n);
}

inline int nonzero_count(const RowVector& a) {
  int k = 0;
  for (const auto& x : a)
    if (x != 0) ++k;
  return k;
}

struct LibraryVector {
  std::string name;
  RowVector v;
  bool has_claim = false;
  Rational claimed;  // claimed strict fraction, when present
  int claimed_k = 0;
};

struct CkEntry {
  std::string name;
  int k = 0;  // number of nonzero coordinates
  RowVector a;
  Rational fraction_lt;
  bool has_claim = false;
  Rational claimed;
  bool match = false;
};

// strict-fraction table over a vector library, computed values next to claims
inline std::vector<CkEntry> hk_table(const std::vector<LibraryVector>& lib) {
  std::vector<CkEntry> out;
  for (const auto& e : lib) {
    CountResult c = count_good(e.v);
    CkEntry row;
    row.name = e.name;
    row.k = nonzero_count(e.v);
    row.a = e.v;
    row.fraction_lt = Rational(static_cast<long>(c.count_lt),
                               static_cast<long>(c.total));
    row.fraction_lt.canonicalize();
    row.has_claim = e.has_claim;
    if (e.has_claim) {
      row.claimed = e.claimed;
      row.match = row.fraction_lt == e.claimed;
    }
    out.push_back(std::move(row));
  }
  return out;
}

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// deterministic seed for batch b of a master seed
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t batch) {
  std::uint64_t s = master + 0x517cc1b727220a95ULL * (batch + 1);
  return splitmix64(s);
}

// sorted non-negative random vector: numerators 0..1000 over one common
// denominator 1..1000
inline RowVector random_cone_vector(std::mt19937_64& gen, int n) {
  long q = 1 + static_cast<long>(gen() % 1000);
  std::vector<Rational> vals(n);
  for (int i = 0; i < n; ++i)
    vals[i] = make_rational(static_cast<long>(gen() % 1001), q);
  std::sort(vals.begin(), vals.end(),
            [](const Rational& a, const Rational& b) { return a > b; });
  return vals;
}

// minimum over seeded random a in Q of count_le/total; batches of fixed size
// keep the result independent of the worker count
inline Rational sample_min_fraction(int n, std::uint64_t samples,
                                    std::uint64_t seed, int jobs = 1) {
  check_dim(n);
  if (samples == 0)
    throw std::invalid_argument("sample_min_fraction needs samples > 0");
  const std::uint64_t batch_size = 1024;
  const std::uint64_t batches = (samples + batch_size - 1) / batch_size;

  auto run_batch = [&](std::uint64_t b) {
    std::mt19937_64 gen(derive_seed(seed, b));
    std::uint64_t count = std::min(batch_size, samples - b * batch_size);
    Rational best = 2;
    for (std::uint64_t i = 0; i < count; ++i) {
      RowVector a = random_cone_vector(gen, n);
      CountResult c = count_good(a);
      Rational frac(static_cast<long>(c.count_le), static_cast<long>(c.total));
      frac.canonicalize();
      if (frac < best) best = frac;
    }
    return best;
  };

  Rational best = 2;
  if (jobs <= 1) {
    for (std::uint64_t b = 0; b < batches; ++b) {
      Rational r = run_batch(b);
      if (r < best) best = r;
    }
  } else {
    std::uint64_t next = 0;
    while (next < batches) {
      std::vector<std::future<Rational>> fs;
      for (int j = 0; j < jobs && next < batches; ++j, ++next)
        fs.push_back(std::async(std::launch::async, run_batch, next));
      for (auto& f : fs) {
        Rational r = f.get();
        if (r < best) best = r;
      }
    }
  }
  return best;
}

}  // namespace signcert
