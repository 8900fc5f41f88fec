#pragma once
// Sign vectors in S = {+1,-1}^n under the canonical bit-pattern enumeration:
// bit j of the index corresponds to coordinate n-j (1-based), a set bit meaning
// -1. The lower index half S+ holds the vectors with first coordinate +1;
// (i, 2^{n-1}-1-i) are conjugate (they average to (1,0,...,0)), and the
// coordinatewise product of two sign vectors is the XOR of their indices.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "vector.hpp"

namespace signcert {

inline void check_dim(int n) {
  if (n < 1 || n > 16)
    throw std::invalid_argument("dimension " + std::to_string(n) +
                                " outside [1,16]");
}

inline std::uint32_t space_size(int n) {
  check_dim(n);
  return std::uint32_t{1} << n;
}

inline std::uint32_t half_size(int n) {
  check_dim(n);
  return std::uint32_t{1} << (n - 1);
}

// coordinate m (1-based) of the sign vector with this index
inline int sign_coord(std::uint32_t index, int n, int m) {
  if (m < 1 || m > n) throw std::invalid_argument("coordinate out of range");
  return ((index >> (n - m)) & 1u) ? -1 : +1;
}

struct SignVector {
  int n = 0;
  std::uint32_t index = 0;

  int coord(int m) const { return sign_coord(index, n, m); }
  std::vector<int> coords() const {
    std::vector<int> out(n);
    for (int m = 1; m <= n; ++m) out[m - 1] = coord(m);
    return out;
  }
};

inline SignVector signvec_of_index(std::uint32_t i, int n) {
  if (i >= space_size(n))
    throw std::invalid_argument("sign index " + std::to_string(i) +
                                " out of range for n=" + std::to_string(n));
  return SignVector{n, i};
}

inline std::uint32_t index_of(const std::vector<int>& coords) {
  int n = static_cast<int>(coords.size());
  check_dim(n);
  std::uint32_t idx = 0;
  for (int m = 1; m <= n; ++m) {
    if (coords[m - 1] == -1)
      idx |= std::uint32_t{1} << (n - m);
    else if (coords[m - 1] != 1)
      throw std::invalid_argument("coordinate not +1/-1");
  }
  return idx;
}

inline std::uint32_t conjugate_index(std::uint32_t i, int n) {
  if (i >= half_size(n))
    throw std::invalid_argument("index " + std::to_string(i) +
                                " not in the +1-leading half");
  return half_size(n) - 1 - i;
}

// index of -eps_i (all coordinates flipped)
inline std::uint32_t negation_index(std::uint32_t i, int n) {
  return (space_size(n) - 1) ^ i;
}

// index of the coordinatewise product
inline std::uint32_t group_product(std::uint32_t i, std::uint32_t j) {
  return i ^ j;
}

inline Rational eval_product(std::uint32_t i, int n, const RowVector& a) {
  if (static_cast<int>(a.size()) != n)
    throw std::invalid_argument("dimension mismatch in eval_product");
  Rational acc = 0;
  for (int m = 1; m <= n; ++m) {
    if (sign_coord(i, n, m) > 0)
      acc += a[m - 1];
    else
      acc -= a[m - 1];
  }
  return acc;
}

inline RowVector sign_row(std::uint32_t i, int n) {
  check_dim(n);
  RowVector out(n);
  for (int m = 1; m <= n; ++m) out[m - 1] = sign_coord(i, n, m);
  return out;
}

// "ε106=(+,+,-,-,+,-,+,-,+)"
inline std::string to_string(const SignVector& e) {
  std::string s = "ε" + std::to_string(e.index) + "=(";
  for (int m = 1; m <= e.n; ++m) {
    if (m > 1) s += ',';
    s += e.coord(m) > 0 ? '+' : '-';
  }
  s += ')';
  return s;
}

}  // namespace signcert
