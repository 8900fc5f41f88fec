#pragma once
// Fixed-length exact vectors: inner products, cumulative sums, text round-trip.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "rational.hpp"

namespace signcert {

using RowVector = std::vector<Rational>;

inline void require_same_dim(const RowVector& v, const RowVector& w) {
  if (v.size() != w.size())
    throw std::invalid_argument("dimension mismatch: " +
                                std::to_string(v.size()) + " vs " +
                                std::to_string(w.size()));
}

inline Rational dot(const RowVector& v, const RowVector& w) {
  require_same_dim(v, w);
  Rational acc = 0;
  for (std::size_t i = 0; i < v.size(); ++i) acc += v[i] * w[i];
  return acc;
}

inline Rational norm2(const RowVector& v) { return dot(v, v); }

// partials[i] = v[0] + ... + v[i]
inline RowVector cumsum(const RowVector& v) {
  RowVector out(v.size());
  Rational acc = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    acc += v[i];
    out[i] = acc;
  }
  return out;
}

inline RowVector add(const RowVector& v, const RowVector& w) {
  require_same_dim(v, w);
  RowVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] + w[i];
  return out;
}

inline RowVector sub(const RowVector& v, const RowVector& w) {
  require_same_dim(v, w);
  RowVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] - w[i];
  return out;
}

inline RowVector neg(const RowVector& v) {
  RowVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
  return out;
}

inline RowVector scale(const Rational& c, const RowVector& v) {
  RowVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
  return out;
}

inline RowVector zero_vector(std::size_t n) { return RowVector(n, Rational(0)); }

inline bool is_zero(const RowVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

// comma-separated "p/q" tokens, exactly n of them
inline RowVector parse_vector(const std::string& text, std::size_t n) {
  RowVector out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string tok = text.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    out.push_back(parse_rational(tok));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (out.size() != n)
    throw std::invalid_argument("expected " + std::to_string(n) +
                                " entries, got " + std::to_string(out.size()));
  return out;
}

inline std::string to_string(const RowVector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += to_string(v[i]);
  }
  return out;
}

}  // namespace signcert
