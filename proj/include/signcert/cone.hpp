#pragma once
// The cone Q of sorted non-negative vectors, its dual Q* characterized by
// non-negative cumulative partial sums, and the lattice join/meet induced by
// the pointwise order on cumulative-sum vectors.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "signspace.hpp"
#include "vector.hpp"

namespace signcert {

inline bool in_Q(const RowVector& a) {
  for (std::size_t i = 1; i < a.size(); ++i)
    if (a[i - 1] < a[i]) return false;
  return !a.empty() ? a.back() >= 0 : true;
}

inline bool in_Qstar(const RowVector& v) {
  Rational acc = 0;
  for (const auto& x : v) {
    acc += x;
    if (acc < 0) return false;
  }
  return true;
}

// 1-based position of the first negative partial sum, 0 if none
inline int first_negative_partial(const RowVector& v) {
  Rational acc = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    acc += v[i];
    if (acc < 0) return static_cast<int>(i) + 1;
  }
  return 0;
}

namespace detail {
inline RowVector from_cumsum(const RowVector& partials) {
  RowVector out(partials.size());
  Rational prev = 0;
  for (std::size_t i = 0; i < partials.size(); ++i) {
    out[i] = partials[i] - prev;
    prev = partials[i];
  }
  return out;
}
}  // namespace detail

// least upper bound in the cumulative order: cumsum(join) = max(cumsums)
inline RowVector join(const RowVector& v, const RowVector& w) {
  require_same_dim(v, w);
  RowVector cv = cumsum(v), cw = cumsum(w);
  for (std::size_t i = 0; i < cv.size(); ++i)
    if (cw[i] > cv[i]) cv[i] = cw[i];
  return detail::from_cumsum(cv);
}

inline RowVector meet(const RowVector& v, const RowVector& w) {
  require_same_dim(v, w);
  RowVector cv = cumsum(v), cw = cumsum(w);
  for (std::size_t i = 0; i < cv.size(); ++i)
    if (cw[i] < cv[i]) cv[i] = cw[i];
  return detail::from_cumsum(cv);
}

// greatest lower bound of the sign vectors in S+ selected by pred; the result
// is itself a sign vector by the lattice closure of S
template <class Pred>
SignVector glb_filter(int n, Pred&& pred) {
  RowVector acc;
  bool any = false;
  for (std::uint32_t i = 0; i < half_size(n); ++i) {
    if (!pred(i)) continue;
    RowVector row = sign_row(i, n);
    acc = any ? meet(acc, row) : row;
    any = true;
  }
  if (!any) throw std::invalid_argument("glb_filter over empty selection");
  std::vector<int> coords(n);
  for (int m = 0; m < n; ++m)
    coords[m] = acc[m] == 1 ? 1 : (acc[m] == -1 ? -1 : 0);
  return SignVector{n, index_of(coords)};  // index_of rejects non-sign entries
}

template <class Pred>
SignVector lub_filter(int n, Pred&& pred) {
  RowVector acc;
  bool any = false;
  for (std::uint32_t i = 0; i < half_size(n); ++i) {
    if (!pred(i)) continue;
    RowVector row = sign_row(i, n);
    acc = any ? join(acc, row) : row;
    any = true;
  }
  if (!any) throw std::invalid_argument("lub_filter over empty selection");
  std::vector<int> coords(n);
  for (int m = 0; m < n; ++m)
    coords[m] = acc[m] == 1 ? 1 : (acc[m] == -1 ? -1 : 0);
  return SignVector{n, index_of(coords)};
}

}  // namespace signcert
