#pragma once
// Exact rational scalars on top of GMP. Everything downstream compares squared
// norms only, so no square roots are ever needed.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace signcert {

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

namespace detail {
// strict token check: [+-]?digits or [+-]?digits/[+-]?digits
// (gmp's own parser silently ignores embedded whitespace, which we don't want)
inline bool rational_token_ok(const std::string& s) {
  std::size_t i = 0, digits = 0;
  bool slash_seen = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (c >= '0' && c <= '9') {
      ++digits;
    } else if (c == '/' && !slash_seen && digits > 0) {
      slash_seen = true;
      digits = 0;
      if (i + 1 < s.size() && (s[i + 1] == '+' || s[i + 1] == '-')) ++i;
    } else {
      return false;
    }
  }
  return digits > 0;
}
}  // namespace detail

// parses "p/q" or "p"; result is canonical (q > 0, gcd(|p|,q) = 1)
inline Rational parse_rational(const std::string& text) {
  if (!detail::rational_token_ok(text))
    throw std::invalid_argument("malformed rational '" + text + "'");
  std::string cleaned;  // gmp chokes on explicit '+' signs
  cleaned.reserve(text.size());
  for (char c : text)
    if (c != '+') cleaned.push_back(c);
  Rational q(cleaned);
  if (q.get_den() == 0)
    throw std::invalid_argument("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

// "p/q" with "/q" omitted when q = 1
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline int sign_of(const Rational& q) { return sgn(q); }

}  // namespace signcert
