#pragma once

#include <concepts>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace lsing {

/// Exact rational coefficients with arbitrary-precision numerator and denominator.
using Rational = mpq_class;

template <class K>
concept Field = std::regular<K> && requires(K a, K b) {
  { a + b } -> std::convertible_to<K>;
  { a - b } -> std::convertible_to<K>;
  { a * b } -> std::convertible_to<K>;
  { a / b } -> std::convertible_to<K>;
  { -a } -> std::convertible_to<K>;
  K(0);
  K(1);
};

inline bool is_zero(const Rational& c) { return sgn(c) == 0; }
inline bool is_negative(const Rational& c) { return sgn(c) < 0; }
inline std::string to_string(const Rational& c) { return c.get_str(); }

inline bool is_one(const Rational& c) { return c == 1; }

/// Parses "p" or "p/q" (decimal, optional sign). Throws std::invalid_argument.
inline Rational parse_rational(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("not a rational: " + s);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

}  // namespace lsing
