#pragma once

#include <gmpxx.h>
#include <string>
#include <string_view>
#include <stdexcept>

namespace seqcm {

// Exact rational coefficients. GMP keeps mpq_class canonical (lowest terms,
// positive denominator) as long as every value is built canonically, which
// the helpers below guarantee.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Accepts "p", "-p", "p/q".
inline Rational rat_from_string(std::string_view s) {
  Rational r;
  if (r.set_str(std::string(s), 10) != 0)
    throw std::invalid_argument("malformed rational: " + std::string(s));
  if (r.get_den() == 0) throw std::invalid_argument("rational with zero denominator");
  r.canonicalize();
  return r;
}

inline std::string rat_to_string(const Rational& r) { return r.get_str(); }

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline bool is_one(const Rational& r) { return r == 1; }

// True when the rational is an integer (denominator 1).
inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

}  // namespace seqcm
