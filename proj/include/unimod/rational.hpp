#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace unimod {

/// Exact rational scalar used for all symbolic coefficients.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool rat_is_zero(const Rational& q) { return sgn(q) == 0; }

inline Rational rat_pow(const Rational& base, unsigned exp) {
  Rational out(1);
  Rational b = base;
  unsigned e = exp;
  while (e > 0) {
    if (e & 1u) out *= b;
    b *= b;
    e >>= 1u;
  }
  return out;
}

inline double rat_to_double(const Rational& q) { return q.get_d(); }

inline std::string rat_str(const Rational& q) { return q.get_str(); }

}  // namespace unimod
