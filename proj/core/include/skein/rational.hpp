#pragma once

#include <gmpxx.h>

#include <string>

namespace skein {

// Exact rational scalar. GMP keeps Groebner intermediate coefficients exact;
// machine ints overflow on the lens-space eliminations.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// "3", "-1/2". Throws Error(parse_error) on anything else.
Rational parse_rational(const std::string& text);

// Canonical form: "-1/2", "3" (no "/1").
std::string to_string(const Rational& r);

}  // namespace skein
