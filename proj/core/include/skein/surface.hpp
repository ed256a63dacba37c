#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "skein/laurent.hpp"
#include "skein/multipoly.hpp"

namespace skein {

// Simple closed curve class on the torus: (longitude exponent, meridian
// exponent). Orientation is immaterial for traces: (a,b) and (-a,-b) name
// the same curve.
struct TorusCurve {
  int a = 0;
  int b = 0;
  auto operator<=>(const TorusCurve&) const = default;
};

// Unreduced word of curves. Equality is syntactic; all normalization
// happens after pushing into a handlebody or after specialization.
using SurfaceWord = std::vector<TorusCurve>;

SurfaceWord concat(const SurfaceWord& u, const SurfaceWord& v);

std::string to_string(const TorusCurve& c);
std::string to_string(const SurfaceWord& w);

// Linear combination of words with Laurent coefficients.
class SurfaceElement {
 public:
  SurfaceElement() = default;
  static SurfaceElement word(const SurfaceWord& w,
                             const LaurentPoly& coeff = LaurentPoly::one());

  bool is_zero() const { return terms_.empty(); }
  const std::map<SurfaceWord, LaurentPoly>& terms() const { return terms_; }

  SurfaceElement& operator+=(const SurfaceElement& rhs);
  SurfaceElement& operator-=(const SurfaceElement& rhs);
  SurfaceElement operator+(const SurfaceElement& rhs) const;
  SurfaceElement operator-(const SurfaceElement& rhs) const;
  SurfaceElement operator-() const;
  SurfaceElement operator*(const LaurentPoly& scalar) const;
  bool operator==(const SurfaceElement&) const = default;

  std::string to_string() const;

 private:
  std::map<SurfaceWord, LaurentPoly> terms_;  // no zero coefficients
};

inline std::string to_string(const SurfaceElement& e) { return e.to_string(); }

// T(a,b) = -tr of the (a,b) curve in the trace coordinates x = -tr(m),
// y = -tr(l), z = -tr(lm). Euclidean descent on the trace identity
// T(a+c,b+d) = -T(a,b) T(c,d) - T(a-c,b-d), memoized.
MultiPoly trace_poly(TorusCurve c);

// x^2 + y^2 + z^2 + xyz - 4; the defining relation of the trace coordinates.
MultiPoly torus_relation();

// Word -> product of letter traces; coefficients through t = -1.
MultiPoly specialize(const SurfaceElement& e);

}  // namespace skein
