#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "skein/rational.hpp"

namespace skein {

// Exponent vector for x, y, z and the auxiliary elimination variable w.
// w is artifact-internal (intersection by elimination); parsed/printed
// polynomials never carry it.
using Mono = std::array<int, 4>;

inline constexpr int kVarX = 0;
inline constexpr int kVarY = 1;
inline constexpr int kVarZ = 2;
inline constexpr int kVarW = 3;

extern const char* const kVarNames[4];

enum class MonoOrder {
  DegRevLex,  // graded reverse lexicographic, x > y > z (> w)
  Lex,        // lexicographic, x > y > z > w
  ElimW,      // w-degree block first, then DegRevLex on x, y, z
};

int mono_degree(const Mono& m);
bool mono_less(const Mono& a, const Mono& b, MonoOrder order);
bool mono_divides(const Mono& a, const Mono& b);  // a divides b
Mono mono_mul(const Mono& a, const Mono& b);
Mono mono_quot(const Mono& a, const Mono& b);  // a / b, requires b | a
Mono mono_lcm(const Mono& a, const Mono& b);
std::string mono_to_string(const Mono& m);  // "x^2*y", "1" for the unit

// Polynomial in x, y, z (and internally w) over the rationals.
// Invariant: no zero coefficients stored; exponents non-negative.
class MultiPoly {
public:
  MultiPoly() = default;
  explicit MultiPoly(const Rational& constant);

  static MultiPoly variable(int var, int exp = 1);
  static MultiPoly monomial(const Mono& m, const Rational& coeff = Rational(1));
  static MultiPoly one() { return MultiPoly(Rational(1)); }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  const std::map<Mono, Rational>& terms() const { return terms_; }
  Rational coeff(const Mono& m) const;
  int total_degree() const;           // in x, y, z, w; -1 for the zero poly
  bool uses_w() const;

  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  MultiPoly operator+(const MultiPoly& rhs) const;
  MultiPoly operator-(const MultiPoly& rhs) const;
  MultiPoly operator-() const;
  MultiPoly operator*(const MultiPoly& rhs) const;
  MultiPoly operator*(const Rational& scalar) const;
  MultiPoly pow(int exp) const;
  bool operator==(const MultiPoly&) const = default;
  bool operator<(const MultiPoly& rhs) const { return terms_ < rhs.terms_; }

  Mono leading_mono(MonoOrder order) const;     // requires !is_zero()
  Rational leading_coeff(MonoOrder order) const;  // requires !is_zero()

  Rational eval(const Rational& x, const Rational& y, const Rational& z) const;
  MultiPoly substitute(int var, const MultiPoly& value) const;

  // Terms printed descending in DegRevLex: "x*y*z + x^2 - 4".
  std::string to_string() const;
  // Accepts the printed form plus implicit '*' and juxtaposition ("2yz").
  static MultiPoly parse(const std::string& text);

private:
  void prune(const Mono& m);
  std::map<Mono, Rational> terms_;
};

inline MultiPoly operator*(const Rational& scalar, const MultiPoly& p) {
  return p * scalar;
}

inline std::string to_string(const MultiPoly& p) { return p.to_string(); }

// "(x + 2, y - z)"
std::string to_string(const std::vector<MultiPoly>& polys);

}  // namespace skein
