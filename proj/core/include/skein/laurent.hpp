#pragma once

#include <map>
#include <string>

#include "skein/rational.hpp"

namespace skein {

// Result of a (1+t)-adic valuation. value is meaningful only when
// is_infinite is false (the element was zero).
struct Valuation {
  bool is_infinite = false;
  long value = 0;

  static Valuation infinite() { return Valuation{true, 0}; }
  static Valuation finite(long v) { return Valuation{false, v}; }
  bool operator==(const Valuation&) const = default;
};

std::string to_string(const Valuation& v);

// Laurent polynomial in t with exact rational coefficients.
// Invariant: no zero coefficients are stored.
class LaurentPoly {
public:
  LaurentPoly() = default;
  explicit LaurentPoly(const Rational& constant);

  static LaurentPoly t_power(int exp, const Rational& coeff = Rational(1));
  static LaurentPoly one() { return LaurentPoly(Rational(1)); }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  Rational coeff(int exp) const;
  void set_coeff(int exp, const Rational& value);
  int min_exp() const;  // requires !is_zero()
  int max_exp() const;  // requires !is_zero()
  const std::map<int, Rational>& terms() const { return terms_; }

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly operator+(const LaurentPoly& rhs) const;
  LaurentPoly operator-(const LaurentPoly& rhs) const;
  LaurentPoly operator-() const;
  LaurentPoly operator*(const LaurentPoly& rhs) const;
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  LaurentPoly operator*(const Rational& scalar) const;
  LaurentPoly shifted(int exp_delta) const;  // multiply by t^exp_delta
  bool operator==(const LaurentPoly&) const = default;

  Rational eval_minus_one() const;

  // Exact division by (1+t). Throws Error(not_divisible) when the remainder
  // at t = -1 is nonzero.
  LaurentPoly div_one_plus_t() const;

  // Largest k with (1+t)^k dividing this; infinite for the zero polynomial.
  Valuation one_plus_t_valuation() const;

  std::string to_string() const;
  // Inverse of to_string (round-trips exactly); also accepts redundant
  // whitespace and explicit "1*"/"+" forms.
  static LaurentPoly parse(const std::string& text);

private:
  void prune(int exp);
  std::map<int, Rational> terms_;
};

inline LaurentPoly operator*(const Rational& scalar, const LaurentPoly& p) {
  return p * scalar;
}

inline std::string to_string(const LaurentPoly& p) { return p.to_string(); }

}  // namespace skein
