#include "skein/laurent.hpp"

#include <cctype>
#include <vector>

#include "skein/error.hpp"

namespace skein {

std::string to_string(const Valuation& v) {
  return v.is_infinite ? "inf" : std::to_string(v.value);
}

LaurentPoly::LaurentPoly(const Rational& constant) {
  if (constant != 0) terms_[0] = constant;
}

LaurentPoly LaurentPoly::t_power(int exp, const Rational& coeff) {
  LaurentPoly p;
  if (coeff != 0) p.terms_[exp] = coeff;
  return p;
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 &&
         terms_.begin()->second == 1;
}

Rational LaurentPoly::coeff(int exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::set_coeff(int exp, const Rational& value) {
  if (value == 0)
    terms_.erase(exp);
  else
    terms_[exp] = value;
}

int LaurentPoly::min_exp() const { return terms_.begin()->first; }
int LaurentPoly::max_exp() const { return terms_.rbegin()->first; }

void LaurentPoly::prune(int exp) {
  auto it = terms_.find(exp);
  if (it != terms_.end() && it->second == 0) terms_.erase(it);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [exp, c] : rhs.terms_) {
    terms_[exp] += c;
    prune(exp);
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [exp, c] : rhs.terms_) {
    terms_[exp] -= c;
    prune(exp);
  }
  return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& rhs) const {
  LaurentPoly out = *this;
  out += rhs;
  return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& rhs) const {
  LaurentPoly out = *this;
  out -= rhs;
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out;
  for (const auto& [exp, c] : terms_) out.terms_[exp] = -c;
  return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& rhs) const {
  LaurentPoly out;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : rhs.terms_) {
      out.terms_[e1 + e2] += c1 * c2;
      out.prune(e1 + e2);
    }
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

LaurentPoly LaurentPoly::operator*(const Rational& scalar) const {
  LaurentPoly out;
  if (scalar == 0) return out;
  for (const auto& [exp, c] : terms_) out.terms_[exp] = c * scalar;
  return out;
}

LaurentPoly LaurentPoly::shifted(int exp_delta) const {
  LaurentPoly out;
  for (const auto& [exp, c] : terms_) out.terms_[exp + exp_delta] = c;
  return out;
}

Rational LaurentPoly::eval_minus_one() const {
  Rational sum(0);
  for (const auto& [exp, c] : terms_) {
    // (-1)^exp, exponent possibly negative
    if (exp % 2 == 0)
      sum += c;
    else
      sum -= c;
  }
  return sum;
}

LaurentPoly LaurentPoly::div_one_plus_t() const {
  if (is_zero()) return LaurentPoly();
  const int lo = min_exp();
  const int span = max_exp() - lo;
  // Shift to an honest polynomial c_0 + ... + c_span t^span, then divide
  // ascending: q_0 = c_0, q_j = c_j - q_{j-1}, remainder c_span - q_{span-1}.
  std::vector<Rational> c(span + 1, Rational(0));
  for (const auto& [exp, coeff] : terms_) c[exp - lo] = coeff;
  if (span == 0) fail(Errc::not_divisible, "not divisible by 1+t");
  std::vector<Rational> q(span);
  q[0] = c[0];
  for (int j = 1; j < span; ++j) q[j] = c[j] - q[j - 1];
  if (c[span] != q[span - 1]) fail(Errc::not_divisible, "not divisible by 1+t");
  LaurentPoly out;
  for (int j = 0; j < span; ++j)
    if (q[j] != 0) out.terms_[lo + j] = q[j];
  return out;
}

Valuation LaurentPoly::one_plus_t_valuation() const {
  if (is_zero()) return Valuation::infinite();
  long count = 0;
  LaurentPoly p = *this;
  while (p.eval_minus_one() == 0) {
    p = p.div_one_plus_t();
    ++count;
  }
  return Valuation::finite(count);
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [exp, c] : terms_) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out += "-";
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    std::string tpart;
    if (exp == 1)
      tpart = "t";
    else if (exp != 0)
      tpart = "t^" + std::to_string(exp);
    if (exp == 0)
      out += skein::to_string(mag);
    else if (mag == 1)
      out += tpart;
    else
      out += skein::to_string(mag) + "*" + tpart;
  }
  return out;
}

namespace {

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  [[noreturn]] void error(const std::string& what) {
    fail(Errc::parse_error, "laurent parse error at position " +
                                std::to_string(pos) + ": " + what + " in '" +
                                text + "'");
  }
};

Rational parse_unsigned_rational(Cursor& cur) {
  cur.skip_ws();
  std::size_t start = cur.pos;
  while (cur.pos < cur.text.size() &&
         std::isdigit(static_cast<unsigned char>(cur.text[cur.pos])))
    ++cur.pos;
  if (cur.pos == start) cur.error("expected number");
  if (cur.pos < cur.text.size() && cur.text[cur.pos] == '/') {
    ++cur.pos;
    std::size_t den_start = cur.pos;
    while (cur.pos < cur.text.size() &&
           std::isdigit(static_cast<unsigned char>(cur.text[cur.pos])))
      ++cur.pos;
    if (cur.pos == den_start) cur.error("expected denominator");
  }
  return parse_rational(cur.text.substr(start, cur.pos - start));
}

int parse_exponent(Cursor& cur) {
  cur.skip_ws();
  std::size_t start = cur.pos;
  if (cur.pos < cur.text.size() &&
      (cur.text[cur.pos] == '-' || cur.text[cur.pos] == '+'))
    ++cur.pos;
  std::size_t digit_start = cur.pos;
  while (cur.pos < cur.text.size() &&
         std::isdigit(static_cast<unsigned char>(cur.text[cur.pos])))
    ++cur.pos;
  if (cur.pos == digit_start) cur.error("expected exponent");
  return std::stoi(cur.text.substr(start, cur.pos - start));
}

// term := coeff ['*'] ['t' ['^' int]] | 't' ['^' int]
void parse_term(Cursor& cur, bool negative, LaurentPoly& acc) {
  Rational coeff(1);
  bool saw_coeff = false;
  if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
    coeff = parse_unsigned_rational(cur);
    saw_coeff = true;
  }
  int exp = 0;
  char next = cur.peek();
  if (next == '*') {
    if (!saw_coeff) cur.error("'*' without coefficient");
    ++cur.pos;
    next = cur.peek();
    if (next != 't') cur.error("expected t after '*'");
  }
  if (next == 't') {
    ++cur.pos;
    exp = 1;
    if (cur.peek() == '^') {
      ++cur.pos;
      exp = parse_exponent(cur);
    }
  } else if (!saw_coeff) {
    cur.error("expected term");
  }
  if (negative) coeff = -coeff;
  acc += LaurentPoly::t_power(exp, coeff);
}

}  // namespace

LaurentPoly LaurentPoly::parse(const std::string& text) {
  Cursor cur{text};
  if (cur.done()) fail(Errc::parse_error, "empty laurent polynomial");
  if (cur.peek() == '0') {
    std::size_t save = cur.pos;
    ++cur.pos;
    if (cur.done()) return LaurentPoly();
    cur.pos = save;
  }
  LaurentPoly acc;
  bool negative = false;
  char lead = cur.peek();
  if (lead == '-') {
    negative = true;
    ++cur.pos;
  } else if (lead == '+') {
    ++cur.pos;
  }
  parse_term(cur, negative, acc);
  while (!cur.done()) {
    char op = cur.peek();
    if (op != '+' && op != '-') cur.error("expected '+' or '-'");
    ++cur.pos;
    parse_term(cur, op == '-', acc);
  }
  return acc;
}

}  // namespace skein
