#include "skein/multipoly.hpp"

#include <algorithm>
#include <cctype>

#include "skein/error.hpp"

namespace skein {

const char* const kVarNames[4] = {"x", "y", "z", "w"};

int mono_degree(const Mono& m) { return m[0] + m[1] + m[2] + m[3]; }

namespace {

bool degrevlex_less(const Mono& a, const Mono& b) {
  int da = mono_degree(a), db = mono_degree(b);
  if (da != db) return da < db;
  // graded reverse lex: rightmost differing exponent decides, larger loses
  for (int i = 3; i >= 0; --i)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

}  // namespace

bool mono_less(const Mono& a, const Mono& b, MonoOrder order) {
  switch (order) {
    case MonoOrder::DegRevLex:
      return degrevlex_less(a, b);
    case MonoOrder::Lex:
      for (int i = 0; i < 4; ++i)
        if (a[i] != b[i]) return a[i] < b[i];
      return false;
    case MonoOrder::ElimW:
      if (a[kVarW] != b[kVarW]) return a[kVarW] < b[kVarW];
      return degrevlex_less(a, b);
  }
  return false;
}

bool mono_divides(const Mono& a, const Mono& b) {
  for (int i = 0; i < 4; ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Mono mono_mul(const Mono& a, const Mono& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
}

Mono mono_quot(const Mono& a, const Mono& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
}

Mono mono_lcm(const Mono& a, const Mono& b) {
  return {std::max(a[0], b[0]), std::max(a[1], b[1]), std::max(a[2], b[2]),
          std::max(a[3], b[3])};
}

std::string mono_to_string(const Mono& m) {
  std::string out;
  for (int i = 0; i < 4; ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += kVarNames[i];
    if (m[i] != 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

MultiPoly::MultiPoly(const Rational& constant) {
  if (constant != 0) terms_[{0, 0, 0, 0}] = constant;
}

MultiPoly MultiPoly::variable(int var, int exp) {
  Mono m{0, 0, 0, 0};
  m[var] = exp;
  return monomial(m);
}

MultiPoly MultiPoly::monomial(const Mono& m, const Rational& coeff) {
  MultiPoly p;
  if (coeff != 0) p.terms_[m] = coeff;
  return p;
}

bool MultiPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == Mono{0, 0, 0, 0} &&
         terms_.begin()->second == 1;
}

Rational MultiPoly::coeff(const Mono& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

int MultiPoly::total_degree() const {
  int deg = -1;
  for (const auto& [m, c] : terms_) deg = std::max(deg, mono_degree(m));
  return deg;
}

bool MultiPoly::uses_w() const {
  for (const auto& [m, c] : terms_)
    if (m[kVarW] > 0) return true;
  return false;
}

void MultiPoly::prune(const Mono& m) {
  auto it = terms_.find(m);
  if (it != terms_.end() && it->second == 0) terms_.erase(it);
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) {
    terms_[m] += c;
    prune(m);
  }
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) {
    terms_[m] -= c;
    prune(m);
  }
  return *this;
}

MultiPoly MultiPoly::operator+(const MultiPoly& rhs) const {
  MultiPoly out = *this;
  out += rhs;
  return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& rhs) const {
  MultiPoly out = *this;
  out -= rhs;
  return out;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out;
  for (const auto& [m, c] : terms_) out.terms_[m] = -c;
  return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& rhs) const {
  MultiPoly out;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : rhs.terms_) {
      Mono m = mono_mul(m1, m2);
      out.terms_[m] += c1 * c2;
      out.prune(m);
    }
  return out;
}

MultiPoly MultiPoly::operator*(const Rational& scalar) const {
  MultiPoly out;
  if (scalar == 0) return out;
  for (const auto& [m, c] : terms_) out.terms_[m] = c * scalar;
  return out;
}

MultiPoly MultiPoly::pow(int exp) const {
  MultiPoly out = one();
  for (int i = 0; i < exp; ++i) out = out * *this;
  return out;
}

Mono MultiPoly::leading_mono(MonoOrder order) const {
  auto it = terms_.begin();
  Mono best = it->first;
  for (++it; it != terms_.end(); ++it)
    if (mono_less(best, it->first, order)) best = it->first;
  return best;
}

Rational MultiPoly::leading_coeff(MonoOrder order) const {
  return terms_.at(leading_mono(order));
}

Rational MultiPoly::eval(const Rational& x, const Rational& y,
                         const Rational& z) const {
  auto pow = [](Rational base, int e) {
    Rational out(1);
    for (int i = 0; i < e; ++i) out *= base;
    return out;
  };
  Rational sum(0);
  for (const auto& [m, c] : terms_)
    sum += c * pow(x, m[0]) * pow(y, m[1]) * pow(z, m[2]);
  return sum;
}

MultiPoly MultiPoly::substitute(int var, const MultiPoly& value) const {
  MultiPoly out;
  for (const auto& [m, c] : terms_) {
    Mono rest = m;
    rest[var] = 0;
    out += monomial(rest, c) * value.pow(m[var]);
  }
  return out;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<const std::pair<const Mono, Rational>*> order;
  order.reserve(terms_.size());
  for (const auto& term : terms_) order.push_back(&term);
  std::sort(order.begin(), order.end(), [](auto* a, auto* b) {
    return mono_less(b->first, a->first, MonoOrder::DegRevLex);
  });
  std::string out;
  bool first = true;
  for (auto* term : order) {
    const auto& [m, c] = *term;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out += "-";
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    const bool unit_mono = (m == Mono{0, 0, 0, 0});
    if (unit_mono)
      out += skein::to_string(mag);
    else if (mag == 1)
      out += mono_to_string(m);
    else
      out += skein::to_string(mag) + "*" + mono_to_string(m);
  }
  return out;
}

std::string to_string(const std::vector<MultiPoly>& polys) {
  std::string out = "(";
  for (std::size_t i = 0; i < polys.size(); ++i) {
    if (i) out += ", ";
    out += polys[i].to_string();
  }
  return out + ")";
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
    fail(Errc::parse_error, "polynomial parse error at position " +
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

int var_index(char c) {
  switch (c) {
    case 'x': return kVarX;
    case 'y': return kVarY;
    case 'z': return kVarZ;
    default: return -1;
  }
}

int parse_power(Cursor& cur) {
  if (cur.peek() != '^') return 1;
  ++cur.pos;
  cur.skip_ws();
  std::size_t start = cur.pos;
  while (cur.pos < cur.text.size() &&
         std::isdigit(static_cast<unsigned char>(cur.text[cur.pos])))
    ++cur.pos;
  if (cur.pos == start) cur.error("expected exponent");
  return std::stoi(cur.text.substr(start, cur.pos - start));
}

// term := coeff | coeff ['*'] factors | factors;  factor := var ['^' uint]
void parse_term(Cursor& cur, bool negative, MultiPoly& acc) {
  Rational coeff(1);
  bool saw_coeff = false;
  if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
    coeff = parse_unsigned_rational(cur);
    saw_coeff = true;
  }
  Mono m{0, 0, 0, 0};
  bool saw_var = false;
  for (;;) {
    char next = cur.peek();
    if (next == '*') {
      if (!saw_coeff && !saw_var) cur.error("'*' without left factor");
      ++cur.pos;
      next = cur.peek();
      if (var_index(next) < 0) cur.error("expected variable after '*'");
    }
    int var = var_index(next);
    if (var < 0) break;
    ++cur.pos;
    m[var] += parse_power(cur);
    saw_var = true;
  }
  if (!saw_coeff && !saw_var) cur.error("expected term");
  if (negative) coeff = -coeff;
  acc += MultiPoly::monomial(m, coeff);
}

}  // namespace

MultiPoly MultiPoly::parse(const std::string& text) {
  Cursor cur{text};
  if (cur.done()) fail(Errc::parse_error, "empty polynomial");
  if (cur.peek() == '0') {
    std::size_t save = cur.pos;
    ++cur.pos;
    if (cur.done()) return MultiPoly();
    cur.pos = save;
  }
  MultiPoly acc;
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
