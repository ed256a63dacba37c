#include "skein/surface.hpp"

#include <mutex>
#include <sstream>

#include "skein/error.hpp"

namespace skein {

SurfaceWord concat(const SurfaceWord& u, const SurfaceWord& v) {
  SurfaceWord out = u;
  out.insert(out.end(), v.begin(), v.end());
  return out;
}

std::string to_string(const TorusCurve& c) {
  if (c == TorusCurve{1, 0}) return "L";
  if (c == TorusCurve{0, 1}) return "M";
  if (c == TorusCurve{1, 1}) return "LM";
  std::ostringstream os;
  os << '(' << c.a << ',' << c.b << ')';
  return os.str();
}

std::string to_string(const SurfaceWord& w) {
  if (w.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << '.';
    os << to_string(w[i]);
  }
  return os.str();
}

SurfaceElement SurfaceElement::word(const SurfaceWord& w,
                                    const LaurentPoly& coeff) {
  SurfaceElement e;
  if (!coeff.is_zero()) e.terms_[w] = coeff;
  return e;
}

SurfaceElement& SurfaceElement::operator+=(const SurfaceElement& rhs) {
  for (const auto& [w, c] : rhs.terms_) {
    auto it = terms_.emplace(w, LaurentPoly()).first;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
  return *this;
}

SurfaceElement& SurfaceElement::operator-=(const SurfaceElement& rhs) {
  return *this += -rhs;
}

SurfaceElement SurfaceElement::operator+(const SurfaceElement& rhs) const {
  SurfaceElement out = *this;
  out += rhs;
  return out;
}

SurfaceElement SurfaceElement::operator-(const SurfaceElement& rhs) const {
  SurfaceElement out = *this;
  out -= rhs;
  return out;
}

SurfaceElement SurfaceElement::operator-() const {
  SurfaceElement out;
  for (const auto& [w, c] : terms_) out.terms_[w] = -c;
  return out;
}

SurfaceElement SurfaceElement::operator*(const LaurentPoly& scalar) const {
  SurfaceElement out;
  if (scalar.is_zero()) return out;
  for (const auto& [w, c] : terms_) out.terms_[w] = c * scalar;
  return out;
}

std::string SurfaceElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << '(' << c.to_string() << ")*" << skein::to_string(w);
  }
  return os.str();
}

namespace {

std::mutex trace_mutex;
std::map<std::pair<int, int>, MultiPoly> trace_memo;

MultiPoly trace_rec(int a, int b) {
  if (a < 0 || (a == 0 && b < 0)) {
    a = -a;
    b = -b;
  }
  if (a == 0 && b == 0) return MultiPoly(Rational(-2));
  if (a == 1 && b == 0) return MultiPoly::variable(kVarY);
  if (a == 0 && b == 1) return MultiPoly::variable(kVarX);
  if (a == 1 && b == 1) return MultiPoly::variable(kVarZ);
  if (a == 1 && b == -1) {
    // T(1,1) = -T(1,0) T(0,1) - T(1,-1), so T(1,-1) = -(xy + z).
    return -(MultiPoly::variable(kVarX) * MultiPoly::variable(kVarY) +
             MultiPoly::variable(kVarZ));
  }
  {
    std::lock_guard<std::mutex> lock(trace_mutex);
    auto it = trace_memo.find({a, b});
    if (it != trace_memo.end()) return it->second;
  }
  // Euclidean descent: subtract the fixed primitive step q, using
  // T(c) = -T(q) T(c - q) - T(2q - c).
  int qa, qb;
  if (b == 0) {
    qa = 1, qb = 0;
  } else if (a == 0) {
    qa = 0, qb = 1;
  } else if (b > 0) {
    qa = 1, qb = 1;
  } else {
    qa = 1, qb = -1;
  }
  MultiPoly value = -(trace_rec(qa, qb) * trace_rec(a - qa, b - qb)) -
                    trace_rec(2 * qa - a, 2 * qb - b);
  std::lock_guard<std::mutex> lock(trace_mutex);
  return trace_memo.emplace(std::pair{a, b}, std::move(value)).first->second;
}

}  // namespace

MultiPoly trace_poly(TorusCurve c) { return trace_rec(c.a, c.b); }

MultiPoly torus_relation() {
  MultiPoly x = MultiPoly::variable(kVarX);
  MultiPoly y = MultiPoly::variable(kVarY);
  MultiPoly z = MultiPoly::variable(kVarZ);
  return x * x + y * y + z * z + x * y * z + MultiPoly(Rational(-4));
}

MultiPoly specialize(const SurfaceElement& e) {
  MultiPoly out;
  for (const auto& [w, c] : e.terms()) {
    MultiPoly prod = MultiPoly(c.eval_minus_one());
    for (const auto& letter : w) prod = prod * trace_poly(letter);
    out = out + prod;
  }
  return out;
}

}  // namespace skein
