#include "skein/heegaard.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>

#include "skein/error.hpp"

namespace skein {

namespace {

void require_unimodular(const GluingMatrix& g) {
  if (g.det() != 1 && g.det() != -1)
    fail(Errc::not_unimodular,
         "gluing matrix " + g.to_string() + " has determinant " +
             std::to_string(g.det()));
}

TorusCurve canonical_sign(TorusCurve c) {
  if (c.a < 0 || (c.a == 0 && c.b < 0)) return {-c.a, -c.b};
  return c;
}

}  // namespace

GluingMatrix GluingMatrix::inverse() const {
  require_unimodular(*this);
  int d = det();
  return {s * d, -q * d, -r * d, p * d};
}

std::string GluingMatrix::to_string() const {
  std::ostringstream os;
  os << p << ',' << q << ';' << r << ',' << s;
  return os.str();
}

GluingMatrix GluingMatrix::parse(const std::string& text) {
  GluingMatrix g;
  char c1 = 0, c2 = 0, c3 = 0;
  std::istringstream is(text);
  if (!(is >> g.p >> c1 >> g.q >> c2 >> g.r >> c3 >> g.s) || c1 != ',' ||
      c2 != ';' || c3 != ',' || !(is >> std::ws).eof())
    fail(Errc::parse_error, "expected \"p,q;r,s\", got \"" + text + "\"");
  return g;
}

TorusCurve image_curve(const GluingMatrix& g, TorusCurve c,
                       Direction direction) {
  require_unimodular(g);
  GluingMatrix m = direction == Direction::forward ? g : g.inverse();
  return canonical_sign({m.p * c.a + m.q * c.b, m.r * c.a + m.s * c.b});
}

TorusCurve killed_curve(const GluingMatrix& g, Side side) {
  require_unimodular(g);
  if (side == Side::H0) return {0, 1};
  return image_curve(g, {0, 1}, Direction::forward);
}

Ideal handlebody_ideal(const GluingMatrix& g, Side side) {
  TorusCurve killed = killed_curve(g, side);
  TorusCurve w = side == Side::H0 ? TorusCurve{1, 0}
                                  : image_curve(g, {1, 0}, Direction::forward);
  MultiPoly tw = trace_poly(w);
  std::vector<MultiPoly> gens;
  gens.push_back(trace_poly(killed) + MultiPoly(Rational(2)));
  gens.push_back(tw - trace_poly({w.a + killed.a, w.b + killed.b}));
  gens.push_back(tw - trace_poly({w.a - killed.a, w.b - killed.b}));
  gens.push_back(torus_relation());
  return Ideal(std::move(gens));
}

SolidTorusElement push_action(const GluingMatrix& g, Side side,
                              const SurfaceElement& e,
                              const SolidTorusElement& existing) {
  require_unimodular(g);
  SolidTorusElement out;
  for (const auto& [word, wcoeff] : e.terms()) {
    // Letters ordered innermost first. Left action on H0: the rightmost
    // letter attaches to the skein first. Right action on H1: the leftmost
    // letter attaches first, and curves are read through the inverse gluing.
    std::vector<LayerCurve> letters;
    letters.reserve(word.size());
    if (side == Side::H0) {
      for (auto it = word.rbegin(); it != word.rend(); ++it)
        letters.push_back({it->a, it->b});
    } else {
      for (const TorusCurve& c : word) {
        TorusCurve im = image_curve(g, c, Direction::inverse);
        letters.push_back({im.a, im.b});
      }
    }
    for (const LayerCurve& c : letters) {
      if (std::gcd(std::abs(c.a), std::abs(c.b)) > 1)
        fail(Errc::not_primitive,
             "pushed curve (" + std::to_string(c.a) + "," +
                 std::to_string(c.b) + ") is not primitive");
    }
    for (const auto& [zdeg, zcoeff] : existing.coefficients()) {
      std::vector<LayerCurve> layers(static_cast<std::size_t>(zdeg),
                                     LayerCurve{1, 0});
      layers.insert(layers.end(), letters.begin(), letters.end());
      out += resolve(layered_diagram(layers)) * (wcoeff * zcoeff);
    }
  }
  return out;
}

SplittingSpec::SplittingSpec(const GluingMatrix& g, std::string name)
    : gluing_(g), name_(std::move(name)) {
  require_unimodular(g);
  if (name_.empty()) name_ = "gluing " + g.to_string();
  killed_h0_ = killed_curve(g, Side::H0);
  killed_h1_ = killed_curve(g, Side::H1);
  ideal_h0_ = handlebody_ideal(g, Side::H0);
  ideal_h1_ = handlebody_ideal(g, Side::H1);
}

TorusCurve SplittingSpec::killed(Side side) const {
  return side == Side::H0 ? killed_h0_ : killed_h1_;
}

const Ideal& SplittingSpec::ideal(Side side) const {
  return side == Side::H0 ? ideal_h0_ : ideal_h1_;
}

SolidTorusElement SplittingSpec::push(Side side, const SurfaceElement& e,
                                      const SolidTorusElement& existing) const {
  return push_action(gluing_, side, e, existing);
}

namespace {

SplittingSpec lens_preset(const std::string& params) {
  int p = 0, q = 0;
  char comma = 0;
  std::istringstream is(params);
  if (!(is >> p >> comma >> q) || comma != ',' || !(is >> std::ws).eof())
    fail(Errc::bad_parameters, "lens preset needs \"lens:p,q\"");
  bool ok = (p == 0 && q == 1) || (0 < q && q < p);
  if (!ok || std::gcd(std::abs(p), std::abs(q)) != 1)
    fail(Errc::bad_parameters,
         "lens(p,q) needs gcd(p,q) = 1 and 0 < q < p (or p = 0, q = 1); got "
         "lens(" + std::to_string(p) + "," + std::to_string(q) + ")");
  std::string label = "lens(" + std::to_string(p) + "," + std::to_string(q) +
                      ")";
  // The H1 meridian disk is killed along the (p,q) curve, so the second
  // column is (p,q). The first column (alpha,beta) completes it to
  // determinant -1 via alpha*q - beta*p = -1, normalized by
  // 0 <= alpha < p; lens(2,1) lands on the matrix 1,2;1,1.
  if (p == 0) return SplittingSpec({-1, 0, 0, 1}, label);
  int alpha = 0, beta = 0;
  for (alpha = 0; alpha < p; ++alpha) {
    if ((alpha * q + 1) % p == 0) {
      beta = (alpha * q + 1) / p;
      break;
    }
  }
  GluingMatrix g{alpha, p, beta, q};
  if (g.det() != -1)
    fail(Errc::internal, "lens preset produced a non-unimodular matrix");
  return SplittingSpec(g, label);
}

}  // namespace

SplittingSpec preset(const std::string& name) {
  if (name == "s1xs2") return SplittingSpec({-1, 0, 0, 1}, "s1xs2");
  if (name == "s3") return SplittingSpec({0, 1, 1, 0}, "s3");
  if (name == "identity_double")
    return SplittingSpec(GluingMatrix::identity(), "identity_double");
  if (name.rfind("lens:", 0) == 0) return lens_preset(name.substr(5));
  fail(Errc::unknown_preset, "unknown preset \"" + name +
                                 "\"; expected lens:p,q, s1xs2, s3, or "
                                 "identity_double");
}

}  // namespace skein
