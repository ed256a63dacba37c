#pragma once

#include <string>

#include "skein/annulus.hpp"
#include "skein/groebner.hpp"
#include "skein/surface.hpp"

namespace skein {

// Which solid torus of the splitting. H0 is glued by the identity; H1 by
// the gluing matrix.
enum class Side { H0, H1 };

enum class Direction { forward, inverse };

// Unimodular change of torus coordinates, acting on (longitude exponent,
// meridian exponent) column vectors.
struct GluingMatrix {
  // | p  q |
  // | r  s |
  int p = 1, q = 0;
  int r = 0, s = 1;

  int det() const { return p * s - q * r; }
  bool operator==(const GluingMatrix&) const = default;

  static GluingMatrix identity() { return {}; }
  // Exact integer inverse; requires det = +-1.
  GluingMatrix inverse() const;

  std::string to_string() const;       // "1,2;1,1"
  static GluingMatrix parse(const std::string& text);
};

// Image of a curve under the gluing (or its inverse), in canonical sign.
// Throws not_unimodular.
TorusCurve image_curve(const GluingMatrix& g, TorusCurve c,
                       Direction direction);

// The boundary curve that bounds a meridian disk of the given handlebody:
// H0 -> (0,1), H1 -> g * (0,1). Canonical sign. Throws not_unimodular.
TorusCurve killed_curve(const GluingMatrix& g, Side side);

// Defining ideal of the handlebody's character variety inside the torus
// character ring: traces are blind to the killed curve, so tr(killed) = -2
// (sign convention x = -tr) and tr(w) = tr(w +- killed) for the complement
// curve w = image of (1,0). Throws not_unimodular.
Ideal handlebody_ideal(const GluingMatrix& g, Side side);

// Action of a surface element on a solid-torus skein: each word becomes
// curve layers stacked outside `existing` and resolved. H0 carries the left
// action (later letters attach first), H1 the right action (earlier letters
// attach first, curves mapped through the inverse gluing). Throws
// not_primitive when an image curve is a nontrivial multiple.
SolidTorusElement push_action(const GluingMatrix& g, Side side,
                              const SurfaceElement& e,
                              const SolidTorusElement& existing);

// A splitting with its derived data, immutable after construction.
class SplittingSpec {
 public:
  explicit SplittingSpec(const GluingMatrix& g, std::string name = "");

  const GluingMatrix& gluing() const { return gluing_; }
  const std::string& name() const { return name_; }
  TorusCurve killed(Side side) const;
  const Ideal& ideal(Side side) const;

  SolidTorusElement push(Side side, const SurfaceElement& e,
                         const SolidTorusElement& existing) const;

 private:
  GluingMatrix gluing_;
  std::string name_;
  TorusCurve killed_h0_, killed_h1_;
  Ideal ideal_h0_, ideal_h1_;
};

// Named splittings: "lens:p,q" (gcd(p,q) = 1, 0 < q < p or (p,q) = (0,1)),
// "s1xs2", "s3", "identity_double". Throws Error(unknown_preset) for other
// names and Error(bad_parameters) for invalid lens parameters.
SplittingSpec preset(const std::string& name);

}  // namespace skein
