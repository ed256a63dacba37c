#pragma once

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "skein/laurent.hpp"

namespace skein {

// Value of one null-homotopic loop: -(t^2 + t^-2).
LaurentPoly loop_value();

// Element of the solid-torus skein module: polynomial in z (the core curve)
// with Laurent coefficients. phi = z^0 is the empty skein, the unit.
class SolidTorusElement {
public:
  SolidTorusElement() = default;

  static SolidTorusElement phi() { return z_power(0); }
  static SolidTorusElement z_power(
      int degree, const LaurentPoly& coeff = LaurentPoly::one());

  bool is_zero() const { return coeffs_.empty(); }
  const std::map<int, LaurentPoly>& coefficients() const { return coeffs_; }
  LaurentPoly coeff(int degree) const;
  int degree() const;  // highest z-power; -1 when zero

  SolidTorusElement& operator+=(const SolidTorusElement& rhs);
  SolidTorusElement& operator-=(const SolidTorusElement& rhs);
  SolidTorusElement operator+(const SolidTorusElement& rhs) const;
  SolidTorusElement operator-(const SolidTorusElement& rhs) const;
  SolidTorusElement operator-() const;
  SolidTorusElement operator*(const LaurentPoly& scalar) const;
  // The solid-torus skein module is the polynomial ring on z.
  SolidTorusElement operator*(const SolidTorusElement& rhs) const;
  bool operator==(const SolidTorusElement&) const = default;

  // "(t^-1)*z^2 + (-t^3 - t^-1)*phi"; parse inverts it.
  std::string to_string() const;
  static SolidTorusElement parse(const std::string& text);

private:
  void prune(int degree);
  std::map<int, LaurentPoly> coeffs_;  // z-degree -> coefficient, no zeros
};

inline std::string to_string(const SolidTorusElement& e) {
  return e.to_string();
}

// One layer of a layered diagram: the (a, b) torus curve, a = longitude
// (core) winding, b = meridian winding. Canonical sign: a > 0, or a == 0 and
// b > 0.
struct LayerCurve {
  int a = 0;
  int b = 0;
  bool operator==(const LayerCurve&) const = default;
};

// Planar diagram code of a blackboard-framed link in the annulus.
//
// Crossing slots are numbered counterclockwise 0..3 starting at the
// southwest end: 0 = SW, 1 = SE, 2 = NE, 3 = NW. The strand through slots
// 0-2 and the strand through slots 1-3 meet; over_first means the 0-2
// strand passes over. Each edge is a strand segment with an intrinsic
// direction (end 0 -> end 1) and a seam weight: the signed number of times
// the segment crosses the fixed radial seam, so component winding numbers
// are cycle sums of weights.
struct AnnulusDiagram {
  struct Edge {
    int weight = 0;
  };
  struct Crossing {
    std::array<int, 4> edge{};  // edge id at slot 0..3
    std::array<int, 4> end{};   // which end (0/1) of that edge sits here
    bool over_first = true;
  };
  struct FreeLoop {
    int winding = 0;       // 0 = null-homotopic, +-1 = core-parallel
    bool meridian = false;  // loop spans all radii at one angle (bounds a
                            // meridian disk); affects stacking only
  };

  std::vector<Edge> edges;
  std::vector<Crossing> crossings;
  std::vector<FreeLoop> free_loops;
  // Radial layer decomposition (innermost first) when the diagram was built
  // from curve layers; absent for hand-written planar codes.
  std::optional<std::vector<LayerCurve>> layers;

  bool is_empty() const {
    return edges.empty() && crossings.empty() && free_loops.empty();
  }
};

// Structural validation: end matching, planarity of the code (rotation
// system traces to genus zero), winding bounds. Throws Error(invalid_diagram).
void validate(const AnnulusDiagram& d);

// Canonical serialization (edges renumbered by first occurrence, directions
// normalized); equal codes imply equal diagrams up to relabeling.
std::string canonical_code(const AnnulusDiagram& d);

AnnulusDiagram empty_diagram();
AnnulusDiagram core_power(int k);  // k disjoint parallel cores

// Standard blackboard-framed diagram of the primitive (a,b) torus curve:
// |a| strands around the annulus; the meridian winding appears as |b| kinks
// when |a| = 1 and as |b| braid sweeps when |a| >= 2; (0,+-1) is the
// meridian, a trivial-looking loop flagged meridian. Throws zero_curve /
// not_primitive.
AnnulusDiagram curve_diagram(int a, int b);

// Diagram of curve layers stacked innermost-first over nothing. Each layer
// beyond the innermost crosses everything beneath it when its meridian
// winding is nonzero (one clasp pass around all deeper strands per wind).
AnnulusDiagram layered_diagram(const std::vector<LayerCurve>& layers);

// Two core-parallel loops joined by a clasp whose two crossings share
// over_first = h. h = true resolves to t^2 z^2 + (t^-6 - t^2) phi.
AnnulusDiagram clasp_diagram(bool over_first);

// Places later arguments at outer radii (outer crosses over inner). Exact
// for layer-built diagrams; hand-written codes are accepted only where the
// union is forced (outer parts without meridian content).
AnnulusDiagram stack(const std::vector<AnnulusDiagram>& parts);

// Kauffman resolution to the solid-torus normal form: coefficient t on the
// A-smoothing, t^-1 on B, loop_value() per null-homotopic loop, z per
// core-parallel loop. Memoized on canonical_code.
SolidTorusElement resolve(const AnnulusDiagram& d);

// Resolution with an explicit crossing-choice policy (order independence is
// a theorem; this entry point exercises it). memoize=false bypasses the
// shared cache.
using CrossingChooser = std::function<std::size_t(const AnnulusDiagram&)>;
SolidTorusElement resolve_choosing(const AnnulusDiagram& d,
                                   const CrossingChooser& chooser,
                                   bool memoize);

// Independent oracle: sums all 2^n complete smoothings, coefficient
// t^(#A - #B) each. Crossing count capped at 24 (too_many_crossings).
SolidTorusElement state_sum(const AnnulusDiagram& d);

// JSON planar-code round trip; format documented in the README.
std::string diagram_to_json(const AnnulusDiagram& d);
AnnulusDiagram diagram_from_json(const std::string& text);

}  // namespace skein
