#pragma once

#include <map>
#include <string>
#include <vector>

#include "skein/annulus.hpp"
#include "skein/groebner.hpp"
#include "skein/heegaard.hpp"
#include "skein/laurent.hpp"
#include "skein/surface.hpp"

namespace skein {

// Basis tensor of the chain group: z-power of the H1 factor, one surface
// word per tensor slot, z-power of the H0 factor. The degree of a chain is
// the number of slots.
struct ChainKey {
  int b1_deg = 0;
  std::vector<SurfaceWord> words;
  int b0_deg = 0;
  auto operator<=>(const ChainKey&) const = default;
};

std::string to_string(const ChainKey& k);

// Formal sum of degree-n tensors with Laurent coefficients. The degree is
// part of the value: adding chains of different degrees is a usage error.
class HochschildChain {
 public:
  HochschildChain() = default;
  explicit HochschildChain(int degree) : degree_(degree) {}

  // b1 (x) [words] (x) b0, expanded to z-power keys by linearity.
  static HochschildChain term(const SolidTorusElement& b1,
                              const std::vector<SurfaceWord>& words,
                              const SolidTorusElement& b0,
                              const LaurentPoly& coeff = LaurentPoly::one());

  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<ChainKey, LaurentPoly>& terms() const { return terms_; }

  HochschildChain& operator+=(const HochschildChain& rhs);
  HochschildChain& operator-=(const HochschildChain& rhs);
  HochschildChain operator+(const HochschildChain& rhs) const;
  HochschildChain operator-(const HochschildChain& rhs) const;
  HochschildChain operator-() const;
  HochschildChain operator*(const LaurentPoly& scalar) const;
  bool operator==(const HochschildChain&) const = default;

  std::string to_string() const;

 private:
  int degree_ = 0;
  std::map<ChainKey, LaurentPoly> terms_;  // no zero coefficients
};

inline std::string to_string(const HochschildChain& c) { return c.to_string(); }

// Alternating-sum boundary: slot 1 pushed into the H1 factor (right
// action), adjacent slots concatenated with alternating signs, the last
// slot pushed into the H0 factor with sign (-1)^n. Throws degree_zero.
HochschildChain boundary(const HochschildChain& c, const SplittingSpec& split);

// Minimum (1+t)-valuation over the coefficients of boundary(c); infinite
// exactly when the boundary is identically zero.
Valuation cycle_valuation(const HochschildChain& c, const SplittingSpec& split);

// A chain together with the (1+t)-power prefactor it has absorbed.
struct FiltrationLevel {
  HochschildChain chain;
  int shift = 0;
};

// Multiplies every coefficient by (1+t)^k and records the shift.
FiltrationLevel filtration_shift(const FiltrationLevel& c, int k);

// The degree-1 chains phi (x) [w] (x) phi are exactly the surface elements;
// inverse of e |-> term(phi, {w}, phi) summed. Throws internal on chains
// with other shapes.
SurfaceElement degree1_element(const HochschildChain& c);

enum class LiftMode { library, solver };

// Degree-1 chain with phi ends whose slot element specializes to p.
//
// Library mode: classes in the span of { y-z, y(y-z) } get the pinned lifts
//   y - z    |->  1*[L] + t^3*[LM]
//   y(y-z)   |->  (-1/2 t^-3 - 1/2 t^-5)*[L.L] - 1/2*[L.LM] - 1/2*[LM.L]
// and anything else goes through the monomial rule
//   x^i y^j z^k  |->  (-t^3)^k * [M x i, L x j, LM x k].
//
// Solver mode: per-monomial coefficients c*(-t)^e with e in [-8, 8] are
// swept for the boundary of highest (1+t)-valuation; the library candidate
// competes. Throws no_lift_found when nothing reaches valuation >= 1, and
// not_in_span when p is not a combination of the Tor1 basis classes modulo
// the denominator ideal.
HochschildChain lift_class(const MultiPoly& p, LiftMode mode,
                           const SplittingSpec& split, const Tor1Result& tor1);

// Monomial staircase of rationals[x,y,z] / (relation + J + K): the
// specialization of the degree-0 column of the complex at t = -1.
QuotientBasis specialized_hh0(const SplittingSpec& split, int degree_bound = 8);

enum class VerdictKind {
  torsion_witness,
  no_torsion_certified,
  inconclusive,
};

struct CycleEvidence {
  MultiPoly class_poly;
  HochschildChain lift;
  HochschildChain image;  // boundary of the lift
  Valuation valuation;
  std::vector<std::string> notes;
};

struct TorsionReport {
  std::string manifold;
  GluingMatrix gluing;
  long tor1_dimension = 0;
  std::vector<MultiPoly> tor1_basis;
  bool tor1_stabilized = false;
  int degree_bound = 0;
  std::vector<CycleEvidence> cycles;
  VerdictKind kind = VerdictKind::inconclusive;
  int inconclusive_level = 0;  // meaningful for kind == inconclusive
  std::vector<std::string> notes;

  // "TORSION_WITNESS", "NO_TORSION_CERTIFIED", "INCONCLUSIVE_AT_LEVEL(k)".
  std::string verdict_string() const;
};

// Full pipeline: Tor1 basis at t = -1 (degree bound escalating 8 -> 16 ->
// 32 until stabilized or a torsion witness appears), one lift per basis
// class, boundary valuations, verdict:
//   - some valuation exactly 1            -> TORSION_WITNESS
//   - stabilized and every boundary zero  -> NO_TORSION_CERTIFIED
//   - anything else                       -> INCONCLUSIVE_AT_LEVEL(min val)
// A partial (unstabilized) basis can witness torsion but never certify its
// absence.
TorsionReport torsion_verdict(const SplittingSpec& split,
                              LiftMode mode = LiftMode::library);

// Stable-field-order JSON: {manifold, gluing, tor1: {dimension, basis[],
// stabilized, degree_bound}, cycles: [{class, lift, boundary, valuation}],
// verdict, notes[]}. valuation is an integer or the string "infinity".
std::string report_to_json(const TorsionReport& r);

}  // namespace skein
