#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <vector>

#include "doctest.h"
#include "skein/annulus.hpp"
#include "skein/error.hpp"

using namespace skein;

namespace {

LaurentPoly L(const std::string& s) { return LaurentPoly::parse(s); }
SolidTorusElement S(const std::string& s) { return SolidTorusElement::parse(s); }

SolidTorusElement zpow(int k, const LaurentPoly& c = LaurentPoly::one()) {
  return SolidTorusElement::z_power(k, c);
}

// t^2 z^2 + (t^-6 - t^2) phi and its mirror; the two clasp values.
SolidTorusElement delta() {
  return zpow(2, L("t^2")) + zpow(0, L("t^-6 - t^2"));
}
SolidTorusElement delta_bar() {
  return zpow(2, L("t^-2")) + zpow(0, L("t^6 - t^-2"));
}

int layered_crossings(const std::vector<LayerCurve>& layers) {
  int total = 0;
  int depth = 0;
  for (auto l : layers) {
    if (l.a < 0 || (l.a == 0 && l.b < 0)) {
      l.a = -l.a;
      l.b = -l.b;
    }
    int winds = std::abs(l.b);
    if (l.a == 0) {
      total += 2 * depth;
      continue;
    }
    if (l.a == 1)
      total += winds;
    else
      total += winds * (l.a - 1);
    total += 2 * depth * winds;
    depth += l.a;
  }
  return total;
}

}  // namespace

TEST_CASE("loop value") {
  CHECK(loop_value() == L("-t^2 - t^-2"));
  CHECK(loop_value().eval_minus_one() == Rational(-2));
}

TEST_CASE("solid torus element arithmetic and printing") {
  SolidTorusElement d = delta();
  CHECK(d.to_string() == "(t^2)*z^2 + (t^-6 - t^2)*phi");
  CHECK(SolidTorusElement::parse(d.to_string()) == d);
  CHECK(S("0").is_zero());
  CHECK(S("0").degree() == -1);
  CHECK(d.degree() == 2);
  CHECK(d.coeff(2) == L("t^2"));
  CHECK(d.coeff(1).is_zero());

  SolidTorusElement z = zpow(1);
  CHECK(z.to_string() == "(1)*z");
  CHECK((z * z).to_string() == "(1)*z^2");
  CHECK((d * z) == zpow(3, L("t^2")) + zpow(1, L("t^-6 - t^2")));
  CHECK((d - d).is_zero());
  CHECK((-d) + d == SolidTorusElement());
  CHECK((d * L("0")).is_zero());

  SolidTorusElement p = zpow(3) + zpow(0, L("-1/2*t^-5 - 1/2*t^-3"));
  CHECK(SolidTorusElement::parse(p.to_string()) == p);

  CHECK_THROWS_AS(S("(t)*q"), Error);
  CHECK_THROWS_AS(S("(t*z"), Error);
  CHECK_THROWS_AS(S("z"), Error);
  CHECK_THROWS_AS(S(""), Error);
}

TEST_CASE("core curves and meridian") {
  CHECK(resolve(empty_diagram()) == zpow(0));
  CHECK(resolve(curve_diagram(1, 0)) == zpow(1));
  CHECK(resolve(core_power(0)) == zpow(0));
  CHECK(resolve(core_power(3)) == zpow(3));
  CHECK(resolve(curve_diagram(0, 1)) == zpow(0, loop_value()));
  CHECK(resolve(curve_diagram(0, -1)) == zpow(0, loop_value()));
  CHECK(curve_diagram(-1, 1).layers->at(0) == LayerCurve{1, -1});
}

TEST_CASE("curve construction errors") {
  CHECK_THROWS_WITH_AS(curve_diagram(0, 0), doctest::Contains("(0,0)"), Error);
  CHECK_THROWS_AS(curve_diagram(2, 0), Error);
  CHECK_THROWS_AS(curve_diagram(2, 4), Error);
  CHECK_THROWS_AS(curve_diagram(0, 2), Error);
  try {
    curve_diagram(3, 6);
    FAIL("expected not_primitive");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_primitive);
  }
  try {
    curve_diagram(0, 0);
    FAIL("expected zero_curve");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::zero_curve);
  }
}

TEST_CASE("curl values pin the framing normalization") {
  // (1, b) carries |b| curls; positive b gives -t^-3 per curl.
  CHECK(resolve(curve_diagram(1, 1)) == zpow(1, L("-t^-3")));
  CHECK(resolve(curve_diagram(1, -1)) == zpow(1, L("-t^3")));
  CHECK(resolve(curve_diagram(1, 2)) == zpow(1, L("t^-6")));
  CHECK(resolve(curve_diagram(1, -2)) == zpow(1, L("t^6")));
  CHECK(resolve(curve_diagram(1, 3)) == zpow(1, L("-t^-9")));

  for (int b = 0; b < 4; ++b) {
    CHECK(resolve(curve_diagram(1, b + 1)) ==
          resolve(curve_diagram(1, b)) * L("-t^-3"));
    CHECK(resolve(curve_diagram(1, -b - 1)) ==
          resolve(curve_diagram(1, -b)) * L("-t^3"));
  }

  // The same curl through the raw planar-code path, both signs.
  AnnulusDiagram kink = diagram_from_json(
      R"({"crossings": [[0, 1, 1, 0, "over_first"]], "closures": [], "seam": [1, 0]})");
  CHECK(resolve(kink) == zpow(1, L("-t^3")));
  kink.crossings[0].over_first = false;
  CHECK(resolve(kink) == zpow(1, L("-t^-3")));
}

TEST_CASE("clasp fixtures") {
  CHECK(resolve(clasp_diagram(true)) == delta());
  CHECK(resolve(clasp_diagram(false)) == delta_bar());
  CHECK(state_sum(clasp_diagram(true)) == delta());
  CHECK(state_sum(clasp_diagram(false)) == delta_bar());
}

TEST_CASE("poke with mixed flags cancels") {
  // Same wiring as the clasp but one flag flipped: removable poke.
  AnnulusDiagram poke = clasp_diagram(true);
  poke.crossings[1].over_first = false;
  CHECK(resolve(poke) == zpow(2));
  CHECK(state_sum(poke) == zpow(2));
  poke.crossings[0].over_first = false;
  poke.crossings[1].over_first = true;
  CHECK(resolve(poke) == zpow(2));
}

TEST_CASE("layered products") {
  // Core with a (1,-1) layer above it: curl times clasp.
  CHECK(resolve(layered_diagram({{1, 0}, {1, -1}})) == delta() * L("-t^3"));
  // Mirror: core with a (1,1) layer above it.
  CHECK(resolve(layered_diagram({{1, 0}, {1, 1}})) == delta_bar() * L("-t^-3"));
  // Inner curl under a plain core: no interaction.
  CHECK(resolve(layered_diagram({{1, 1}, {1, 0}})) == zpow(2, L("-t^-3")));
  // Meridian around one core: eigenvalue -(t^4 + t^-4).
  CHECK(resolve(layered_diagram({{1, 0}, {0, 1}})) == zpow(1, L("-t^4 - t^-4")));
  // Meridian inside the core bounds a disk away from it.
  CHECK(resolve(layered_diagram({{0, 1}, {1, 0}})) ==
        zpow(1, loop_value()));
}

TEST_CASE("two-strand torus curves") {
  CHECK(resolve(curve_diagram(2, 1)) ==
        zpow(2, L("t^-1")) + zpow(0, L("-t^3 - t^-1")));
  CHECK(resolve(curve_diagram(2, -1)) ==
        zpow(2, L("t")) + zpow(0, L("-t^-3 - t")));

  // Specialization at t = -1 reads 2 - z^2 either way.
  SolidTorusElement v = resolve(curve_diagram(2, 1));
  CHECK(v.coeff(2).eval_minus_one() == Rational(-1));
  CHECK(v.coeff(0).eval_minus_one() == Rational(2));
}

TEST_CASE("stacking") {
  CHECK(resolve(stack({core_power(1), core_power(2)})) == zpow(3));
  CHECK(resolve(stack({empty_diagram(), curve_diagram(1, 1)})) ==
        zpow(1, L("-t^-3")));

  // gamma: two (1,-1) layers; outer curl + clasp over the inner one.
  AnnulusDiagram gamma = stack({curve_diagram(1, -1), curve_diagram(1, -1)});
  CHECK(resolve(gamma) == delta() * L("t^6"));
  CHECK(resolve(gamma) == zpow(2, L("t^8")) + zpow(0, L("1 - t^8")));
  CHECK(state_sum(gamma) == resolve(gamma));
  CHECK(canonical_code(gamma) ==
        canonical_code(layered_diagram({{1, -1}, {1, -1}})));

  // Stacking is associative on layer-built parts.
  AnnulusDiagram a = curve_diagram(1, -1);
  AnnulusDiagram b = curve_diagram(1, 1);
  AnnulusDiagram c = curve_diagram(2, 1);
  CHECK(canonical_code(stack({stack({a, b}), c})) ==
        canonical_code(stack({a, stack({b, c})})));

  // Meridian winding must sit innermost unless provenance is kept.
  CHECK(resolve(stack({curve_diagram(1, 0), curve_diagram(0, 1)})) ==
        zpow(1, L("-t^4 - t^-4")));

  // Raw codes are stackable only when the outer parts carry no meridian
  // content.
  CHECK(resolve(stack({clasp_diagram(true), core_power(1)})) ==
        delta() * zpow(1));
  CHECK_THROWS_AS(stack({core_power(1), clasp_diagram(true)}), Error);

  AnnulusDiagram bare_meridian;
  bare_meridian.free_loops.push_back({0, true});
  CHECK(resolve(stack({bare_meridian, core_power(1)})) ==
        zpow(1, loop_value()));
  try {
    stack({core_power(1), bare_meridian});
    FAIL("expected invalid_diagram");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::invalid_diagram);
  }
}

TEST_CASE("disjoint null loop multiplies by the loop value") {
  AnnulusDiagram d = clasp_diagram(true);
  d.free_loops.push_back({0, false});
  CHECK(resolve(d) == delta() * loop_value());
  CHECK(state_sum(d) == delta() * loop_value());
}

TEST_CASE("resolve agrees with the state sum on random layered diagrams") {
  std::mt19937 rng(20260817);
  const std::vector<LayerCurve> pool = {{1, 0},  {1, 1},  {1, -1}, {1, 2},
                                        {1, -2}, {2, 1},  {2, -1}, {0, 1},
                                        {3, 1},  {3, -1}};
  int accepted = 0;
  while (accepted < 40) {
    int n = 1 + static_cast<int>(rng() % 3);
    std::vector<LayerCurve> layers;
    for (int i = 0; i < n; ++i) layers.push_back(pool[rng() % pool.size()]);
    if (layered_crossings(layers) > 6) continue;
    ++accepted;
    AnnulusDiagram d = layered_diagram(layers);
    CHECK(resolve(d) == state_sum(d));
  }
}

TEST_CASE("resolution order does not matter") {
  std::mt19937 rng(7);
  CrossingChooser random_choice = [&rng](const AnnulusDiagram& d) {
    return static_cast<std::size_t>(rng() % d.crossings.size());
  };
  std::vector<AnnulusDiagram> suite;
  suite.push_back(clasp_diagram(true));
  suite.push_back(stack({curve_diagram(1, -1), curve_diagram(1, -1)}));
  suite.push_back(curve_diagram(2, 3));
  suite.push_back(layered_diagram({{1, 1}, {2, -1}}));
  suite.push_back(layered_diagram({{1, 0}, {0, 1}}));
  for (const auto& d : suite) {
    SolidTorusElement expect = resolve(d);
    for (int trial = 0; trial < 5; ++trial)
      CHECK(resolve_choosing(d, random_choice, false) == expect);
  }
}

TEST_CASE("state sum crossing cap") {
  AnnulusDiagram big = curve_diagram(1, 25);
  CHECK(resolve(big) == zpow(1, L("-t^-75")));
  try {
    state_sum(big);
    FAIL("expected too_many_crossings");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::too_many_crossings);
  }
}

TEST_CASE("json round trips") {
  std::vector<AnnulusDiagram> suite;
  suite.push_back(curve_diagram(1, 1));
  suite.push_back(clasp_diagram(false));
  suite.push_back(stack({curve_diagram(1, -1), curve_diagram(1, -1)}));
  suite.push_back(curve_diagram(0, 1));
  suite.push_back(core_power(2));
  for (const auto& d : suite) {
    AnnulusDiagram back = diagram_from_json(diagram_to_json(d));
    CHECK(canonical_code(back) == canonical_code(d));
    CHECK(resolve(back) == resolve(d));
    CHECK(back.layers.has_value() == d.layers.has_value());
  }

  // Layer provenance survives the round trip and keeps stacking exact.
  AnnulusDiagram core = diagram_from_json(diagram_to_json(curve_diagram(1, 0)));
  REQUIRE(core.layers.has_value());
  CHECK(resolve(stack({core, curve_diagram(1, 1)})) ==
        delta_bar() * L("-t^-3"));
}

TEST_CASE("json rejects malformed codes") {
  CHECK_THROWS_AS(diagram_from_json("not json"), Error);
  try {
    diagram_from_json("[1,2]");
    FAIL("expected invalid_diagram");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::invalid_diagram);
  }
  // Edge id used once.
  CHECK_THROWS_AS(
      diagram_from_json(
          R"({"crossings": [[0, 1, 2, 3, "over_first"]], "closures": []})"),
      Error);
  // Edge id used three times.
  CHECK_THROWS_AS(
      diagram_from_json(
          R"({"crossings": [[0, 0, 0, 1, "over_first"]], "closures": []})"),
      Error);
  // Bad flag word.
  CHECK_THROWS_AS(
      diagram_from_json(
          R"({"crossings": [[0, 1, 1, 0, "over"]], "closures": []})"),
      Error);
  // Seam length mismatch.
  CHECK_THROWS_AS(
      diagram_from_json(
          R"({"crossings": [[0, 1, 1, 0, "over_first"]], "seam": [1]})"),
      Error);
  // Genus-one wiring is rejected by the planarity check.
  try {
    diagram_from_json(
        R"({"crossings": [[0, 1, 0, 1, "over_first"]], "closures": [], "seam": [0, 0]})");
    FAIL("expected invalid_diagram");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::invalid_diagram);
  }
  // Provenance that does not match the code.
  try {
    diagram_from_json(
        R"({"crossings": [[0, 1, 1, 0, "over_first"]], "seam": [1, 0], "layers": [[1, 0]]})");
    FAIL("expected invalid_diagram");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::invalid_diagram);
  }
}

TEST_CASE("validation rejects broken structures") {
  AnnulusDiagram d;
  d.edges = {{0}};
  AnnulusDiagram::Crossing x;
  x.edge = {0, 0, 0, 0};
  x.end = {0, 1, 0, 1};
  d.crossings = {x};
  CHECK_THROWS_AS(validate(d), Error);

  AnnulusDiagram loops;
  loops.free_loops.push_back({2, false});
  CHECK_THROWS_AS(validate(loops), Error);
}
