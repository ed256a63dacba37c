#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "skein/error.hpp"
#include "skein/heegaard.hpp"

using namespace skein;

namespace {

LaurentPoly L(const std::string& s) { return LaurentPoly::parse(s); }
SolidTorusElement S(const std::string& s) { return SolidTorusElement::parse(s); }
MultiPoly P(const std::string& s) { return MultiPoly::parse(s); }

const GluingMatrix kLens21{1, 2, 1, 1};
const GluingMatrix kS1xS2{-1, 0, 0, 1};
const GluingMatrix kSwap{0, 1, 1, 0};

SolidTorusElement delta() {
  return S("(t^2)*z^2 + (t^-6 - t^2)*phi");
}
SolidTorusElement delta_bar() {
  return S("(t^-2)*z^2 + (t^6 - t^-2)*phi");
}

GluingMatrix random_unimodular(std::mt19937& rng) {
  GluingMatrix g;
  int steps = 3 + static_cast<int>(rng() % 6);
  for (int i = 0; i < steps; ++i) {
    GluingMatrix e;
    switch (rng() % 3) {
      case 0: e = {1, 1, 0, 1}; break;
      case 1: e = {1, -1, 0, 1}; break;
      default: e = {0, -1, 1, 0}; break;
    }
    g = GluingMatrix{g.p * e.p + g.q * e.r, g.p * e.q + g.q * e.s,
                     g.r * e.p + g.s * e.r, g.r * e.q + g.s * e.s};
  }
  return g;
}

}  // namespace

TEST_CASE("matrix basics") {
  CHECK(kLens21.det() == -1);
  CHECK(GluingMatrix::identity().det() == 1);
  CHECK(kLens21.inverse() == GluingMatrix{-1, 2, 1, -1});
  CHECK(kS1xS2.inverse() == kS1xS2);
  CHECK(GluingMatrix::parse("1,2;1,1") == kLens21);
  CHECK(GluingMatrix::parse("-1,0;0,1") == kS1xS2);
  CHECK(GluingMatrix::parse(kLens21.to_string()) == kLens21);
  CHECK_THROWS_AS(GluingMatrix::parse("1,2;1"), Error);
  CHECK_THROWS_AS(GluingMatrix::parse("1,2,1,1"), Error);
  CHECK_THROWS_AS(GluingMatrix::parse("1,2;1,1extra"), Error);
  GluingMatrix twice{2, 0, 0, 2};
  CHECK_THROWS_AS(twice.inverse(), Error);
}

TEST_CASE("curve images") {
  CHECK(image_curve(kLens21, {2, 1}, Direction::inverse) == TorusCurve{0, 1});
  CHECK(image_curve(kLens21, {1, 1}, Direction::inverse) == TorusCurve{1, 0});
  CHECK(image_curve(kLens21, {1, 0}, Direction::inverse) == TorusCurve{1, -1});
  CHECK(image_curve(GluingMatrix::identity(), {3, -2}, Direction::forward) ==
        TorusCurve{3, -2});
  CHECK(image_curve(kLens21, {0, 1}, Direction::forward) == TorusCurve{2, 1});

  try {
    image_curve({2, 0, 0, 2}, {1, 0}, Direction::forward);
    FAIL("not unimodular accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_unimodular);
  }

  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    GluingMatrix g = random_unimodular(rng);
    int a = static_cast<int>(rng() % 9) - 4;
    int b = static_cast<int>(rng() % 9) - 4;
    if (a < 0 || (a == 0 && b < 0)) {
      a = -a;
      b = -b;
    }
    TorusCurve c{a, b};
    CHECK(image_curve(g, image_curve(g, c, Direction::forward),
                      Direction::inverse) == c);
    CHECK(image_curve(g, image_curve(g, c, Direction::inverse),
                      Direction::forward) == c);
  }
}

TEST_CASE("killed curves") {
  CHECK(killed_curve(kLens21, Side::H1) == TorusCurve{2, 1});
  CHECK(killed_curve(kS1xS2, Side::H1) == TorusCurve{0, 1});
  CHECK(killed_curve(kSwap, Side::H1) == TorusCurve{1, 0});
  CHECK(killed_curve(kLens21, Side::H0) == TorusCurve{0, 1});
  CHECK(killed_curve(kSwap, Side::H0) == TorusCurve{0, 1});
}

TEST_CASE("handlebody ideals") {
  Ideal J = handlebody_ideal(GluingMatrix::identity(), Side::H0);
  CHECK(J.same_ideal(Ideal({P("x + 2"), P("y - z")})));

  Ideal K = handlebody_ideal(kLens21, Side::H1);
  CHECK(K.same_ideal(Ideal({P("y*z + x - 2"), P("y - z")})));

  Ideal Kswap = handlebody_ideal(kSwap, Side::H1);
  CHECK(Kswap.same_ideal(Ideal({P("y + 2"), P("x - z")})));

  std::mt19937 rng(12);
  for (int trial = 0; trial < 8; ++trial) {
    GluingMatrix g = random_unimodular(rng);
    CHECK(handlebody_ideal(g, Side::H0).contains(torus_relation()));
    CHECK(handlebody_ideal(g, Side::H1).contains(torus_relation()));
  }
}

TEST_CASE("push action on generators") {
  SolidTorusElement phi = SolidTorusElement::phi();
  SurfaceElement lm = SurfaceElement::word({{1, 1}});
  SurfaceElement l = SurfaceElement::word({{1, 0}});

  CHECK(push_action(kS1xS2, Side::H1, lm, phi) == S("(-t^3)*z"));
  CHECK(push_action(GluingMatrix::identity(), Side::H0, lm, phi) ==
        S("(-t^-3)*z"));
  CHECK(push_action(kLens21, Side::H1, l, phi) == S("(-t^3)*z"));
  CHECK(push_action(kLens21, Side::H1, lm, phi) == S("(1)*z"));

  // Killed curve of H1 maps to the meridian and evaluates to the loop value.
  SurfaceElement killed = SurfaceElement::word({killed_curve(kLens21, Side::H1)});
  CHECK(push_action(kLens21, Side::H1, killed, phi) ==
        SolidTorusElement::phi() * loop_value());

  // Unit word acts as the identity.
  SurfaceElement unit = SurfaceElement::word({});
  SolidTorusElement h = S("(t^2)*z^2 + (-1)*phi");
  CHECK(push_action(kLens21, Side::H1, unit, h) == h);
  CHECK(push_action(kLens21, Side::H0, unit, h) == h);

  // Zero element and zero existing push to zero.
  CHECK(push_action(kLens21, Side::H1, SurfaceElement(), phi).is_zero());
  CHECK(push_action(kLens21, Side::H1, lm, SolidTorusElement()).is_zero());
}

TEST_CASE("push action two-letter products") {
  SolidTorusElement phi = SolidTorusElement::phi();
  SurfaceWord ll = {{1, 0}, {1, 0}};
  SurfaceWord l_lm = {{1, 0}, {1, 1}};
  SurfaceWord lm_l = {{1, 1}, {1, 0}};

  // In H1 the letters of l.l map to two stacked (1,-1) curves: gamma.
  CHECK(push_action(kLens21, Side::H1, SurfaceElement::word(ll), phi) ==
        delta() * L("t^6"));
  // lm.l: inner (image of lm) is the core, outer picks up the clasp.
  CHECK(push_action(kLens21, Side::H1, SurfaceElement::word(lm_l), phi) ==
        delta() * L("-t^3"));
  // l.lm: the (1,-1) kink sits inside a plain core, so it just untwists.
  CHECK(push_action(kLens21, Side::H1, SurfaceElement::word(l_lm), phi) ==
        S("(-t^3)*z^2"));

  // H0 side is the identity gluing but the left action reverses the word.
  CHECK(push_action(kLens21, Side::H0, SurfaceElement::word(lm_l), phi) ==
        delta_bar() * L("-t^-3"));
  CHECK(push_action(kLens21, Side::H0, SurfaceElement::word(l_lm), phi) ==
        S("(-t^-3)*z^2"));
}

TEST_CASE("push action is an action") {
  std::mt19937 rng(13);
  const std::vector<TorusCurve> pool = {
      {1, 0}, {0, 1}, {1, 1}, {1, -1}, {2, 1}};
  std::vector<GluingMatrix> gluings = {GluingMatrix::identity(), kLens21,
                                       kS1xS2, kSwap};
  for (int trial = 0; trial < 12; ++trial) {
    const GluingMatrix& g = gluings[rng() % gluings.size()];
    TorusCurve alpha = pool[rng() % pool.size()];
    TorusCurve beta = pool[rng() % pool.size()];
    SolidTorusElement h = rng() % 2 ? SolidTorusElement::phi()
                                    : SolidTorusElement::z_power(1);
    SurfaceElement word_ab = SurfaceElement::word({alpha, beta});
    SurfaceElement word_a = SurfaceElement::word({alpha});
    SurfaceElement word_b = SurfaceElement::word({beta});
    // Left action: (alpha beta) * h = alpha * (beta * h).
    CHECK(push_action(g, Side::H0, word_ab, h) ==
          push_action(g, Side::H0, word_a, push_action(g, Side::H0, word_b, h)));
    // Right action: h * (alpha beta) = (h * alpha) * beta.
    CHECK(push_action(g, Side::H1, word_ab, h) ==
          push_action(g, Side::H1, word_b, push_action(g, Side::H1, word_a, h)));
  }
}

TEST_CASE("push rejects non-primitive curves") {
  try {
    push_action(GluingMatrix::identity(), Side::H0,
                SurfaceElement::word({{2, 0}}), SolidTorusElement::phi());
    FAIL("non-primitive accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_primitive);
  }
  CHECK_THROWS_AS(push_action(kLens21, Side::H1,
                              SurfaceElement::word({{2, 4}}),
                              SolidTorusElement::phi()),
                  Error);
}

TEST_CASE("specialization coherence instances") {
  // Push a curve into a handlebody, read the normal form at t = -1 with z
  // mapped to the trace of the handlebody core, and compare with the curve's
  // own trace modulo the handlebody ideal.
  auto specialize_push = [](const GluingMatrix& g, Side side, TorusCurve c) {
    SolidTorusElement pushed = push_action(
        g, side, SurfaceElement::word({c}), SolidTorusElement::phi());
    TorusCurve core = side == Side::H0
                          ? TorusCurve{1, 0}
                          : image_curve(g, {1, 0}, Direction::forward);
    MultiPoly core_trace = trace_poly(core);
    MultiPoly out;
    for (const auto& [deg, coeff] : pushed.coefficients())
      out += MultiPoly(coeff.eval_minus_one()) * core_trace.pow(deg);
    return out;
  };

  GluingMatrix id = GluingMatrix::identity();
  Ideal J = handlebody_ideal(id, Side::H0);
  CHECK(J.normal_form(specialize_push(id, Side::H0, {0, 1}) -
                      trace_poly({0, 1}))
            .is_zero());
  CHECK(J.normal_form(specialize_push(id, Side::H0, {1, 1}) -
                      trace_poly({1, 1}))
            .is_zero());

  Ideal K = handlebody_ideal(kLens21, Side::H1);
  CHECK(K.normal_form(specialize_push(kLens21, Side::H1, {2, 1}) -
                      trace_poly({2, 1}))
            .is_zero());
  CHECK(K.normal_form(specialize_push(kLens21, Side::H1, {1, 1}) -
                      trace_poly({1, 1}))
            .is_zero());
}

TEST_CASE("splitting spec and presets") {
  SplittingSpec lens = preset("lens:2,1");
  CHECK(lens.gluing() == kLens21);
  CHECK(lens.name() == "lens(2,1)");
  CHECK(lens.killed(Side::H1) == TorusCurve{2, 1});
  CHECK(lens.ideal(Side::H0).same_ideal(Ideal({P("x + 2"), P("y - z")})));
  CHECK(lens.ideal(Side::H1).same_ideal(Ideal({P("y*z + x - 2"), P("y - z")})));

  CHECK(preset("s1xs2").gluing() == kS1xS2);
  CHECK(preset("s3").gluing() == kSwap);
  CHECK(preset("identity_double").gluing() == GluingMatrix::identity());
  CHECK(preset("lens:0,1").gluing() == kS1xS2);

  SplittingSpec l52 = preset("lens:5,2");
  CHECK(l52.gluing().det() == -1);
  CHECK(l52.killed(Side::H1) == TorusCurve{5, 2});
  CHECK(l52.gluing().p >= 0);
  CHECK(l52.gluing().p < 5);

  try {
    preset("poincare");
    FAIL("unknown preset accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::unknown_preset);
  }
  try {
    preset("lens:4,2");
    FAIL("bad lens parameters accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::bad_parameters);
  }
  CHECK_THROWS_AS(preset("lens:2,3"), Error);
  CHECK_THROWS_AS(preset("lens:1,1"), Error);
  CHECK_THROWS_AS(preset("lens:nope"), Error);

  SplittingSpec s3 = preset("s3");
  CHECK(s3.push(Side::H1, SurfaceElement::word({{0, 1}}),
                SolidTorusElement::phi()) == SolidTorusElement::z_power(1));
}
