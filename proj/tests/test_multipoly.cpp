#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "skein/error.hpp"
#include "skein/multipoly.hpp"

using skein::Errc;
using skein::Error;
using skein::Mono;
using skein::MonoOrder;
using skein::MultiPoly;
using skein::Rational;

namespace {

MultiPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> exp_dist(0, 3);
  std::uniform_int_distribution<int> coeff_dist(-4, 4);
  std::uniform_int_distribution<int> len_dist(0, 5);
  MultiPoly p;
  int len = len_dist(rng);
  for (int i = 0; i < len; ++i) {
    Mono m{exp_dist(rng), exp_dist(rng), exp_dist(rng), 0};
    p += MultiPoly::monomial(m, Rational(coeff_dist(rng)));
  }
  return p;
}

}  // namespace

TEST_CASE("monomial order: degrevlex with x > y > z") {
  auto less = [](const char* a, const char* b) {
    return skein::mono_less(
        MultiPoly::parse(a).leading_mono(MonoOrder::DegRevLex),
        MultiPoly::parse(b).leading_mono(MonoOrder::DegRevLex),
        MonoOrder::DegRevLex);
  };
  // variables
  CHECK(less("y", "x"));
  CHECK(less("z", "y"));
  // graded before anything else
  CHECK(less("x^2", "y^3"));
  // full descending chain in degree 2: x^2 > x*y > y^2 > x*z > y*z > z^2
  const char* chain[] = {"x^2", "xy", "y^2", "xz", "yz", "z^2"};
  for (int i = 0; i < 5; ++i) CHECK(less(chain[i + 1], chain[i]));
}

TEST_CASE("monomial order: lex and elimination block") {
  Mono x{1, 0, 0, 0}, y3{0, 3, 0, 0}, w{0, 0, 0, 1}, xyz{1, 1, 1, 0};
  CHECK(skein::mono_less(y3, x, MonoOrder::Lex));  // x beats any y-power
  // ElimW: anything with w dominates anything without
  CHECK(skein::mono_less(xyz, w, MonoOrder::ElimW));
  CHECK_FALSE(skein::mono_less(w, xyz, MonoOrder::ElimW));
}

TEST_CASE("arithmetic and ring identities") {
  std::mt19937 rng(20260817);
  for (int trial = 0; trial < 150; ++trial) {
    MultiPoly a = random_poly(rng);
    MultiPoly b = random_poly(rng);
    MultiPoly c = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a - a == MultiPoly());
    CHECK(a * MultiPoly::one() == a);
  }
  CHECK(MultiPoly::parse("x").pow(3) == MultiPoly::parse("x^3"));
  CHECK(MultiPoly::parse("x+1").pow(2) == MultiPoly::parse("x^2+2x+1"));
}

TEST_CASE("evaluation and substitution") {
  MultiPoly rel = MultiPoly::parse("x^2+y^2+z^2+x*y*z-4");
  // the singular character of the torus
  CHECK(rel.eval(Rational(-2), Rational(-2), Rational(-2)) == 0);
  CHECK(rel.eval(Rational(0), Rational(0), Rational(0)) == -4);

  // substitute x = -2, z = y: relation collapses to 0
  MultiPoly sub = rel.substitute(skein::kVarX, MultiPoly(Rational(-2)))
                      .substitute(skein::kVarZ, MultiPoly::variable(skein::kVarY));
  CHECK(sub.is_zero());

  // same substitution sends yz + x - 2 to y^2 - 4
  MultiPoly k1 = MultiPoly::parse("y*z+x-2");
  MultiPoly k1sub = k1.substitute(skein::kVarX, MultiPoly(Rational(-2)))
                        .substitute(skein::kVarZ, MultiPoly::variable(skein::kVarY));
  CHECK(k1sub == MultiPoly::parse("y^2-4"));
}

TEST_CASE("printing is descending degrevlex") {
  CHECK(MultiPoly::parse("x^2+y^2+z^2+x*y*z-4").to_string() ==
        "x*y*z + x^2 + y^2 + z^2 - 4");
  CHECK(MultiPoly::parse("yz+x-2").to_string() == "y*z + x - 2");
  CHECK(MultiPoly::parse("y - z").to_string() == "y - z");
  CHECK(MultiPoly::parse("y^2 - yz").to_string() == "y^2 - y*z");
  CHECK(MultiPoly().to_string() == "0");
  CHECK(MultiPoly::parse("-x").to_string() == "-x");
  CHECK(MultiPoly::parse("1/2x - 1").to_string() == "1/2*x - 1");
}

TEST_CASE("parse accepts juxtaposition and round-trips") {
  CHECK(MultiPoly::parse("yz") == MultiPoly::parse("y*z"));
  CHECK(MultiPoly::parse("2x^2y") == MultiPoly::parse("2*x^2*y"));
  CHECK(MultiPoly::parse("x^2y^3z") == MultiPoly::parse("x^2*y^3*z"));
  std::mt19937 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    MultiPoly p = random_poly(rng);
    CHECK(MultiPoly::parse(p.to_string()) == p);
  }
  for (const char* bad : {"", "x^", "q", "2**x", "x+", "^2"}) {
    CHECK_THROWS_AS(MultiPoly::parse(bad), Error);
  }
}

TEST_CASE("leading data") {
  MultiPoly p = MultiPoly::parse("3x^2 - 2y^3");
  CHECK(p.leading_mono(MonoOrder::DegRevLex) == Mono{0, 3, 0, 0});
  CHECK(p.leading_coeff(MonoOrder::DegRevLex) == -2);
  CHECK(p.leading_mono(MonoOrder::Lex) == Mono{2, 0, 0, 0});
  CHECK(p.leading_coeff(MonoOrder::Lex) == 3);
  CHECK(p.total_degree() == 3);
  CHECK(MultiPoly().total_degree() == -1);
}
