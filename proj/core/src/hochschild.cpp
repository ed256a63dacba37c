#include "skein/hochschild.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "json.hpp"
#include "skein/error.hpp"

namespace skein {

namespace {

std::string z_string(int deg) {
  if (deg == 0) return "phi";
  if (deg == 1) return "z";
  return "z^" + std::to_string(deg);
}

LaurentPoly one_plus_t_power(int k) {
  LaurentPoly base = LaurentPoly::parse("1 + t");
  LaurentPoly out = LaurentPoly::one();
  for (int i = 0; i < k; ++i) out *= base;
  return out;
}

// Minimum (1+t)-valuation over the coefficients; infinite iff zero.
Valuation min_valuation(const HochschildChain& c) {
  if (c.is_zero()) return Valuation::infinite();
  Valuation best = Valuation::infinite();
  for (const auto& [k, coeff] : c.terms()) {
    Valuation v = coeff.one_plus_t_valuation();
    if (best.is_infinite || (!v.is_infinite && v.value < best.value)) best = v;
  }
  return best;
}

}  // namespace

std::string to_string(const ChainKey& k) {
  std::ostringstream os;
  os << z_string(k.b1_deg) << " (x) [";
  for (std::size_t i = 0; i < k.words.size(); ++i) {
    if (i) os << " | ";
    os << to_string(k.words[i]);
  }
  os << "] (x) " << z_string(k.b0_deg);
  return os.str();
}

HochschildChain HochschildChain::term(const SolidTorusElement& b1,
                                      const std::vector<SurfaceWord>& words,
                                      const SolidTorusElement& b0,
                                      const LaurentPoly& coeff) {
  HochschildChain out(static_cast<int>(words.size()));
  if (coeff.is_zero()) return out;
  for (const auto& [i, c1] : b1.coefficients()) {
    for (const auto& [j, c0] : b0.coefficients()) {
      LaurentPoly c = coeff * c1 * c0;
      if (c.is_zero()) continue;
      auto it = out.terms_.emplace(ChainKey{i, words, j}, LaurentPoly()).first;
      it->second += c;
      if (it->second.is_zero()) out.terms_.erase(it);
    }
  }
  return out;
}

HochschildChain& HochschildChain::operator+=(const HochschildChain& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) degree_ = rhs.degree_;
  if (degree_ != rhs.degree_)
    fail(Errc::internal, "adding chains of degrees " +
                             std::to_string(degree_) + " and " +
                             std::to_string(rhs.degree_));
  for (const auto& [k, c] : rhs.terms_) {
    auto it = terms_.emplace(k, LaurentPoly()).first;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
  return *this;
}

HochschildChain& HochschildChain::operator-=(const HochschildChain& rhs) {
  return *this += -rhs;
}

HochschildChain HochschildChain::operator+(const HochschildChain& rhs) const {
  HochschildChain out = *this;
  out += rhs;
  return out;
}

HochschildChain HochschildChain::operator-(const HochschildChain& rhs) const {
  HochschildChain out = *this;
  out -= rhs;
  return out;
}

HochschildChain HochschildChain::operator-() const {
  HochschildChain out(degree_);
  for (const auto& [k, c] : terms_) out.terms_[k] = -c;
  return out;
}

HochschildChain HochschildChain::operator*(const LaurentPoly& scalar) const {
  HochschildChain out(degree_);
  if (scalar.is_zero()) return out;
  for (const auto& [k, c] : terms_) out.terms_[k] = c * scalar;
  return out;
}

std::string HochschildChain::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << '(' << c.to_string() << ")*" << skein::to_string(k);
  }
  return os.str();
}

HochschildChain boundary(const HochschildChain& c, const SplittingSpec& split) {
  int n = c.degree();
  if (n < 1) fail(Errc::degree_zero, "boundary of a degree-0 chain");
  HochschildChain out(n - 1);
  for (const auto& [key, coeff] : c.terms()) {
    // First face: the leading slot acts on the H1 factor from the right.
    {
      SolidTorusElement pushed =
          split.push(Side::H1, SurfaceElement::word(key.words.front()),
                     SolidTorusElement::z_power(key.b1_deg));
      std::vector<SurfaceWord> rest(key.words.begin() + 1, key.words.end());
      out += HochschildChain::term(
          pushed, rest, SolidTorusElement::z_power(key.b0_deg), coeff);
    }
    // Middle faces: adjacent slots concatenate, signs alternate.
    for (int i = 1; i <= n - 1; ++i) {
      std::vector<SurfaceWord> words;
      words.reserve(key.words.size() - 1);
      for (int j = 0; j < i - 1; ++j) words.push_back(key.words[j]);
      words.push_back(concat(key.words[i - 1], key.words[i]));
      for (int j = i + 1; j < n; ++j) words.push_back(key.words[j]);
      HochschildChain face = HochschildChain::term(
          SolidTorusElement::z_power(key.b1_deg), words,
          SolidTorusElement::z_power(key.b0_deg), coeff);
      if (i % 2) out -= face;
      else out += face;
    }
    // Last face: the trailing slot acts on the H0 factor from the left.
    {
      SolidTorusElement pushed =
          split.push(Side::H0, SurfaceElement::word(key.words.back()),
                     SolidTorusElement::z_power(key.b0_deg));
      std::vector<SurfaceWord> rest(key.words.begin(), key.words.end() - 1);
      HochschildChain face = HochschildChain::term(
          SolidTorusElement::z_power(key.b1_deg), rest, pushed, coeff);
      if (n % 2) out -= face;
      else out += face;
    }
  }
  return out;
}

Valuation cycle_valuation(const HochschildChain& c,
                          const SplittingSpec& split) {
  return min_valuation(boundary(c, split));
}

FiltrationLevel filtration_shift(const FiltrationLevel& c, int k) {
  if (k < 0) fail(Errc::bad_parameters, "negative filtration shift");
  return {c.chain * one_plus_t_power(k), c.shift + k};
}

SurfaceElement degree1_element(const HochschildChain& c) {
  if (c.degree() != 1)
    fail(Errc::internal, "chain degree " + std::to_string(c.degree()) +
                             " is not a surface element");
  SurfaceElement out;
  for (const auto& [k, coeff] : c.terms()) {
    if (k.b1_deg != 0 || k.b0_deg != 0)
      fail(Errc::internal, "chain has nonempty solid-torus factors");
    out += SurfaceElement::word(k.words.front(), coeff);
  }
  return out;
}

namespace {

// ---- lifting ----

// x^i y^j z^k |-> (-t^3)^k * [M x i, L x j, LM x k]; the unit coefficient
// compensates the kink each LM letter acquires under both end pushes.
HochschildChain monomial_lift(const MultiPoly& p) {
  HochschildChain out(1);
  for (const auto& [mono, coeff] : p.terms()) {
    if (mono[kVarW] != 0)
      fail(Errc::internal, "class polynomial uses the elimination variable");
    SurfaceWord w;
    for (int i = 0; i < mono[kVarX]; ++i) w.push_back({0, 1});
    for (int j = 0; j < mono[kVarY]; ++j) w.push_back({1, 0});
    for (int k = 0; k < mono[kVarZ]; ++k) w.push_back({1, 1});
    Rational unit = mono[kVarZ] % 2 ? Rational(-1) : Rational(1);
    LaurentPoly c = LaurentPoly::t_power(3 * mono[kVarZ], unit);
    out += HochschildChain::term(SolidTorusElement::phi(), {w},
                                 SolidTorusElement::phi(), c * coeff);
  }
  return out;
}

// Pinned lifts for the span of { y-z, y(y-z) }; returns false when p does
// not decompose over that span.
bool table_lift(const MultiPoly& p, HochschildChain& out) {
  Rational c1 = p.coeff({0, 1, 0, 0});  // y
  Rational c2 = p.coeff({0, 2, 0, 0});  // y^2
  MultiPoly k1 = MultiPoly::parse("y - z");
  MultiPoly k2 = MultiPoly::parse("y^2 - y*z");
  if (!(p - k1 * c1 - k2 * c2).is_zero()) return false;

  SurfaceWord l = {{1, 0}};
  SurfaceWord lm = {{1, 1}};
  HochschildChain first =
      HochschildChain::term(SolidTorusElement::phi(), {l},
                            SolidTorusElement::phi()) +
      HochschildChain::term(SolidTorusElement::phi(), {lm},
                            SolidTorusElement::phi(),
                            LaurentPoly::t_power(3));
  HochschildChain second =
      HochschildChain::term(SolidTorusElement::phi(), {concat(l, l)},
                            SolidTorusElement::phi(),
                            LaurentPoly::parse("-1/2*t^-5 - 1/2*t^-3")) +
      HochschildChain::term(SolidTorusElement::phi(), {concat(l, lm)},
                            SolidTorusElement::phi(),
                            LaurentPoly::parse("-1/2")) +
      HochschildChain::term(SolidTorusElement::phi(), {concat(lm, l)},
                            SolidTorusElement::phi(),
                            LaurentPoly::parse("-1/2"));
  out = first * LaurentPoly(c1) + second * LaurentPoly(c2);
  return true;
}

// a strictly better than b: higher valuation wins, infinite beats all.
bool valuation_better(const Valuation& a, const Valuation& b) {
  if (a.is_infinite) return !b.is_infinite;
  if (b.is_infinite) return false;
  return a.value > b.value;
}

HochschildChain solver_lift(const MultiPoly& p, const SplittingSpec& split,
                            const HochschildChain* library_candidate) {
  struct WordData {
    SurfaceWord word;
    Rational base;         // rational coefficient from the class
    int baseline = 0;      // exponent the monomial rule would pick
    HochschildChain face;  // boundary of phi (x) [word] (x) phi
  };
  std::vector<WordData> words;
  for (const auto& [mono, coeff] : p.terms()) {
    WordData wd;
    for (int i = 0; i < mono[kVarX]; ++i) wd.word.push_back({0, 1});
    for (int j = 0; j < mono[kVarY]; ++j) wd.word.push_back({1, 0});
    for (int k = 0; k < mono[kVarZ]; ++k) wd.word.push_back({1, 1});
    wd.base = coeff;
    wd.baseline = 3 * mono[kVarZ];
    wd.face = boundary(HochschildChain::term(SolidTorusElement::phi(),
                                             {wd.word},
                                             SolidTorusElement::phi()),
                       split);
    words.push_back(std::move(wd));
  }

  const int lo = -8, hi = 8;
  HochschildChain best_chain;
  Valuation best_val = Valuation::finite(0);
  bool found = false;

  auto consider = [&](const HochschildChain& chain, const Valuation& v) {
    if (!v.is_infinite && v.value < 1) return;
    if (!found || valuation_better(v, best_val)) {
      best_chain = chain;
      best_val = v;
      found = true;
    }
  };

  if (library_candidate)
    consider(*library_candidate,
             min_valuation(boundary(*library_candidate, split)));

  // Coefficient base * (-t)^e for exponent e.
  auto unit = [](const Rational& base, int e) {
    Rational c = base;
    if (e % 2) c = -c;
    return LaurentPoly::t_power(e, c);
  };

  std::size_t window = static_cast<std::size_t>(hi - lo + 1);
  std::size_t combos = 1;
  bool sweep = true;
  for (std::size_t i = 0; i < words.size(); ++i) {
    combos *= window;
    if (combos > 200000) {
      sweep = false;
      break;
    }
  }

  std::vector<int> base(words.size());
  for (std::size_t i = 0; i < words.size(); ++i)
    base[i] = std::clamp(words[i].baseline, lo, hi);

  std::vector<int> exps = base;
  auto assemble = [&]() {
    HochschildChain chain(1);
    HochschildChain bnd(0);
    for (std::size_t i = 0; i < words.size(); ++i) {
      LaurentPoly c = unit(words[i].base, exps[i]);
      chain += HochschildChain::term(SolidTorusElement::phi(),
                                     {words[i].word},
                                     SolidTorusElement::phi(), c);
      bnd += words[i].face * c;
    }
    consider(chain, min_valuation(bnd));
  };

  if (sweep && !words.empty() && !(found && best_val.is_infinite)) {
    // Enumerate exponent tuples by increasing total deviation from the
    // monomial-rule baseline, stopping at the first exact cycle.
    auto done = [&]() { return found && best_val.is_infinite; };
    std::function<void(std::size_t, int)> place = [&](std::size_t i, int rem) {
      if (done()) return;
      if (i + 1 == words.size()) {
        for (int sign : {1, -1}) {
          int e = base[i] + sign * rem;
          if (e < lo || e > hi) continue;
          exps[i] = e;
          assemble();
          if (rem == 0 || done()) break;
        }
        return;
      }
      for (int d = 0; d <= rem && !done(); ++d) {
        for (int sign : {1, -1}) {
          int e = base[i] + sign * d;
          if (e < lo || e > hi) continue;
          exps[i] = e;
          place(i + 1, rem - d);
          if (d == 0 || done()) break;
        }
      }
    };
    int max_dev = static_cast<int>(words.size()) * (hi - lo);
    for (int total = 0; total <= max_dev && !done(); ++total)
      place(0, total);
  } else if (!sweep) {
    exps = base;
    assemble();
  }

  if (!found)
    fail(Errc::no_lift_found,
         "no lift of " + p.to_string() +
             " reaches boundary valuation 1 in the exponent window [-8, 8]");
  return best_chain;
}

}  // namespace

HochschildChain lift_class(const MultiPoly& p, LiftMode mode,
                           const SplittingSpec& split, const Tor1Result& tor1) {
  if (p.is_zero()) return HochschildChain(1);

  // Span precondition: p must reduce to zero against the basis classes
  // modulo the denominator ideal. The reduced basis elements have distinct
  // leading monomials, so greedy elimination in decreasing order is exact.
  {
    Ideal denom = Ideal::sum(
        Ideal::product(split.ideal(Side::H0), split.ideal(Side::H1)),
        Ideal({torus_relation()}));
    MultiPoly residue = denom.normal_form(p);
    std::vector<MultiPoly> basis;
    for (const MultiPoly& b : tor1.vector_space_basis) {
      MultiPoly nf = denom.normal_form(b);
      if (!nf.is_zero()) basis.push_back(nf);
    }
    std::sort(basis.begin(), basis.end(),
              [](const MultiPoly& a, const MultiPoly& b) {
                return mono_less(b.leading_mono(MonoOrder::DegRevLex),
                                 a.leading_mono(MonoOrder::DegRevLex),
                                 MonoOrder::DegRevLex);
              });
    for (const MultiPoly& b : basis) {
      if (residue.is_zero()) break;
      Mono lead = b.leading_mono(MonoOrder::DegRevLex);
      Rational r = residue.coeff(lead);
      if (r != 0)
        residue -= b * Rational(r / b.leading_coeff(MonoOrder::DegRevLex));
    }
    if (!residue.is_zero())
      fail(Errc::not_in_span,
           p.to_string() + " is not spanned by the Tor1 basis");
  }

  HochschildChain table;
  bool have_table = table_lift(p, table);
  if (mode == LiftMode::library)
    return have_table ? table : monomial_lift(p);
  return solver_lift(p, split, have_table ? &table : nullptr);
}

QuotientBasis specialized_hh0(const SplittingSpec& split, int degree_bound) {
  Ideal total = Ideal::sum(
      Ideal::sum(split.ideal(Side::H0), split.ideal(Side::H1)),
      Ideal({torus_relation()}));
  return total.quotient_basis(degree_bound);
}

std::string TorsionReport::verdict_string() const {
  switch (kind) {
    case VerdictKind::torsion_witness: return "TORSION_WITNESS";
    case VerdictKind::no_torsion_certified: return "NO_TORSION_CERTIFIED";
    case VerdictKind::inconclusive:
      return "INCONCLUSIVE_AT_LEVEL(" + std::to_string(inconclusive_level) +
             ")";
  }
  return "INCONCLUSIVE_AT_LEVEL(0)";
}

TorsionReport torsion_verdict(const SplittingSpec& split, LiftMode mode) {
  TorsionReport report;
  report.manifold = split.name();
  report.gluing = split.gluing();

  const Ideal& J = split.ideal(Side::H0);
  const Ideal& K = split.ideal(Side::H1);

  for (int bound : {8, 16, 32}) {
    report.degree_bound = bound;
    Tor1Bounded tb = tor1_module_bounded(J, K, torus_relation(), bound);
    report.tor1_stabilized = tb.stabilized;
    report.tor1_dimension = tb.result.dimension;
    report.tor1_basis = tb.result.vector_space_basis;
    report.cycles.clear();

    bool witness = false;
    bool all_infinite = true;
    bool lift_failures = false;
    long min_finite = 0;
    bool have_finite = false;
    for (const MultiPoly& cls : tb.result.vector_space_basis) {
      CycleEvidence ev;
      ev.class_poly = cls;
      try {
        ev.lift = lift_class(cls, mode, split, tb.result);
        ev.image = boundary(ev.lift, split);
        ev.valuation = min_valuation(ev.image);
      } catch (const Error& e) {
        if (e.code() != Errc::no_lift_found) throw;
        lift_failures = true;
        ev.valuation = Valuation::finite(0);
        ev.notes.push_back(std::string("lift failed: ") + e.what());
        report.cycles.push_back(std::move(ev));
        continue;
      }
      if (!ev.valuation.is_infinite) {
        all_infinite = false;
        if (ev.valuation.value == 1) witness = true;
        if (!have_finite || ev.valuation.value < min_finite)
          min_finite = ev.valuation.value;
        have_finite = true;
      }
      report.cycles.push_back(std::move(ev));
      if (witness) break;
    }

    if (witness) {
      // A valuation-1 boundary exhibits torsion regardless of how much of
      // the basis has been seen.
      report.kind = VerdictKind::torsion_witness;
      return report;
    }
    if (tb.stabilized) {
      if (all_infinite && !lift_failures) {
        report.kind = VerdictKind::no_torsion_certified;
      } else {
        report.kind = VerdictKind::inconclusive;
        report.inconclusive_level =
            have_finite ? static_cast<int>(min_finite) : 0;
        if (lift_failures)
          report.notes.push_back(
              "some classes have no lift in the solver window");
      }
      return report;
    }
    report.notes.push_back("Tor1 dimension still growing at degree bound " +
                           std::to_string(bound) + " (next dimension " +
                           std::to_string(tb.next_dimension) + ")");
    if (bound == 32) {
      report.kind = VerdictKind::inconclusive;
      report.inconclusive_level =
          have_finite ? static_cast<int>(min_finite) : 0;
      report.notes.push_back(
          "partial basis: absence of torsion cannot be certified");
      return report;
    }
  }
  return report;  // unreachable
}

std::string report_to_json(const TorsionReport& r) {
  nlohmann::ordered_json j;
  j["manifold"] = r.manifold;
  j["gluing"] = r.gluing.to_string();
  nlohmann::ordered_json tor1;
  tor1["dimension"] = r.tor1_dimension;
  tor1["basis"] = nlohmann::ordered_json::array();
  for (const MultiPoly& b : r.tor1_basis)
    tor1["basis"].push_back(b.to_string());
  tor1["stabilized"] = r.tor1_stabilized;
  tor1["degree_bound"] = r.degree_bound;
  j["tor1"] = std::move(tor1);
  j["cycles"] = nlohmann::ordered_json::array();
  for (const CycleEvidence& ev : r.cycles) {
    nlohmann::ordered_json c;
    c["class"] = ev.class_poly.to_string();
    c["lift"] = ev.lift.to_string();
    c["boundary"] = ev.image.to_string();
    if (ev.valuation.is_infinite) c["valuation"] = "infinity";
    else c["valuation"] = ev.valuation.value;
    if (!ev.notes.empty()) c["notes"] = ev.notes;
    j["cycles"].push_back(std::move(c));
  }
  j["verdict"] = r.verdict_string();
  j["notes"] = r.notes;
  return j.dump(2);
}

}  // namespace skein
