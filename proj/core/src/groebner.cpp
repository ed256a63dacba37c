#include "skein/groebner.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <utility>

#include "skein/error.hpp"

namespace skein {

namespace {

MultiPoly make_monic(const MultiPoly& p, MonoOrder order) {
  if (p.is_zero()) return p;
  return p * (Rational(1) / p.leading_coeff(order));
}

// Multivariate division: unique fully reduced remainder once basis is a
// Groebner basis; otherwise still a valid reduction.
MultiPoly reduce_full(const MultiPoly& input,
                      const std::vector<MultiPoly>& basis, MonoOrder order) {
  if (basis.empty() || input.is_zero()) return input;
  std::vector<Mono> lts;
  lts.reserve(basis.size());
  for (const auto& g : basis) lts.push_back(g.leading_mono(order));
  MultiPoly p = input;
  MultiPoly remainder;
  while (!p.is_zero()) {
    Mono lm = p.leading_mono(order);
    Rational lc = p.coeff(lm);
    bool hit = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (!mono_divides(lts[i], lm)) continue;
      Rational factor = lc / basis[i].leading_coeff(order);
      p -= MultiPoly::monomial(mono_quot(lm, lts[i]), factor) * basis[i];
      hit = true;
      break;
    }
    if (!hit) {
      MultiPoly term = MultiPoly::monomial(lm, lc);
      remainder += term;
      p -= term;
    }
  }
  return remainder;
}

std::vector<MultiPoly> buchberger(const std::vector<MultiPoly>& gens,
                                  MonoOrder order) {
  std::vector<MultiPoly> G;
  for (const auto& g : gens)
    if (!g.is_zero()) G.push_back(make_monic(g, order));
  std::deque<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < G.size(); ++i)
    for (std::size_t j = i + 1; j < G.size(); ++j) pairs.emplace_back(i, j);
  while (!pairs.empty()) {
    auto [i, j] = pairs.front();
    pairs.pop_front();
    Mono li = G[i].leading_mono(order);
    Mono lj = G[j].leading_mono(order);
    Mono l = mono_lcm(li, lj);
    if (l == mono_mul(li, lj)) continue;  // coprime leading terms
    MultiPoly s = MultiPoly::monomial(mono_quot(l, li)) * G[i] -
                  MultiPoly::monomial(mono_quot(l, lj)) * G[j];
    MultiPoly r = reduce_full(s, G, order);
    if (r.is_zero()) continue;
    r = make_monic(r, order);
    for (std::size_t k = 0; k < G.size(); ++k) pairs.emplace_back(k, G.size());
    G.push_back(std::move(r));
  }

  // minimalize: drop elements whose leading monomial another element divides
  std::vector<char> removed(G.size(), 0);
  for (std::size_t i = 0; i < G.size(); ++i) {
    for (std::size_t j = 0; j < G.size(); ++j) {
      if (i == j || removed[j]) continue;
      if (mono_divides(G[j].leading_mono(order), G[i].leading_mono(order))) {
        removed[i] = 1;
        break;
      }
    }
  }
  std::vector<MultiPoly> minimal;
  for (std::size_t i = 0; i < G.size(); ++i)
    if (!removed[i]) minimal.push_back(G[i]);

  // interreduce to the unique reduced basis
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<MultiPoly> others;
      for (std::size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      MultiPoly r = make_monic(reduce_full(minimal[i], others, order), order);
      if (r != minimal[i]) {
        changed = true;
        if (r.is_zero()) {
          minimal.erase(minimal.begin() + static_cast<long>(i));
          --i;
        } else {
          minimal[i] = std::move(r);
        }
      }
    }
  }
  std::sort(minimal.begin(), minimal.end(),
            [order](const MultiPoly& a, const MultiPoly& b) {
              return mono_less(a.leading_mono(order), b.leading_mono(order),
                               order);
            });
  return minimal;
}

// All monomials in x, y, z of exact total degree d.
std::vector<Mono> monomials_of_degree(int d) {
  std::vector<Mono> out;
  for (int i = 0; i <= d; ++i)
    for (int j = 0; j <= d - i; ++j) out.push_back(Mono{i, j, d - i - j, 0});
  return out;
}

// Incremental row echelon keyed by leading monomial; rows are monic. Each
// row also carries its expression over the inserted representatives so
// arbitrary vectors can be rewritten in representative coordinates.
struct SpanTracker {
  struct Row {
    MultiPoly vec;                  // monic
    std::map<int, Rational> combo;  // vec = sum combo[s] * inserted[s]
  };
  std::map<Mono, Row, bool (*)(const Mono&, const Mono&)> rows{
      [](const Mono& a, const Mono& b) {
        return mono_less(a, b, MonoOrder::DegRevLex);
      }};
  int inserted_count = 0;

  // Reduce v against the rows; returns residue and the consumed combo.
  MultiPoly reduce(MultiPoly v, std::map<int, Rational>* combo_out) const {
    while (!v.is_zero()) {
      Mono lm = v.leading_mono(MonoOrder::DegRevLex);
      auto it = rows.find(lm);
      if (it == rows.end()) break;
      Rational c = v.coeff(lm);
      v -= it->second.vec * c;
      if (combo_out)
        for (const auto& [s, rc] : it->second.combo) {
          (*combo_out)[s] += c * rc;
          if ((*combo_out)[s] == 0) combo_out->erase(s);
        }
    }
    return v;
  }

  bool contains(const MultiPoly& v) const { return reduce(v, nullptr).is_zero(); }

  // Express v over the inserted representatives; false if not in the span.
  bool coordinates(const MultiPoly& v, std::map<int, Rational>& coords) const {
    coords.clear();
    return reduce(v, &coords).is_zero();
  }

  // Insert v as representative index inserted_count; returns false if v was
  // already in the span (nothing inserted).
  bool add(const MultiPoly& v) {
    std::map<int, Rational> combo;
    MultiPoly res = reduce(v, &combo);
    if (res.is_zero()) return false;
    Mono piv = res.leading_mono(MonoOrder::DegRevLex);
    Rational lc = res.coeff(piv);
    Row row;
    row.vec = res * (Rational(1) / lc);
    // res = v - sum combo[s] inserted[s]  =>  row = (v - sum ...) / lc
    row.combo[inserted_count] = Rational(1) / lc;
    for (const auto& [s, c] : combo) {
      row.combo[s] = -c / lc;
      if (row.combo[s] == 0) row.combo.erase(s);
    }
    rows.emplace(piv, std::move(row));
    ++inserted_count;
    return true;
  }
};

}  // namespace

Ideal::Ideal(std::vector<MultiPoly> generators) : gens_(std::move(generators)) {}

Ideal::Ideal(const Ideal& other) {
  std::lock_guard<std::mutex> lock(other.cache_mutex_);
  gens_ = other.gens_;
  gb_cache_ = other.gb_cache_;
}

Ideal& Ideal::operator=(const Ideal& other) {
  if (this == &other) return *this;
  std::vector<MultiPoly> gens;
  std::map<MonoOrder, std::vector<MultiPoly>> cache;
  {
    std::lock_guard<std::mutex> lock(other.cache_mutex_);
    gens = other.gens_;
    cache = other.gb_cache_;
  }
  std::lock_guard<std::mutex> lock(cache_mutex_);
  gens_ = std::move(gens);
  gb_cache_ = std::move(cache);
  return *this;
}

const std::vector<MultiPoly>& Ideal::groebner_basis(MonoOrder order) const {
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = gb_cache_.find(order);
    if (it != gb_cache_.end()) return it->second;
  }
  std::vector<MultiPoly> gb = buchberger(gens_, order);
  std::lock_guard<std::mutex> lock(cache_mutex_);
  return gb_cache_.emplace(order, std::move(gb)).first->second;
}

MultiPoly Ideal::normal_form(const MultiPoly& p, MonoOrder order) const {
  return reduce_full(p, groebner_basis(order), order);
}

bool Ideal::contains(const MultiPoly& p) const {
  return normal_form(p).is_zero();
}

bool Ideal::contains(const Ideal& other) const {
  for (const auto& g : other.gens_)
    if (!contains(g)) return false;
  return true;
}

bool Ideal::same_ideal(const Ideal& other) const {
  return contains(other) && other.contains(*this);
}

Ideal Ideal::sum(const Ideal& a, const Ideal& b) {
  std::vector<MultiPoly> gens = a.gens_;
  gens.insert(gens.end(), b.gens_.begin(), b.gens_.end());
  return Ideal(std::move(gens));
}

Ideal Ideal::product(const Ideal& a, const Ideal& b) {
  std::vector<MultiPoly> gens;
  for (const auto& f : a.gens_)
    for (const auto& g : b.gens_) gens.push_back(f * g);
  return Ideal(std::move(gens));
}

Ideal Ideal::intersection(const Ideal& a, const Ideal& b) {
  MultiPoly w = MultiPoly::variable(kVarW);
  MultiPoly one_minus_w = MultiPoly::one() - w;
  std::vector<MultiPoly> gens;
  for (const auto& f : a.gens_) gens.push_back(w * f);
  for (const auto& g : b.gens_) gens.push_back(one_minus_w * g);
  Ideal aux(std::move(gens));
  std::vector<MultiPoly> result;
  for (const auto& g : aux.groebner_basis(MonoOrder::ElimW))
    if (!g.uses_w()) result.push_back(g);
  return Ideal(std::move(result));
}

QuotientBasis Ideal::quotient_basis(int degree_bound) const {
  const auto& gb = groebner_basis(MonoOrder::DegRevLex);
  std::vector<Mono> lts;
  for (const auto& g : gb) lts.push_back(g.leading_mono(MonoOrder::DegRevLex));
  auto standard = [&lts](const Mono& m) {
    for (const auto& lt : lts)
      if (mono_divides(lt, m)) return false;
    return true;
  };
  QuotientBasis out;
  out.degree_bound = degree_bound;
  for (int d = 0; d <= degree_bound; ++d)
    for (const Mono& m : monomials_of_degree(d))
      if (standard(m)) out.monomials.push_back(m);
  std::sort(out.monomials.begin(), out.monomials.end(),
            [](const Mono& a, const Mono& b) {
              return mono_less(a, b, MonoOrder::DegRevLex);
            });
  out.finite = true;
  for (const Mono& m : monomials_of_degree(degree_bound + 1))
    if (standard(m)) {
      out.finite = false;
      break;
    }
  return out;
}

std::string Ideal::to_string() const { return skein::to_string(gens_); }

MultiPoly normal_form(const MultiPoly& p, const Ideal& ideal, MonoOrder order) {
  return ideal.normal_form(p, order);
}

std::vector<MultiPoly> groebner_basis(const Ideal& ideal, MonoOrder order) {
  return ideal.groebner_basis(order);
}

Tor1Bounded tor1_module_bounded(const Ideal& J, const Ideal& K,
                                const MultiPoly& ambient_relation,
                                int degree_bound) {
  if (!J.contains(ambient_relation) || !K.contains(ambient_relation))
    fail(Errc::relation_not_contained,
         "ambient relation " + ambient_relation.to_string() +
             " is not contained in both ideals");

  Ideal N = Ideal::intersection(J, K);
  std::vector<MultiPoly> dgens;
  for (const auto& f : J.generators())
    for (const auto& g : K.generators()) dgens.push_back(f * g);
  if (!ambient_relation.is_zero()) dgens.push_back(ambient_relation);
  Ideal D(std::move(dgens));

  const auto& gbN = N.groebner_basis(MonoOrder::DegRevLex);

  // Candidates NF_D(m * g) in degree-ascending order span the classes of all
  // intersection elements of that degree (the order is graded, so division
  // by GB(N) never raises degree).
  SpanTracker span;
  std::vector<MultiPoly> reps;
  std::vector<int> rep_degree;
  for (int d = 0; d <= degree_bound + 1; ++d) {
    for (const auto& g : gbN) {
      int mdeg = d - g.total_degree();
      if (mdeg < 0) continue;
      std::vector<Mono> mults = monomials_of_degree(mdeg);
      std::sort(mults.begin(), mults.end(), [](const Mono& a, const Mono& b) {
        return mono_less(b, a, MonoOrder::DegRevLex);
      });
      for (const Mono& m : mults) {
        MultiPoly cand = MultiPoly::monomial(m) * g;
        MultiPoly nf = D.normal_form(cand);
        if (span.add(nf)) {
          reps.push_back(cand);
          rep_degree.push_back(d);
        }
      }
    }
  }

  long dim_at_bound = 0;
  for (int rd : rep_degree)
    if (rd <= degree_bound) ++dim_at_bound;
  long dim_next = static_cast<long>(reps.size());

  Tor1Bounded out;
  out.stabilized = (dim_at_bound == dim_next);
  out.next_dimension = dim_next;
  out.result.dimension = dim_at_bound;
  out.result.degree_bound = degree_bound;
  for (std::size_t i = 0; i < reps.size(); ++i)
    if (rep_degree[i] <= degree_bound)
      out.result.vector_space_basis.push_back(reps[i]);

  // Module generators over the quotient by J + K, greedy in basis order:
  // a basis class is a new generator unless earlier generators reach it by
  // multiplication within the degree bound.
  SpanTracker covered;
  for (std::size_t i = 0; i < out.result.vector_space_basis.size(); ++i) {
    const MultiPoly& b = out.result.vector_space_basis[i];
    if (covered.contains(D.normal_form(b))) continue;
    out.result.generators.push_back(b);
    int bdeg = b.total_degree();
    for (int md = 0; md + bdeg <= degree_bound; ++md)
      for (const Mono& m : monomials_of_degree(md))
        covered.add(D.normal_form(MultiPoly::monomial(m) * b));
  }

  // Multiplication relations v*b - (combination of basis classes), each
  // certified to lie in the denominator ideal.
  std::set<MultiPoly> seen;
  for (const auto& b : out.result.vector_space_basis) {
    for (int var : {kVarX, kVarY, kVarZ}) {
      MultiPoly p = MultiPoly::variable(var) * b;
      std::map<int, Rational> coords;
      if (!span.coordinates(D.normal_form(p), coords)) continue;
      MultiPoly relation = p;
      bool in_basis_range = true;
      for (const auto& [s, c] : coords) {
        if (rep_degree[static_cast<std::size_t>(s)] > degree_bound) {
          in_basis_range = false;
          break;
        }
        relation -= reps[static_cast<std::size_t>(s)] * c;
      }
      if (!in_basis_range || relation.is_zero()) continue;
      if (!D.contains(relation))
        fail(Errc::internal, "relation certificate failed: " +
                                 relation.to_string());
      if (seen.insert(relation).second)
        out.result.relations.push_back(relation);
    }
  }
  return out;
}

Tor1Result tor1_module(const Ideal& J, const Ideal& K,
                       const MultiPoly& ambient_relation, int degree_bound) {
  Tor1Bounded bounded =
      tor1_module_bounded(J, K, ambient_relation, degree_bound);
  if (!bounded.stabilized)
    fail(Errc::no_stabilization,
         "Tor1 dimension " + std::to_string(bounded.result.dimension) +
             " at degree bound " + std::to_string(degree_bound) +
             " still grows to " + std::to_string(bounded.next_dimension) +
             " at " + std::to_string(degree_bound + 1));
  return bounded.result;
}

}  // namespace skein
