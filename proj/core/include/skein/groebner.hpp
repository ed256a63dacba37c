#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "skein/multipoly.hpp"

namespace skein {

// Standard monomials of a quotient ring up to a degree bound.
struct QuotientBasis {
  std::vector<Mono> monomials;  // ascending DegRevLex
  bool finite = false;
  int degree_bound = 0;

  std::size_t dimension() const { return monomials.size(); }
};

// Finitely generated ideal of rationals[x,y,z(,w)] with cached reduced
// Groebner bases. Value-semantic; the cache is write-once per order.
class Ideal {
public:
  Ideal() = default;
  explicit Ideal(std::vector<MultiPoly> generators);

  Ideal(const Ideal& other);
  Ideal& operator=(const Ideal& other);

  const std::vector<MultiPoly>& generators() const { return gens_; }

  // Reduced Groebner basis: monic, auto-reduced, sorted ascending by
  // leading monomial. Computed once per order, then cached.
  const std::vector<MultiPoly>& groebner_basis(
      MonoOrder order = MonoOrder::DegRevLex) const;

  MultiPoly normal_form(const MultiPoly& p,
                        MonoOrder order = MonoOrder::DegRevLex) const;
  bool contains(const MultiPoly& p) const;
  bool contains(const Ideal& other) const;
  bool same_ideal(const Ideal& other) const;  // mutual containment

  static Ideal sum(const Ideal& a, const Ideal& b);
  static Ideal product(const Ideal& a, const Ideal& b);
  // J cap K via elimination: GB of w*J + (1-w)*K under ElimW, keep the
  // w-free part.
  static Ideal intersection(const Ideal& a, const Ideal& b);

  QuotientBasis quotient_basis(int degree_bound) const;

  std::string to_string() const;  // "(x + 2, y - z)" in generator order

private:
  std::vector<MultiPoly> gens_;
  mutable std::mutex cache_mutex_;
  mutable std::map<MonoOrder, std::vector<MultiPoly>> gb_cache_;
};

// Free-function forms matching the operation vocabulary.
MultiPoly normal_form(const MultiPoly& p, const Ideal& ideal,
                      MonoOrder order = MonoOrder::DegRevLex);
std::vector<MultiPoly> groebner_basis(const Ideal& ideal,
                                      MonoOrder order = MonoOrder::DegRevLex);

struct Tor1Result {
  // Module generators over the quotient ring by J + K, greedily minimized.
  std::vector<MultiPoly> generators;
  // Vector-space basis of (J cap K)/(JK + (relation)), each element reduced
  // to a nonzero normal form modulo the denominator ideal.
  std::vector<MultiPoly> vector_space_basis;
  // Polynomial identities (v * basis element - combination of basis
  // elements) certified to lie in the denominator ideal.
  std::vector<MultiPoly> relations;
  long dimension = 0;
  int degree_bound = 0;
};

// Degree-bounded Tor1 with explicit stabilization flag; partial results
// (stabilized == false) are meaningful as the classes seen so far.
struct Tor1Bounded {
  Tor1Result result;
  bool stabilized = false;
  long next_dimension = 0;  // dimension at degree_bound + 1
};

Tor1Bounded tor1_module_bounded(const Ideal& J, const Ideal& K,
                                const MultiPoly& ambient_relation,
                                int degree_bound);

// Throwing wrapper: Error(no_stabilization) when the dimension still grows
// at the bound, Error(relation_not_contained) when the ambient relation is
// not in both ideals.
Tor1Result tor1_module(const Ideal& J, const Ideal& K,
                       const MultiPoly& ambient_relation, int degree_bound);

}  // namespace skein
