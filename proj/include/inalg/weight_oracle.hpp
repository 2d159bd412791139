#pragma once

// Strictly positive integral weights realizing finitely many monomial
// comparisons, and weight representations of Groebner and Sagbi computations.
//
// Canonical output: the lexicographically smallest point of the
// minimal-sum face of {G a >= 1, a >= 1} (G has one row per comparison,
// alpha_i - beta_i), scaled to a primitive integer vector. The empty
// comparison set yields (1, ..., 1).

#include <string>
#include <utility>
#include <vector>

#include "inalg/groebner.hpp"
#include "inalg/sagbi.hpp"

namespace inalg {

/// Each pair (m, n) asks for m > n.
struct ComparisonSet {
  std::size_t nvars = 0;
  std::vector<std::pair<Monomial, Monomial>> pairs;

  explicit ComparisonSet(std::size_t n) : nvars(n) {}
  void add(Monomial greater, Monomial smaller);
};

/// Throws Infeasible carrying a Farkas certificate.
WeightVector find_weight(const ComparisonSet& C);

/// True iff a.(alpha_i - beta_i) >= 1 for every pair. Independent of the solver.
bool satisfies(const WeightVector& a, const ComparisonSet& C);
/// True iff c >= 0, c != 0 and sum c_i (alpha_i - beta_i) <= 0 componentwise.
bool is_farkas_certificate(const std::vector<Integer>& c, const ComparisonSet& C);

/// Inequality system as plain text, one `sum >= 1` row per comparison.
std::string inequality_tableau(const ComparisonSet& C, const PolyRing& ring);

/// Leading versus non-leading monomials of every element of the reduced GB.
ComparisonSet order_comparisons(const ReducedGroebnerBasis& G);
/// Leading versus non-leading monomials of every subalgebra generator.
ComparisonSet generator_comparisons(const SubalgebraGens& F, const OrderSpec& ord);
WeightVector represent_order_by_weight(const IdealGens& I, const OrderSpec& ord);

/// Requires sagbi_test(F, ord) to pass; throws InvalidArgument otherwise.
WeightVector represent_sagbi_by_weight(const SubalgebraGens& F, const OrderSpec& ord);

}  // namespace inalg
