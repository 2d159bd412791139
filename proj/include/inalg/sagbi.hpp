#pragma once

// Initial algebras of finitely generated subalgebras: subduction, the Sagbi
// criterion through toric relations of the initial monomials, degree-capped
// completion, and the kernel degeneration check for presentations.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "inalg/groebner.hpp"

namespace inalg {

/// Nonconstant generators of a K-subalgebra.
struct SubalgebraGens {
  Ring ring;
  std::vector<Polynomial> gens;

  SubalgebraGens(Ring r, std::vector<Polynomial> g);
};

/// One subtraction: remainder -= scalar * prod f_i^exponents[i].
struct SubductionStep {
  Rational scalar;
  std::vector<Exponent> exponents;
};

struct Subduction {
  Polynomial remainder;
  std::vector<SubductionStep> steps;
};

/// Exponents c >= 0 with prod gens[i]^c[i] == m, found by depth-first search
/// that tries larger exponents on earlier generators first.
std::optional<std::vector<Exponent>> factor_over(const Monomial& m,
                                                 std::span<const Monomial> gens);

Subduction subduct(const Polynomial& f, const SubalgebraGens& F, const OrderSpec& ord);
/// f - sum scalar * prod f_i^c_i, for auditing a recorded subduction.
Polynomial replay_subduction(const Polynomial& f, std::span<const SubductionStep> steps,
                             const SubalgebraGens& F);

struct LiftedRelation {
  Polynomial relation;  // binomial in K[Y1..Yk]
  Polynomial lift;      // in R, leading terms cancel
  Subduction subduction;
};

struct SagbiTest {
  bool passed = false;
  std::vector<Polynomial> witnesses;
  std::vector<LiftedRelation> relations;
};

SagbiTest sagbi_test(const SubalgebraGens& F, const OrderSpec& ord);

struct SagbiState {
  SubalgebraGens gens;
  /// Set when a candidate above the cap was discarded or the test did not close.
  std::optional<std::int64_t> truncated_at;

  bool confirmed() const { return !truncated_at.has_value(); }
};

SagbiState sagbi_complete(const SubalgebraGens& F, const OrderSpec& ord,
                          std::int64_t degree_cap);

/// Drops duplicates and monomials lying in the semigroup of the others;
/// sorted ascending under canonical order.
std::vector<Monomial> minimal_semigroup_generators(std::vector<Monomial> m);
std::vector<Monomial> initial_algebra_gens(const SagbiState& state, const OrderSpec& ord);

struct KernelDegeneration {
  bool holds = false;
  WeightVector b;             // (a(f_1), ..., a(f_k))
  IdealGens kernel;           // Ker(Y_i -> f_i)
  IdealGens initial_kernel;   // ini_b of the above
  IdealGens special_kernel;   // Ker(Y_i -> ini_a(f_i))
};

/// Checks ini_b(Ker(Y -> f)) == Ker(Y -> ini_a(f)) with b the a-degrees of
/// the generators. Only meaningful when the ini_a(f_i) generate ini_a(A).
KernelDegeneration verify_kernel_degeneration(const SubalgebraGens& F,
                                              const WeightVector& a,
                                              const OrderSpec& tiebreak);

}  // namespace inalg
