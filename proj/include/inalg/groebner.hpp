#pragma once

// Buchberger's algorithm and what is built on it: initial ideals and
// kernels of algebra maps.

#include <cstdint>
#include <span>
#include <vector>

#include "inalg/order.hpp"
#include "inalg/polynomial.hpp"

namespace inalg {

/// Generators of an ideal. An empty list is the zero ideal.
struct IdealGens {
  Ring ring;
  std::vector<Polynomial> gens;

  IdealGens(Ring r, std::vector<Polynomial> g);
  bool is_zero() const { return gens.empty(); }
};

/// Minimal monomial generators, an antichain under divisibility, sorted
/// ascending in canonical order.
struct MonomialIdeal {
  Ring ring;
  std::vector<Monomial> mingens;

  MonomialIdeal(Ring r, std::vector<Monomial> gens);
  bool contains(const Monomial& m) const;
  bool is_zero() const { return mingens.empty(); }
  bool operator==(const MonomialIdeal& o) const {
    return same_ring(ring, o.ring) && mingens == o.mingens;
  }
};

/// Monic elements sorted ascending by leading monomial under `ord`.
struct ReducedGroebnerBasis {
  Ring ring;
  OrderSpec ord;
  std::vector<Polynomial> elements;

  std::vector<Monomial> leading_monomials() const;
  bool operator==(const ReducedGroebnerBasis& o) const {
    return same_ring(ring, o.ring) && ord == o.ord && elements == o.elements;
  }
};

struct GbOptions {
  /// Maximum number of reduction steps; 0 disables the guard. Defaults to
  /// the INALG_STEP_LIMIT environment variable when set.
  std::uint64_t step_limit = default_step_limit();

  static std::uint64_t default_step_limit();
};

/// Fully tail-reduced remainder of f modulo G. Among several reducers of a
/// monomial the element with the smallest leading monomial wins, then the
/// smallest index.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> G,
                       const OrderSpec& ord);
Polynomial normal_form(const Polynomial& f, const ReducedGroebnerBasis& G);

ReducedGroebnerBasis buchberger(const IdealGens& I, const OrderSpec& ord,
                                const GbOptions& opts = {});

bool ideal_contains(const ReducedGroebnerBasis& G, const Polynomial& f);

MonomialIdeal initial_ideal(const ReducedGroebnerBasis& G);
MonomialIdeal initial_ideal(const IdealGens& I, const OrderSpec& ord);

/// ini_a(I) as the initial forms of the reduced GB under
/// WeightRefined(a, tiebreak).
IdealGens initial_ideal_weight(const IdealGens& I, const WeightVector& a,
                               const OrderSpec& tiebreak);

/// I intersected with K[keep], as a subset of the reduced GB for the block
/// order (eliminated variables DegLex, then `kept_order`). With no kept
/// order the kept block is compared by RevLex.
IdealGens eliminate(const IdealGens& I, std::span<const std::size_t> keep);
IdealGens eliminate(const IdealGens& I, std::span<const std::size_t> keep,
                    const OrderSpec& kept_order);

/// Ring K[Y1..Yk] used by kernels.
Ring kernel_ring(std::size_t k);

/// Kernel of K[Y1..Yk] -> R, Y_i -> f_i, as its reduced GB under RevLex.
IdealGens presentation_kernel(std::span<const Polynomial> f);
/// Binomial kernel of Y_i -> m_i.
IdealGens toric_kernel(const Ring& source, std::span<const Monomial> m);

/// True iff every minimal generator of ini_ord(I) has degree 2. Requires
/// standard-graded generators.
bool quadratic_initial_certificate(const IdealGens& I, const OrderSpec& ord);

}  // namespace inalg
