#pragma once

// The homogenized family S/hom_a(I) over K[t], S = R[t]: construction from a
// weight-refined Groebner basis, fibers at t = c, and a degreewise freeness
// certificate.

#include <cstdint>
#include <string>
#include <vector>

#include "inalg/groebner.hpp"

namespace inalg {

struct HomogenizedFamily {
  IdealGens base;
  WeightVector weight;
  OrderSpec tiebreak;
  /// Reduced GB of the base ideal under WeightRefined(weight, tiebreak).
  ReducedGroebnerBasis base_basis;
  /// Reduced GB of hom_a(I) in R[t] under ExtendedToT(weight, tiebreak).
  ReducedGroebnerBasis total;
};

/// Default tiebreak for families is RevLex.
HomogenizedFamily homogenize_ideal(const IdealGens& I, const WeightVector& a);
HomogenizedFamily homogenize_ideal(const IdealGens& I, const WeightVector& a,
                                   const OrderSpec& tiebreak);

/// Generators of the fiber at t = c, as an ideal of R.
IdealGens fiber(const HomogenizedFamily& F, const Rational& c);

struct FreenessDegree {
  std::int64_t degree = 0;
  std::size_t standard = 0;  // standard monomials m of R with a(m) <= degree
  std::size_t codim = 0;     // dim S_d - dim hom_a(I)_d by linear algebra
};

struct FreenessReport {
  bool free = false;
  std::vector<FreenessDegree> degrees;
};

/// For every a'-degree d <= bound compares the number of standard monomials
/// of R of a-degree <= d (a K[t]-basis candidate) against the codimension of
/// the degree-d piece of hom_a(I), computed by exact rank.
FreenessReport freeness_basis_check(const HomogenizedFamily& F, std::int64_t bound);

/// 2 * max a-degree of the base generators (at least 1).
std::int64_t default_freeness_bound(const HomogenizedFamily& F);

/// Header with weight and tiebreak, then the total GB, one polynomial per line.
std::string family_dump(const HomogenizedFamily& F);

}  // namespace inalg
