#pragma once

// Hilbert series of weighted monomial quotients, Hilbert functions of
// subalgebras through their initial algebras, Krull dimension, and the
// h-vector symmetry certificate.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "inalg/groebner.hpp"
#include "inalg/sagbi.hpp"

namespace inalg {

/// numerator(t) / prod_i (1 - t^denom_degrees[i])
struct HilbertSeries {
  std::vector<Integer> numerator;  // coefficient of t^k at index k
  std::vector<std::int64_t> denom_degrees;

  bool operator==(const HilbertSeries&) const = default;
};

struct HilbertFunctionTable {
  std::vector<Integer> values;  // degrees 0..d_max
  /// Values above this degree come from a truncated computation.
  std::optional<std::int64_t> valid_through;
};

enum class PivotStrategy {
  /// x_j^e with x_j in the most minimal generators (lowest index on ties)
  /// and e the smallest positive exponent of x_j among them.
  MostFrequentVariable,
  /// x_j with j the lowest index shared by two minimal generators.
  FirstSharedVariable,
};

HilbertSeries hilbert_series_monomial(
    const MonomialIdeal& M, const WeightVector& a,
    PivotStrategy pivot = PivotStrategy::MostFrequentVariable);

HilbertFunctionTable hilbert_function(const HilbertSeries& H, std::int64_t d_max);

/// Monomials of a-degree exactly d, in descending canonical order.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, const WeightVector& a,
                                          std::int64_t d);

/// Hilbert function of the algebra generated by F, graded by b, counted on
/// the (possibly truncated) initial algebra. Generators must be b-homogeneous.
HilbertFunctionTable hilbert_function_subalgebra(const SagbiState& state,
                                                 const OrderSpec& ord,
                                                 const WeightVector& b,
                                                 std::int64_t d_max);
/// Runs a completion capped at d_max first.
HilbertFunctionTable hilbert_function_subalgebra(const SubalgebraGens& F,
                                                 const OrderSpec& ord,
                                                 const WeightVector& b,
                                                 std::int64_t d_max);

/// Series of a confirmed initial algebra presented as K[Y]/(toric ideal),
/// Y_i graded by the b-degree of the i-th initial generator. With `normalize`
/// those degrees are divided by their gcd.
HilbertSeries hilbert_series_subalgebra(const SagbiState& state, const OrderSpec& ord,
                                        const WeightVector& b, bool normalize = false);

/// dim R/M: the largest variable set containing the support of no generator.
std::size_t krull_dim_monomial(const MonomialIdeal& M);

/// Order of the pole at t = 1.
std::int64_t pole_order(const HilbertSeries& H);

struct HilbertComparison {
  MonomialIdeal first_initial;
  MonomialIdeal second_initial;
  HilbertFunctionTable first;
  HilbertFunctionTable second;
  std::size_t first_dim = 0;
  std::size_t second_dim = 0;
  bool equal = false;
};

/// Hilbert functions (grading b) of R/ini(I) under two orders. A weight
/// initial ideal is covered by passing WeightRefined(a, tiebreak).
HilbertComparison compare_hilbert(const IdealGens& I, const WeightVector& b,
                                  const OrderSpec& first, const OrderSpec& second,
                                  std::int64_t d_max);

/// h(t) / prod (1 - t^e_j) with no remaining factor (1 - t^e_j) dividing h.
struct ReducedSeries {
  std::vector<Integer> h;
  std::vector<std::int64_t> denom_degrees;
};

ReducedSeries reduce_series(const HilbertSeries& H);

/// True iff the reduced numerator satisfies h(t) = +-t^s h(1/t). This
/// certifies Gorensteinness only for Cohen-Macaulay domains, which the
/// library does not decide.
bool gorenstein_symmetry_check(const HilbertSeries& H);

std::string to_string(const HilbertSeries& H);
std::string numerator_to_string(const std::vector<Integer>& coeffs);

}  // namespace inalg
