#include <gtest/gtest.h>

#include <set>

#include "inalg/hilbert.hpp"
#include "test_util.hpp"

using namespace inalg;
using namespace inalg::testing;

namespace {

/// Counts standard monomials of a-degree d by enumerating every exponent
/// vector with entries up to d.
std::size_t brute_count(const MonomialIdeal& M, const WeightVector& a, std::int64_t d) {
  std::size_t n = M.ring->nvars();
  std::vector<Exponent> e(n, 0);
  std::size_t count = 0;
  for (;;) {
    Monomial m(e);
    if (a.degree(m) == d && !M.contains(m)) ++count;
    std::size_t i = 0;
    for (; i < n; ++i) {
      if (++e[i] <= d) break;
      e[i] = 0;
    }
    if (i == n) return count;
  }
}

std::vector<long> values(const HilbertFunctionTable& t) {
  std::vector<long> out;
  for (const auto& v : t.values) out.push_back(v.get_si());
  return out;
}

}  // namespace

TEST(Hilbert, SeriesOfSmallMonomialIdeals) {
  auto r = ring_of({"x", "y"});
  auto ones = WeightVector::ones(2);
  MonomialIdeal I(r, {M(r, "x^2"), M(r, "x*y")});
  auto H = hilbert_series_monomial(I, ones);
  std::vector<Integer> num{1, 0, -2, 1};
  EXPECT_EQ(H.numerator, num);
  EXPECT_EQ(H.denom_degrees, (std::vector<std::int64_t>{1, 1}));
  EXPECT_EQ(values(hilbert_function(H, 4)), (std::vector<long>{1, 2, 1, 1, 1}));
  EXPECT_EQ(to_string(H), "(1 - 2*t^2 + t^3) / ((1-t)^2)");

  auto Z = hilbert_series_monomial(MonomialIdeal(r, {}), ones);
  EXPECT_EQ(Z.numerator, std::vector<Integer>{1});
  EXPECT_EQ(values(hilbert_function(Z, 3)), (std::vector<long>{1, 2, 3, 4}));
  auto K = hilbert_series_monomial(MonomialIdeal(r, {M(r, "x"), M(r, "y")}), ones);
  EXPECT_EQ(K.numerator, (std::vector<Integer>{1, -2, 1}));
}

TEST(Hilbert, NonFinitelyGeneratedSeriesExpansion) {
  HilbertSeries H{{1, -1, 1}, {1, 1}};
  EXPECT_EQ(values(hilbert_function(H, 5)), (std::vector<long>{1, 1, 2, 3, 4, 5}));
}

TEST(Hilbert, MatchesBruteForceAndPivotChoice) {
  std::mt19937_64 rng(4);
  auto r = ring_of({"x", "y", "z"});
  std::uniform_int_distribution<int> e(0, 3);
  std::vector<WeightVector> weights{WeightVector::ones(3), WeightVector{1, 2, 3}};
  for (int k = 0; k < 25; ++k) {
    std::vector<Monomial> gens;
    for (int i = 0; i < 4; ++i) {
      Monomial m(std::vector<Exponent>{e(rng), e(rng), e(rng)});
      if (!m.is_one()) gens.push_back(m);
    }
    MonomialIdeal M(r, gens);
    for (const auto& a : weights) {
      auto H1 = hilbert_series_monomial(M, a, PivotStrategy::MostFrequentVariable);
      auto H2 = hilbert_series_monomial(M, a, PivotStrategy::FirstSharedVariable);
      auto t1 = hilbert_function(H1, 8);
      EXPECT_EQ(values(t1), values(hilbert_function(H2, 8)));
      for (std::int64_t d = 0; d <= 8; ++d)
        EXPECT_EQ(t1.values[static_cast<std::size_t>(d)], brute_count(M, a, d));
    }
  }
}

TEST(Hilbert, KrullDimension) {
  auto r = ring_of({"x", "y", "z"});
  EXPECT_EQ(krull_dim_monomial(MonomialIdeal(r, {})), 3u);
  EXPECT_EQ(krull_dim_monomial(MonomialIdeal(r, {M(r, "x*y")})), 2u);
  EXPECT_EQ(krull_dim_monomial(MonomialIdeal(r, {M(r, "x*y"), M(r, "y*z"), M(r, "x*z")})), 1u);
  EXPECT_EQ(krull_dim_monomial(MonomialIdeal(r, {M(r, "x"), M(r, "y^2"), M(r, "z^3")})), 0u);
  // Pole order of the series agrees with the combinatorial dimension.
  MonomialIdeal J(r, {M(r, "x^2"), M(r, "x*y")});
  EXPECT_EQ(pole_order(hilbert_series_monomial(J, WeightVector::ones(3))),
            static_cast<std::int64_t>(krull_dim_monomial(J)));
}

TEST(Hilbert, SubalgebraFunctions) {
  auto r = ring_of({"x", "y"});
  auto dl = OrderSpec::deglex(2);
  auto t = hilbert_function_subalgebra(SubalgebraGens(r, Ps(r, {"x + y", "x*y", "x*y^2"})), dl,
                                       WeightVector::ones(2), 5);
  EXPECT_EQ(values(t), (std::vector<long>{1, 1, 2, 3, 4, 5}));
  auto full = hilbert_function_subalgebra(SubalgebraGens(r, Ps(r, {"x", "y"})), dl,
                                          WeightVector::ones(2), 3);
  EXPECT_EQ(values(full), (std::vector<long>{1, 2, 3, 4}));

  // Semigroup <(2,0,0),(1,1,0),(0,2,0),(0,1,1)> counted directly, graded by half degree.
  auto r3 = ring_of({"x", "y", "z"});
  auto t3 = hilbert_function_subalgebra(SubalgebraGens(r3, Ps(r3, {"x^2", "x*y", "y^2", "y*z"})),
                                        OrderSpec::lex(3), WeightVector::ones(3), 12);
  for (std::int64_t k = 0; k <= 6; ++k) {
    std::set<Monomial> seen;
    for (int p = 0; p <= k; ++p)
      for (int q = 0; p + q <= k; ++q)
        for (int s = 0; p + q + s <= k; ++s) {
          int u = static_cast<int>(k) - p - q - s;
          seen.insert(Monomial(std::vector<Exponent>{2 * p + q, q + 2 * s + u, u}));
        }
    EXPECT_EQ(t3.values[static_cast<std::size_t>(2 * k)], seen.size());
  }
}

TEST(Hilbert, ComparisonAcrossOrders) {
  auto r = ring_of({"x", "y", "z"});
  IdealGens I(r, Ps(r, {"x^2 - y*z", "x*y - z^2"}));
  auto cmp = compare_hilbert(I, WeightVector::ones(3), OrderSpec::lex(3), OrderSpec::revlex(3), 10);
  EXPECT_TRUE(cmp.equal);
  EXPECT_EQ(cmp.first_dim, cmp.second_dim);
}

TEST(Hilbert, ReductionAndSymmetry) {
  // Four generators in degree 2 with one relation in degree 4.
  HilbertSeries H{{1, 0, 0, 0, -1}, {2, 2, 2, 2}};
  auto red = reduce_series(H);
  EXPECT_EQ(red.h, (std::vector<Integer>{1, 0, 1}));
  EXPECT_EQ(red.denom_degrees.size(), 3u);
  EXPECT_TRUE(gorenstein_symmetry_check(H));

  auto r = ring_of({"x", "y"});
  auto Hm = hilbert_series_monomial(MonomialIdeal(r, {M(r, "x^2"), M(r, "x*y")}),
                                    WeightVector::ones(2));
  auto red2 = reduce_series(Hm);
  EXPECT_EQ(red2.h, (std::vector<Integer>{1, 1, -1}));
  EXPECT_FALSE(gorenstein_symmetry_check(Hm));
}
