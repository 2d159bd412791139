#include <gtest/gtest.h>

#include "inalg/betti.hpp"
#include "inalg/hilbert.hpp"
#include "test_util.hpp"

using namespace inalg;
using namespace inalg::testing;

namespace {

using Entries = std::map<std::pair<std::int64_t, std::int64_t>, Integer>;

Integer binom(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

/// Hilbert function of R/I recovered from the Betti table through
/// HF(d) = sum_{i,j} (-1)^i beta_{i,j} binom(n-1+d-j, n-1).
Integer hf_from_betti(const BettiTable& T, std::int64_t d) {
  auto n = static_cast<std::int64_t>(T.nvars);
  Integer total = 0;
  for (const auto& [ij, b] : T.entries) {
    Integer term = b * binom(n - 1 + d - ij.second, n - 1);
    total += ij.first % 2 == 0 ? term : Integer(-term);
  }
  return total;
}

/// Dimension of (R/I)_d by rank of the degree-d multiples of the generators.
std::size_t hf_by_linear_algebra(const IdealGens& I, std::int64_t d) {
  auto n = I.ring->nvars();
  auto ones = WeightVector::ones(n);
  auto target = monomials_of_degree(n, ones, d);
  std::map<Monomial, std::size_t> col;
  for (std::size_t i = 0; i < target.size(); ++i) col[target[i]] = i;
  std::vector<std::vector<Rational>> rows;
  for (const auto& g : I.gens) {
    auto e = d - g.total_degree();
    if (e < 0) continue;
    for (const auto& u : monomials_of_degree(n, ones, e)) {
      std::vector<Rational> row(target.size(), 0);
      for (const auto& t : g.terms()) row[col.at(t.mono * u)] += t.coeff;
      rows.push_back(std::move(row));
    }
  }
  // Dense Gaussian elimination.
  std::size_t rank = 0;
  for (std::size_t c = 0; c < target.size() && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][c] == 0) continue;
      Rational f = rows[i][c] / rows[rank][c];
      for (std::size_t k = c; k < target.size(); ++k) rows[i][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return target.size() - rank;
}

}  // namespace

TEST(Betti, MaximalIdealOfThePlane) {
  auto r = ring_of({"x", "y"});
  auto T = graded_betti(IdealGens(r, Ps(r, {"x", "y"})), 3);
  Entries want{{{0, 0}, 1}, {{1, 1}, 2}, {{2, 2}, 1}};
  EXPECT_EQ(T.entries, want);
  EXPECT_TRUE(T.complete);
  auto inv = projdim_and_reg(T);
  EXPECT_EQ(inv.projdim, 2);
  EXPECT_EQ(inv.reg, 0);
}

TEST(Betti, MonomialAndPrincipalFixtures) {
  auto r = ring_of({"x", "y"});
  auto T = graded_betti(IdealGens(r, Ps(r, {"x^2", "x*y"})), 4);
  Entries want{{{0, 0}, 1}, {{1, 2}, 2}, {{2, 3}, 1}};
  EXPECT_EQ(T.entries, want);
  auto Q = graded_betti(IdealGens(r, Ps(r, {"x^2 - y^2"})), 4);
  Entries q{{{0, 0}, 1}, {{1, 2}, 1}};
  EXPECT_EQ(Q.entries, q);
  auto r3 = ring_of({"x", "y", "z"});
  auto C = graded_betti(IdealGens(r3, Ps(r3, {"x^2 - y*z", "x*y"})), 5);
  Entries ci{{{0, 0}, 1}, {{1, 2}, 2}, {{2, 4}, 1}};
  EXPECT_EQ(C.entries, ci);
}

TEST(Betti, IncompleteTableIsFlagged) {
  auto r = ring_of({"x", "y"});
  auto T = graded_betti(IdealGens(r, Ps(r, {"x^2", "x*y"})), 2);
  EXPECT_FALSE(T.complete);
  EXPECT_THROW(projdim_and_reg(T), IncompleteTable);
  EXPECT_THROW(graded_betti(IdealGens(r, Ps(r, {"x^2 - y"})), 3), NotGraded);
}

TEST(Betti, RandomIdealsMatchHilbertFunction) {
  std::mt19937_64 rng(31);
  auto r = ring_of({"x", "y", "z"});
  for (int k = 0; k < 6; ++k) {
    IdealGens I(r, {random_poly(r, rng, 2, true), random_poly(r, rng, 2, true),
                    random_poly(r, rng, 3, true)});
    auto cmp = betti_comparison(I, OrderSpec::lex(3));
    EXPECT_TRUE(cmp.ideal.complete);
    for (std::int64_t d = 0; d <= 6; ++d)
      EXPECT_EQ(hf_from_betti(cmp.ideal, d), hf_by_linear_algebra(I, d)) << "degree " << d;
    for (const auto& [ij, b] : cmp.ideal.entries) EXPECT_LE(b, cmp.initial.at(ij.first, ij.second));
  }
}

TEST(Betti, TableText) {
  auto r = ring_of({"x", "y"});
  auto T = graded_betti(IdealGens(r, Ps(r, {"x", "y"})), 2);
  EXPECT_EQ(to_string(T),
            "        0 1 2\n"
            " total: 1 2 1\n"
            "     0: 1 2 1\n");
}
