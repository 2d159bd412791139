#include <gtest/gtest.h>

#include "inalg/flat_family.hpp"
#include "inalg/hilbert.hpp"
#include "inalg/io.hpp"
#include "test_util.hpp"

using namespace inalg;
using namespace inalg::testing;

TEST(FlatFamily, ParabolaFibers) {
  auto r = ring_of({"x", "y"});
  IdealGens I(r, Ps(r, {"x^2 - y"}));
  auto F = homogenize_ideal(I, WeightVector{1, 1});
  ASSERT_EQ(F.total.elements.size(), 1u);
  EXPECT_EQ(to_string(F.total.elements[0]), "x^2 - y*t");
  EXPECT_EQ(fiber(F, 0).gens, Ps(r, {"x^2"}));
  EXPECT_EQ(fiber(F, 1).gens, Ps(r, {"x^2 - y"}));
  EXPECT_EQ(fiber(F, 2).gens, Ps(r, {"x^2 - 2*y"}));
  auto rep = freeness_basis_check(F, 3);
  EXPECT_TRUE(rep.free);
  // Oracle: standard monomials of (x^2) up to degree d are 1 + 2 + ... (d+1 - [d>=2] ...)
  std::size_t cum = 0;
  for (std::int64_t d = 0; d <= 3; ++d) {
    cum += d == 0 ? 1 : 2;  // y^d and x*y^(d-1)
    EXPECT_EQ(rep.degrees[static_cast<std::size_t>(d)].standard, cum);
  }
}

TEST(FlatFamily, TwistedCubicWithLexWeight) {
  auto r = ring_of({"x", "y", "z"});
  IdealGens I(r, Ps(r, {"x^2 - y", "x*y - z"}));
  WeightVector a{5, 3, 4};
  auto F = homogenize_ideal(I, a, OrderSpec::lex(3));
  EXPECT_EQ(F.total.elements.size(), 4u);
  EXPECT_EQ(buchberger(fiber(F, 1), OrderSpec::lex(3)), buchberger(I, OrderSpec::lex(3)));
  EXPECT_EQ(initial_ideal(fiber(F, 0), OrderSpec::lex(3)), initial_ideal(I, OrderSpec::lex(3)));
  EXPECT_TRUE(freeness_basis_check(F, default_freeness_bound(F)).free);
  for (const auto& g : F.total.elements) EXPECT_TRUE(g.is_homogeneous(a.extended()));
}

TEST(FlatFamily, HomogeneousIdealHasNoT) {
  auto r = ring_of({"x", "y"});
  IdealGens I(r, Ps(r, {"x^2 - x*y"}));
  auto F = homogenize_ideal(I, WeightVector{1, 1});
  for (const auto& g : F.total.elements)
    for (const auto& t : g.terms()) EXPECT_EQ(t.mono[2], 0);
}

TEST(FlatFamily, DegenerateIdeals) {
  auto r = ring_of({"x", "y"});
  auto Z = homogenize_ideal(IdealGens(r, {}), WeightVector{1, 1});
  EXPECT_TRUE(freeness_basis_check(Z, 4).free);
  auto r1 = ring_of({"x"});
  auto X = homogenize_ideal(IdealGens(r1, Ps(r1, {"x"})), WeightVector{1});
  auto rep = freeness_basis_check(X, 5);
  EXPECT_TRUE(rep.free);
  for (const auto& d : rep.degrees) EXPECT_EQ(d.standard, 1u);
}

TEST(FlatFamily, RandomIdealsSatisfyFiberIdentities) {
  std::mt19937_64 rng(17);
  auto r = ring_of({"x", "y", "z"});
  WeightVector a{2, 1, 3};
  auto rev = OrderSpec::revlex(3);
  for (int k = 0; k < 8; ++k) {
    IdealGens I(r, {random_poly(r, rng, 2, false), random_poly(r, rng, 2, false)});
    auto F = homogenize_ideal(I, a);
    auto tau = OrderSpec::weight_refined(a, rev);
    EXPECT_EQ(buchberger(fiber(F, 1), tau), buchberger(I, tau));
    EXPECT_EQ(buchberger(fiber(F, 0), tau), buchberger(initial_ideal_weight(I, a, rev), tau));
    EXPECT_TRUE(freeness_basis_check(F, default_freeness_bound(F)).free);
  }
}

TEST(FlatFamily, DumpReparses) {
  auto r = ring_of({"x", "y"});
  auto F = homogenize_ideal(IdealGens(r, Ps(r, {"x^2 - y"})), WeightVector{1, 1});
  auto text = family_dump(F);
  EXPECT_NE(text.find("ring x, y, t"), std::string::npos);
  EXPECT_NE(text.find("x^2 - y*t"), std::string::npos);
}
