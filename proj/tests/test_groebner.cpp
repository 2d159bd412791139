#include <gtest/gtest.h>

#include <algorithm>

#include "test_util.hpp"

using namespace inalg;
using namespace inalg::testing;

namespace {

/// Buchberger criterion checked directly: every S-polynomial reduces to zero
/// by plain multivariate division that shares no code with the engine.
bool s_pairs_vanish(const ReducedGroebnerBasis& G) {
  const auto& ord = G.ord;
  auto divide = [&](Polynomial f) {
    Polynomial rem(G.ring);
    while (!f.is_zero()) {
      Term lt = leading_term(f, ord);
      bool hit = false;
      for (const auto& g : G.elements) {
        Term lg = leading_term(g, ord);
        if (lg.mono.divides(lt.mono)) {
          f = f - g.mul_term(lt.coeff / lg.coeff, lt.mono / lg.mono);
          hit = true;
          break;
        }
      }
      if (!hit) {
        rem = rem + Polynomial::monomial(G.ring, lt.mono, lt.coeff);
        f = f - Polynomial::monomial(G.ring, lt.mono, lt.coeff);
      }
    }
    return rem;
  };
  for (std::size_t i = 0; i < G.elements.size(); ++i)
    for (std::size_t j = i + 1; j < G.elements.size(); ++j) {
      Term a = leading_term(G.elements[i], ord), b = leading_term(G.elements[j], ord);
      Monomial l = a.mono.lcm(b.mono);
      auto s = G.elements[i].mul_term(1 / a.coeff, l / a.mono) -
               G.elements[j].mul_term(1 / b.coeff, l / b.mono);
      if (!divide(s).is_zero()) return false;
    }
  return true;
}

}  // namespace

TEST(Groebner, NormalForms) {
  auto r = ring_of({"x", "y"});
  auto dl = OrderSpec::deglex(2);
  EXPECT_TRUE(normal_form(P(r, "x^2"), Ps(r, {"x"}), dl).is_zero());
  EXPECT_EQ(normal_form(P(r, "x^2 + y"), Ps(r, {"x^2 - y"}), dl), P(r, "2*y"));
  EXPECT_EQ(normal_form(P(r, "y"), Ps(r, {"x"}), OrderSpec::lex(2)), P(r, "y"));
}

TEST(Groebner, TwistedCubicUnderLex) {
  auto r = ring_of({"x", "y", "z"});
  auto G = buchberger(IdealGens(r, Ps(r, {"x^2 - y", "x*y - z"})), OrderSpec::lex(3));
  std::vector<Polynomial> expected = Ps(r, {"y^3 - z^2", "x*z - y^2", "x*y - z", "x^2 - y"});
  EXPECT_EQ(G.elements, expected);
  EXPECT_TRUE(s_pairs_vanish(G));
  // Parametrization x = s, y = s^2, z = s^3 annihilates every element.
  auto s = ring_of({"s"});
  std::vector<Polynomial> img = Ps(s, {"s", "s^2", "s^3"});
  for (const auto& g : G.elements) EXPECT_TRUE(substitute(g, img, s).is_zero());
  auto ini = initial_ideal(G);
  std::vector<Monomial> lm{M(r, "x^2"), M(r, "x*y"), M(r, "x*z"), M(r, "y^3")};
  EXPECT_EQ(ini, MonomialIdeal(r, lm));
}

TEST(Groebner, TrivialCases) {
  auto r = ring_of({"x", "y"});
  auto G = buchberger(IdealGens(r, Ps(r, {"x^2", "x*y"})), OrderSpec::revlex(2));
  EXPECT_EQ(G.elements.size(), 2u);
  auto H = buchberger(IdealGens(r, Ps(r, {"x - 1"})), OrderSpec::lex(2));
  ASSERT_EQ(H.elements.size(), 1u);
  EXPECT_EQ(H.elements[0], P(r, "x - 1"));
  auto U = buchberger(IdealGens(r, Ps(r, {"x + 1", "x"})), OrderSpec::lex(2));
  ASSERT_EQ(U.elements.size(), 1u);
  EXPECT_EQ(U.elements[0], P(r, "1"));
  auto Z = buchberger(IdealGens(r, {}), OrderSpec::lex(2));
  EXPECT_TRUE(Z.elements.empty());
}

TEST(Groebner, UniqueUnderGeneratorPermutation) {
  std::mt19937_64 rng(5);
  auto r = ring_of({"x", "y", "z"});
  for (int k = 0; k < 15; ++k) {
    std::vector<Polynomial> gens;
    for (int i = 0; i < 3; ++i) gens.push_back(random_poly(r, rng, 2, true));
    for (const auto& ord : {OrderSpec::lex(3), OrderSpec::revlex(3)}) {
      auto G1 = buchberger(IdealGens(r, gens), ord);
      auto perm = gens;
      std::reverse(perm.begin(), perm.end());
      perm.push_back(perm[0] + perm[1]);
      auto G2 = buchberger(IdealGens(r, perm), ord);
      EXPECT_EQ(G1, G2);
      EXPECT_TRUE(s_pairs_vanish(G1));
      for (const auto& g : gens) EXPECT_TRUE(ideal_contains(G1, g));
    }
  }
}

TEST(Groebner, WeightInitialIdeal) {
  auto r = ring_of({"x", "y"});
  auto I = IdealGens(r, Ps(r, {"x^2 - y"}));
  auto a = initial_ideal_weight(I, WeightVector{1, 1}, OrderSpec::lex(2));
  EXPECT_EQ(a.gens, Ps(r, {"x^2"}));
  auto b = initial_ideal_weight(I, WeightVector{1, 2}, OrderSpec::lex(2));
  EXPECT_EQ(b.gens, Ps(r, {"x^2 - y"}));
}

TEST(Groebner, Elimination) {
  auto r = ring_of({"x", "y", "z"});
  std::vector<std::size_t> keep{1, 2};
  auto E = eliminate(IdealGens(r, Ps(r, {"y - x^2", "z - x^3"})), keep);
  ASSERT_EQ(E.gens.size(), 1u);
  EXPECT_EQ(E.gens[0].canonical_monic(), P(r, "y^3 - z^2"));
  std::vector<std::size_t> keep_y{1};
  EXPECT_TRUE(eliminate(IdealGens(r, Ps(r, {"x"})), keep_y).is_zero());
  EXPECT_TRUE(eliminate(IdealGens(r, Ps(r, {"x - y"})), keep_y).is_zero());
}

TEST(Groebner, Kernels) {
  auto r = ring_of({"x", "y", "z"});
  auto f = Ps(r, {"x^2", "x*y", "y^2"});
  auto K = presentation_kernel(f);
  auto Y = K.ring;
  ASSERT_EQ(K.gens.size(), 1u);
  EXPECT_EQ(K.gens[0].canonical_monic(), P(Y, "Y1*Y3 - Y2^2").canonical_monic());

  auto g = Ps(r, {"x^2 - z^2", "x*y", "y^2", "y*z"});
  auto K2 = presentation_kernel(g);
  ASSERT_EQ(K2.gens.size(), 1u);
  EXPECT_EQ(K2.gens[0], P(K2.ring, "Y2^2 - Y1*Y3 - Y4^2"));
  for (const auto& h : K2.gens) EXPECT_TRUE(substitute(h, g, r).is_zero());

  std::vector<Monomial> m{M(r, "x^2"), M(r, "x*y"), M(r, "y^2"), M(r, "y*z")};
  auto T = toric_kernel(r, m);
  ASSERT_EQ(T.gens.size(), 1u);
  EXPECT_EQ(T.gens[0], P(T.ring, "Y2^2 - Y1*Y3"));

  EXPECT_TRUE(presentation_kernel(Ps(r, {"x"})).is_zero());
  std::vector<Monomial> xy{M(r, "x"), M(r, "y")};
  EXPECT_TRUE(toric_kernel(r, xy).is_zero());
}

TEST(Groebner, QuadraticCertificate) {
  auto r = ring_of({"x", "y", "z", "w"});
  EXPECT_TRUE(quadratic_initial_certificate(IdealGens(r, Ps(r, {"x^2 - y*z"})), OrderSpec::lex(4)));
  EXPECT_FALSE(
      quadratic_initial_certificate(IdealGens(r, Ps(r, {"y^3 - z^2*w"})), OrderSpec::deglex(4)));
  EXPECT_TRUE(quadratic_initial_certificate(IdealGens(r, Ps(r, {"x*y", "y*z"})), OrderSpec::lex(4)));
  EXPECT_THROW(quadratic_initial_certificate(IdealGens(r, Ps(r, {"x^2 - y"})), OrderSpec::lex(4)),
               NotGraded);
}

TEST(Groebner, StepLimitIsEnforced) {
  auto r = ring_of({"x", "y", "z"});
  GbOptions opts;
  IdealGens cyclic(r, Ps(r, {"x + y + z", "x*y + y*z + z*x", "x*y*z - 1"}));
  opts.step_limit = 3;
  EXPECT_THROW(buchberger(cyclic, OrderSpec::lex(3), opts), StepLimitExceeded);
  opts.step_limit = 0;
  EXPECT_EQ(buchberger(cyclic, OrderSpec::lex(3), opts).elements.size(), 3u);
}
