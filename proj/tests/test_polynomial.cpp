#include <gtest/gtest.h>

#include "inalg/io.hpp"
#include "test_util.hpp"

using namespace inalg;
using namespace inalg::testing;

TEST(Polynomial, ProductsExpandExactly) {
  auto r = ring_of({"x", "y"});
  EXPECT_TRUE((P(r, "x + y") * P(r, "0")).is_zero());
  EXPECT_EQ(P(r, "x + y") * P(r, "x - y"), P(r, "x^2 - y^2"));
  EXPECT_EQ(P(r, "x + y") * P(r, "x*y") * P(r, "x*y^2"), P(r, "x^3*y^3 + x^2*y^4"));
}

TEST(Polynomial, CanonicalFormIsFixpoint) {
  auto r = ring_of({"x", "y", "z"});
  auto f = P(r, "3*z - x*y + 2*x*y + 1/2 - z");
  Polynomial g(r, f.terms());
  EXPECT_EQ(f, g);
  EXPECT_EQ(to_string(f), "x*y + 2*z + 1/2");
}

TEST(Polynomial, ADegreeAndInitialForm) {
  auto r4 = ring_of({"x1", "x2", "x3", "x4"});
  auto f = P(r4, "x1 + x2*x4 + x3^2");
  EXPECT_EQ(a_degree(f, WeightVector::ones(4)), 2);
  EXPECT_EQ(initial_form(f, WeightVector::ones(4)), P(r4, "x2*x4 + x3^2"));
  EXPECT_EQ(a_degree(P(r4, "1"), WeightVector{1, 5, 2, 3}), 0);

  auto r = ring_of({"x", "y", "z"});
  WeightVector a{3, 2, 1};
  EXPECT_EQ(a_degree(P(r, "x^2 - z^2"), a), 6);
  EXPECT_EQ(initial_form(P(r, "x^2 - z^2"), a), P(r, "x^2"));
  EXPECT_THROW(a_degree(Polynomial(r), a), ZeroPolynomial);
}

TEST(Polynomial, HomogenizeAndSpecialize) {
  auto r = ring_of({"x", "y", "z"});
  auto h = homogenize(P(r, "x^2 - z^2"), WeightVector{3, 2, 1});
  auto S = h.ring();
  EXPECT_EQ(h, P(S, "x^2 - z^2*t^4"));
  EXPECT_EQ(specialize_t(h, 2), P(r, "x^2 - 16*z^2"));
  EXPECT_EQ(specialize_t(h, 0), P(r, "x^2"));
  EXPECT_EQ(specialize_t(h, 1), P(r, "x^2 - z^2"));

  auto r2 = ring_of({"x", "y"});
  EXPECT_EQ(homogenize(P(r2, "x^2 + y"), WeightVector{1, 1}).terms().size(), 2u);
  EXPECT_EQ(to_string(homogenize(P(r2, "x^2 + y"), WeightVector{1, 1})), "x^2 + y*t");
  // a-homogeneous input gains no t
  auto g = homogenize(P(r2, "x^2 + y"), WeightVector{1, 2});
  EXPECT_EQ(to_string(g), "x^2 + y");
}

TEST(Polynomial, HomogenizationIsMultiplicative) {
  std::mt19937_64 rng(7);
  auto r = ring_of({"x", "y", "z"});
  WeightVector a{2, 3, 1};
  Ring S = extend_ring(r);
  for (int k = 0; k < 40; ++k) {
    auto f = random_poly(r, rng, 3, false);
    auto g = random_poly(r, rng, 3, false);
    if (f.is_zero() || g.is_zero()) continue;
    EXPECT_EQ(homogenize(f * g, a, S), homogenize(f, a, S) * homogenize(g, a, S));
    EXPECT_EQ(initial_form(f * g, a), initial_form(f, a) * initial_form(g, a));
  }
}

TEST(Polynomial, ExtendedRingAvoidsNameClash) {
  auto r = ring_of({"t", "x"});
  auto S = extend_ring(r);
  EXPECT_EQ(S->name(2), "t_");
  EXPECT_TRUE(S->has_homvar());
}

TEST(Polynomial, RingMismatchIsRejected) {
  auto r = ring_of({"x", "y"});
  auto s = ring_of({"x", "z"});
  EXPECT_THROW(P(r, "x") + P(s, "x"), RingMismatch);
}

TEST(Io, RoundTripsPrintedPolynomials) {
  auto r = ring_of({"x", "y", "z"});
  std::mt19937_64 rng(3);
  for (int k = 0; k < 50; ++k) {
    auto f = random_poly(r, rng, 4, false, 4) * Rational(1, 3);
    EXPECT_EQ(parse_polynomial(to_string(f), r), f);
  }
  EXPECT_EQ(to_string(P(r, "x^2 - 2*x*y + 1/3")), "x^2 - 2*x*y + 1/3");
  EXPECT_EQ(P(r, "2x*y"), P(r, "2*x*y"));
  EXPECT_EQ(P(r, " - 4/6 x ^ 2 "), P(r, "-2/3*x^2"));
}

TEST(Io, ReportsColumnOfUnknownVariable) {
  auto r = ring_of({"x", "y"});
  try {
    parse_polynomial("x + w^2", r, 4);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4u);
    EXPECT_EQ(e.column(), 5u);
  }
  EXPECT_THROW(parse_polynomial("x +", r), ParseError);
  EXPECT_THROW(parse_polynomial("x/0", r), ParseError);
  EXPECT_THROW(parse_polynomial("x^", r), ParseError);
}
