#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace inalg;
using namespace inalg::testing;

namespace {

Monomial random_mono(std::mt19937_64& rng, std::size_t n, int maxe) {
  std::uniform_int_distribution<int> e(0, maxe);
  Monomial m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = e(rng);
  return m;
}

std::vector<OrderSpec> sample_orders(std::size_t n) {
  std::vector<OrderSpec> out{OrderSpec::lex(n), OrderSpec::deglex(n), OrderSpec::revlex(n)};
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = n - 1 - i;
  out.push_back(OrderSpec::lex(n, perm));
  out.push_back(OrderSpec::revlex(n, perm));
  std::vector<long> w;
  for (std::size_t i = 0; i < n; ++i) w.push_back(static_cast<long>(i % 3 + 1));
  std::vector<Integer> wi(w.begin(), w.end());
  out.push_back(OrderSpec::weight_refined(WeightVector(wi), OrderSpec::lex(n)));
  return out;
}

}  // namespace

TEST(Order, FourVariablePolynomialLeadingMonomials) {
  auto r = ring_of({"x1", "x2", "x3", "x4"});
  auto f = P(r, "x1 + x2*x4 + x3^2");
  EXPECT_EQ(leading_monomial(f, OrderSpec::lex(4)), M(r, "x1"));
  EXPECT_EQ(leading_monomial(f, OrderSpec::deglex(4)), M(r, "x2*x4"));
  EXPECT_EQ(leading_monomial(f, OrderSpec::revlex(4)), M(r, "x3^2"));
}

TEST(Order, LexIgnoresDegree) {
  auto r = ring_of({"x", "y", "z"});
  EXPECT_EQ(OrderSpec::lex(3).compare(M(r, "x"), M(r, "y*z^5")), std::strong_ordering::greater);
  EXPECT_EQ(OrderSpec::deglex(3).compare(M(r, "x"), M(r, "y*z^5")), std::strong_ordering::less);
}

TEST(Order, ExtendedOrderPrefersSmallerTExponent) {
  auto r = ring_of({"x", "y"});
  auto S = extend_ring(r);
  auto ext = OrderSpec::extended_to_t(WeightVector{1, 1}, OrderSpec::lex(2));
  EXPECT_EQ(ext.compare(M(S, "x*t"), M(S, "y*t")), std::strong_ordering::greater);
  EXPECT_EQ(ext.compare(M(S, "x*t"), M(S, "x*t^2")), std::strong_ordering::less);
  // equal a'-degree: smaller t wins
  EXPECT_EQ(ext.compare(M(S, "x^2"), M(S, "x*t")), std::strong_ordering::greater);
}

TEST(Order, MonomialLeadsUnderEveryOrder) {
  auto r = ring_of({"x", "y"});
  for (const auto& o : sample_orders(2)) {
    auto lt = leading_term(P(r, "5*x^2*y"), o);
    EXPECT_EQ(lt.coeff, 5);
    EXPECT_EQ(lt.mono, M(r, "x^2*y"));
  }
}

TEST(Order, AxiomsOnRandomTriples) {
  std::mt19937_64 rng(11);
  const std::size_t n = 4;
  for (const auto& o : sample_orders(n)) {
    for (int k = 0; k < 300; ++k) {
      auto a = random_mono(rng, n, 3), b = random_mono(rng, n, 3), c = random_mono(rng, n, 3);
      auto ab = o.compare(a, b);
      EXPECT_EQ(o.compare(b, a), 0 <=> ab);
      EXPECT_EQ(ab == 0, a == b);
      if (ab < 0 && o.compare(b, c) < 0) EXPECT_TRUE(o.compare(a, c) < 0);
      if (!a.is_one()) EXPECT_TRUE(o.compare(a, Monomial(n)) > 0);
      if (ab < 0) EXPECT_TRUE(o.compare(a * c, b * c) < 0);
    }
  }
}

TEST(Order, ParsesTextForms) {
  auto r = make_ring({"x", "y", "z"});
  EXPECT_EQ(parse_order("lex", *r), OrderSpec::lex(3));
  EXPECT_EQ(parse_order("revlex", *r), OrderSpec::revlex(3));
  EXPECT_EQ(parse_order("degrevlex", *r), OrderSpec::revlex(3));
  EXPECT_EQ(parse_order("lex(y,x,z)", *r), OrderSpec::lex(3, {1, 0, 2}));
  EXPECT_EQ(parse_order("weight(3,2,1; lex)", *r),
            OrderSpec::weight_refined(WeightVector{3, 2, 1}, OrderSpec::lex(3)));
  for (const auto& o : sample_orders(3)) EXPECT_EQ(parse_order(o.to_string(*r), *r), o);
  EXPECT_THROW(parse_order("lex(y,x)", *r), ParseError);
  EXPECT_THROW(parse_order("weight(1,2; lex)", *r), Error);
  EXPECT_THROW(parse_order("weight(0,1,1; lex)", *r), Error);
  EXPECT_THROW(parse_order("banana", *r), ParseError);
}
