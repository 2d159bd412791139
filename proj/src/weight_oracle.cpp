#include "inalg/weight_oracle.hpp"

#include <numeric>
#include <sstream>

#include "inalg/io.hpp"
#include "inalg/simplex.hpp"

namespace inalg {

void ComparisonSet::add(Monomial greater, Monomial smaller) {
  if (greater.size() != nvars || smaller.size() != nvars)
    throw RingMismatch("comparison monomials have the wrong arity");
  if (greater == smaller) throw InvalidArgument("a comparison needs two distinct monomials");
  pairs.emplace_back(std::move(greater), std::move(smaller));
}

namespace {

std::vector<std::vector<long>> difference_rows(const ComparisonSet& C) {
  std::vector<std::vector<long>> rows;
  for (const auto& [m, n] : C.pairs) {
    std::vector<long> r(C.nvars);
    for (std::size_t j = 0; j < C.nvars; ++j) r[j] = long{m[j]} - long{n[j]};
    rows.push_back(std::move(r));
  }
  return rows;
}

/// Primitive integer vector proportional to a nonnegative rational vector.
std::vector<Integer> primitive(const std::vector<Rational>& v) {
  Integer l = 1;
  for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  std::vector<Integer> out;
  Integer g = 0;
  for (const auto& q : v) {
    Integer z = q.get_num() * (l / q.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
    out.push_back(z);
  }
  if (g > 1)
    for (auto& z : out) z /= g;
  return out;
}

std::vector<Integer> farkas_certificate(const std::vector<std::vector<long>>& gamma,
                                        std::size_t n) {
  // c >= 0, sum c = 1, Gamma^T c + s = 0, s >= 0.
  std::size_t m = gamma.size();
  lp::Matrix A(n + 1, std::vector<Rational>(m + n, 0));
  std::vector<Rational> b(n + 1, 0);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < m; ++i) A[j][i] = gamma[i][j];
    A[j][m + j] = 1;
  }
  for (std::size_t i = 0; i < m; ++i) A[n][i] = 1;
  b[n] = 1;
  auto r = lp::minimize(std::vector<Rational>(m + n, 0), A, b);
  if (r.status != lp::Status::Optimal)
    throw InternalInconsistency("neither a weight nor a Farkas certificate exists");
  r.x.resize(m);
  return primitive(r.x);
}

}  // namespace

WeightVector find_weight(const ComparisonSet& C) {
  std::size_t n = C.nvars;
  if (n == 0) throw InvalidArgument("comparison set over zero variables");
  if (C.pairs.empty()) return WeightVector::ones(n);
  auto gamma = difference_rows(C);
  std::size_t m = gamma.size();

  // Shifted variables x = a - 1 >= 0, surplus s >= 0:  Gamma x - s = 1 - Gamma 1.
  lp::Matrix A(m, std::vector<Rational>(n + m, 0));
  std::vector<Rational> b(m);
  for (std::size_t i = 0; i < m; ++i) {
    long row_sum = 0;
    for (std::size_t j = 0; j < n; ++j) {
      A[i][j] = gamma[i][j];
      row_sum += gamma[i][j];
    }
    A[i][n + i] = -1;
    b[i] = 1 - row_sum;
  }
  std::vector<Rational> cost(n + m, 0);
  for (std::size_t j = 0; j < n; ++j) cost[j] = 1;
  auto r = lp::minimize(cost, A, b);
  if (r.status == lp::Status::Infeasible) throw Infeasible(farkas_certificate(gamma, n));
  if (r.status != lp::Status::Optimal) throw InternalInconsistency("weight LP is unbounded");

  // Lexicographic minimum on the optimal face.
  std::vector<Rational> fixed_row(n + m, 0);
  for (std::size_t j = 0; j < n; ++j) fixed_row[j] = 1;
  A.push_back(fixed_row);
  b.push_back(r.objective);
  std::vector<Rational> x = r.x;
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Rational> ck(n + m, 0);
    ck[k] = 1;
    auto rk = lp::minimize(ck, A, b);
    if (rk.status != lp::Status::Optimal)
      throw InternalInconsistency("lexicographic refinement lost feasibility");
    x = rk.x;
    std::vector<Rational> pin(n + m, 0);
    pin[k] = 1;
    A.push_back(std::move(pin));
    b.push_back(rk.x[k]);
  }
  std::vector<Rational> a(n);
  for (std::size_t j = 0; j < n; ++j) a[j] = x[j] + 1;
  WeightVector w(primitive(a));
  if (!satisfies(w, C)) throw InternalInconsistency("solver returned an invalid weight");
  return w;
}

bool satisfies(const WeightVector& a, const ComparisonSet& C) {
  if (a.size() != C.nvars) return false;
  for (const auto& [m, n] : C.pairs)
    if (a.degree(m) - a.degree(n) < 1) return false;
  return true;
}

bool is_farkas_certificate(const std::vector<Integer>& c, const ComparisonSet& C) {
  if (c.size() != C.pairs.size()) return false;
  bool nonzero = false;
  for (const auto& x : c) {
    if (x < 0) return false;
    if (x != 0) nonzero = true;
  }
  if (!nonzero) return false;
  auto gamma = difference_rows(C);
  for (std::size_t j = 0; j < C.nvars; ++j) {
    Integer s = 0;
    for (std::size_t i = 0; i < c.size(); ++i) s += c[i] * gamma[i][j];
    if (s > 0) return false;
  }
  return true;
}

std::string inequality_tableau(const ComparisonSet& C, const PolyRing& ring) {
  std::ostringstream out;
  auto gamma = difference_rows(C);
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    out << to_string(C.pairs[i].first, ring) << " > " << to_string(C.pairs[i].second, ring)
        << ":  ";
    bool first = true;
    for (std::size_t j = 0; j < C.nvars; ++j) {
      long g = gamma[i][j];
      if (g == 0) continue;
      if (first) {
        if (g < 0) out << "-";
      } else {
        out << (g < 0 ? " - " : " + ");
      }
      first = false;
      if (std::labs(g) != 1) out << std::labs(g) << "*";
      out << "w_" << ring.name(j);
    }
    if (first) out << "0";
    out << " >= 1\n";
  }
  return out.str();
}

ComparisonSet order_comparisons(const ReducedGroebnerBasis& G) {
  ComparisonSet C(G.ring->nvars());
  for (const auto& g : G.elements) {
    Monomial lead = leading_monomial(g, G.ord);
    for (const auto& t : g.terms())
      if (t.mono != lead) C.add(lead, t.mono);
  }
  return C;
}

WeightVector represent_order_by_weight(const IdealGens& I, const OrderSpec& ord) {
  auto G = buchberger(I, ord);
  return find_weight(order_comparisons(G));
}

ComparisonSet generator_comparisons(const SubalgebraGens& F, const OrderSpec& ord) {
  ComparisonSet C(F.ring->nvars());
  for (const auto& f : F.gens) {
    Monomial lead = leading_monomial(f, ord);
    for (const auto& t : f.terms())
      if (t.mono != lead) C.add(lead, t.mono);
  }
  return C;
}

WeightVector represent_sagbi_by_weight(const SubalgebraGens& F, const OrderSpec& ord) {
  if (!sagbi_test(F, ord).passed)
    throw InvalidArgument("generators are not a Sagbi basis for this order");
  return find_weight(generator_comparisons(F, ord));
}

}  // namespace inalg
