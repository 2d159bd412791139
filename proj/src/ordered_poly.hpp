#pragma once

// Internal working representation: terms ascending under a fixed order, so the
// leading term is at the back and reductions are linear merges.

#include <vector>

#include "inalg/order.hpp"
#include "inalg/polynomial.hpp"

namespace inalg::detail {

struct OrderedPoly {
  std::vector<Term> terms;  // ascending

  bool empty() const { return terms.empty(); }
  const Term& lead() const { return terms.back(); }
};

inline OrderedPoly to_ordered(const Polynomial& f, const OrderSpec& ord) {
  OrderedPoly p;
  p.terms = sorted_terms(f, ord);
  std::reverse(p.terms.begin(), p.terms.end());
  return p;
}

inline Polynomial to_polynomial(const OrderedPoly& p, const Ring& ring) {
  return Polynomial(ring, p.terms);
}

inline void make_monic(OrderedPoly& p) {
  if (p.empty()) return;
  Rational inv = 1 / p.lead().coeff;
  for (auto& t : p.terms) t.coeff *= inv;
}

/// p <- p - c * m * g
inline void sub_mul(OrderedPoly& p, const Rational& c, const Monomial& m,
                    const OrderedPoly& g, const OrderSpec& ord) {
  std::vector<Term> out;
  out.reserve(p.terms.size() + g.terms.size());
  std::size_t i = 0, j = 0;
  Monomial gm;
  while (i < p.terms.size() || j < g.terms.size()) {
    if (j < g.terms.size()) gm = g.terms[j].mono * m;
    if (j == g.terms.size()) {
      out.push_back(std::move(p.terms[i++]));
      continue;
    }
    if (i == p.terms.size()) {
      out.push_back({-c * g.terms[j].coeff, gm});
      ++j;
      continue;
    }
    auto cmp = ord.compare(p.terms[i].mono, gm);
    if (cmp < 0) {
      out.push_back(std::move(p.terms[i++]));
    } else if (cmp > 0) {
      out.push_back({-c * g.terms[j].coeff, gm});
      ++j;
    } else {
      Rational s = p.terms[i].coeff - c * g.terms[j].coeff;
      if (s != 0) out.push_back({std::move(s), std::move(p.terms[i].mono)});
      ++i;
      ++j;
    }
  }
  p.terms = std::move(out);
}

}  // namespace inalg::detail
