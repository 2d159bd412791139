#pragma once

#include <random>
#include <string>
#include <vector>

#include "inalg/groebner.hpp"
#include "inalg/io.hpp"

namespace inalg::testing {

inline Ring ring_of(std::vector<std::string> names) { return make_ring(std::move(names)); }

inline Polynomial P(const Ring& r, std::string_view s) { return parse_polynomial(s, r); }

inline std::vector<Polynomial> Ps(const Ring& r, std::initializer_list<std::string_view> s) {
  std::vector<Polynomial> out;
  for (auto t : s) out.push_back(parse_polynomial(t, r));
  return out;
}

inline Monomial M(const Ring& r, std::string_view s) { return parse_monomial(s, r); }

inline std::vector<std::string> strings(const std::vector<Polynomial>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(to_string(p));
  return out;
}

/// Random polynomial with small integer coefficients; `homogeneous` forces all
/// terms into degree `deg`.
inline Polynomial random_poly(const Ring& r, std::mt19937_64& rng, int deg, bool homogeneous,
                              int terms = 3) {
  std::size_t n = r->nvars();
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<std::size_t> var(0, n - 1);
  std::uniform_int_distribution<int> dd(0, deg);
  std::vector<Term> ts;
  for (int k = 0; k < terms; ++k) {
    int d = homogeneous ? deg : dd(rng);
    Monomial m(n);
    for (int e = 0; e < d; ++e) m[var(rng)] += 1;
    int c = coef(rng);
    if (c == 0) c = 1;
    ts.push_back({Rational(c), m});
  }
  return Polynomial(r, std::move(ts));
}

}  // namespace inalg::testing
