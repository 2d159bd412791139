#pragma once

// Exact sparse multivariate polynomials over the rationals.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "inalg/errors.hpp"

namespace inalg {

using Integer = mpz_class;
using Rational = mpq_class;
using Exponent = std::int32_t;

/// K[X_1..X_n] over the rationals, optionally extended by a homogenizing
/// variable which is then always the last one.
class PolyRing {
 public:
  explicit PolyRing(std::vector<std::string> names, bool has_homvar = false);

  std::size_t nvars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  bool has_homvar() const { return has_homvar_; }
  /// Index of the homogenizing variable; throws if absent.
  std::size_t homvar() const;
  std::optional<std::size_t> index_of(std::string_view name) const;

  bool operator==(const PolyRing& other) const = default;

 private:
  std::vector<std::string> names_;
  bool has_homvar_;
};

using Ring = std::shared_ptr<const PolyRing>;

Ring make_ring(std::vector<std::string> names);
/// R[t]; the new variable is named `t` unless that clashes, then `t_`, ...
Ring extend_ring(const Ring& base);
/// Drops the homogenizing variable.
Ring base_ring(const Ring& extended);
bool same_ring(const Ring& a, const Ring& b);
void require_same_ring(const Ring& a, const Ring& b);

/// Exponent vector. Arithmetic assumes equal lengths; callers check rings.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> exps);

  static Monomial variable(std::size_t nvars, std::size_t i, Exponent e = 1);

  std::size_t size() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  Exponent& operator[](std::size_t i) { return exps_[i]; }
  std::span<const Exponent> exponents() const { return exps_; }
  const std::vector<Exponent>& vec() const { return exps_; }

  std::int64_t degree() const;
  bool is_one() const;

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  Monomial& operator*=(const Monomial& other);
  /// Exact quotient; requires `divisor.divides(*this)`.
  Monomial operator/(const Monomial& divisor) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  bool operator==(const Monomial& other) const = default;
  /// Plain lexicographic comparison of exponent vectors; only for containers.
  auto operator<=>(const Monomial& other) const = default;

 private:
  std::vector<Exponent> exps_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const;
};

/// Canonical storage order: DegLex with X_1 > ... > X_n.
std::strong_ordering canonical_compare(const Monomial& a, const Monomial& b);

struct Term {
  Rational coeff;
  Monomial mono;

  bool operator==(const Term& other) const = default;
};

/// Strictly positive integer weight. Extended weights end in 1.
class WeightVector {
 public:
  WeightVector() = default;
  explicit WeightVector(std::vector<Integer> entries);
  WeightVector(std::initializer_list<long> entries);

  static WeightVector ones(std::size_t n);

  std::size_t size() const { return entries_.size(); }
  const Integer& operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<Integer>& entries() const { return entries_; }
  /// a' = (a_1..a_n, 1)
  WeightVector extended() const;

  Integer degree(const Monomial& m) const;
  /// Same as degree() but only over the first size() exponents of m.
  Integer degree_prefix(std::span<const Exponent> exps) const;
  /// Fast path when every entry fits in 63 bits.
  bool fits_int64() const { return small_.size() == entries_.size(); }
  const std::vector<std::int64_t>& small() const { return small_; }

  bool operator==(const WeightVector& other) const {
    return entries_ == other.entries_;
  }
  std::string to_string() const;

 private:
  std::vector<Integer> entries_;
  std::vector<std::int64_t> small_;
};

class Polynomial {
 public:
  explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}
  /// Normalizes: combines like terms, drops zeros, sorts canonically.
  Polynomial(Ring ring, std::vector<Term> terms);

  static Polynomial constant(Ring ring, const Rational& c);
  static Polynomial variable(Ring ring, std::size_t i);
  static Polynomial monomial(Ring ring, Monomial m, Rational c = 1);

  const Ring& ring() const { return ring_; }
  /// Terms in strictly descending canonical order.
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }

  /// Maximal total degree; throws ZeroPolynomial.
  std::int64_t total_degree() const;
  /// True iff every term has the same total degree (zero counts as homogeneous).
  bool is_homogeneous() const;
  bool is_homogeneous(const WeightVector& w) const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& g) const;
  Polynomial operator-(const Polynomial& g) const;
  Polynomial operator*(const Polynomial& g) const;
  Polynomial operator*(const Rational& c) const;
  Polynomial mul_term(const Rational& c, const Monomial& m) const;
  Polynomial pow(unsigned e) const;

  /// Divides by the leading coefficient in canonical order; zero stays zero.
  Polynomial canonical_monic() const;

  bool operator==(const Polynomial& g) const;
  /// Total order for sorting generator lists reproducibly.
  std::strong_ordering canonical_compare(const Polynomial& g) const;

  /// Reinterpret in another ring with the same number of variables.
  Polynomial with_ring(Ring ring) const;

 private:
  Polynomial(Ring ring, std::vector<Term> terms, bool already_canonical);

  Ring ring_;
  std::vector<Term> terms_;
};

/// Largest a-degree of a monomial of f.
Integer a_degree(const Polynomial& f, const WeightVector& a);
/// Sum of the terms of maximal a-degree.
Polynomial initial_form(const Polynomial& f, const WeightVector& a);
/// sum c_i m_i t^(a(f) - a(m_i)) in the ring extended by t.
Polynomial homogenize(const Polynomial& f, const WeightVector& a,
                      const Ring& extended);
Polynomial homogenize(const Polynomial& f, const WeightVector& a);
/// Substitutes t = c and returns the result in the base ring.
Polynomial specialize_t(const Polynomial& f, const Rational& c,
                        const Ring& base);
Polynomial specialize_t(const Polynomial& f, const Rational& c);

/// Substitutes X_i -> images[i] (all in one target ring).
Polynomial substitute(const Polynomial& f, std::span<const Polynomial> images,
                      const Ring& target);

}  // namespace inalg
