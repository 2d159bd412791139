#pragma once

// Monomial orders: Lex, DegLex, RevLex over a variable permutation, weight
// refinements, and the extension to the homogenized ring R[t].

#include <compare>
#include <memory>
#include <string>
#include <vector>

#include "inalg/polynomial.hpp"

namespace inalg {

class OrderSpec {
 public:
  enum class Kind { Lex, DegLex, RevLex, WeightRefined, ExtendedToT, Block };

  /// `priority` lists variable indices from largest to smallest; empty means
  /// the natural order X_1 > ... > X_n.
  static OrderSpec lex(std::size_t n, std::vector<std::size_t> priority = {});
  static OrderSpec deglex(std::size_t n, std::vector<std::size_t> priority = {});
  static OrderSpec revlex(std::size_t n, std::vector<std::size_t> priority = {});
  /// a-degree first, then `base`.
  static OrderSpec weight_refined(WeightVector a, OrderSpec base);
  /// On R[t]: a'-degree first, then the smaller t-exponent wins, then `base`
  /// on the R-part.
  static OrderSpec extended_to_t(WeightVector a, OrderSpec base);
  /// Elimination order: monomials are compared by DegLex on the variables
  /// in `eliminate` first, then by `kept` on the remaining ones.
  static OrderSpec block(std::vector<bool> eliminate, OrderSpec kept);

  Kind kind() const { return kind_; }
  /// Number of exponents this order reads (n + 1 for ExtendedToT).
  std::size_t arity() const;
  const std::vector<std::size_t>& priority() const { return priority_; }
  const WeightVector& weight() const { return weight_; }
  const OrderSpec& base() const { return *base_; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const {
    return compare(a, b) > 0;
  }

  /// Text form accepted by parse_order (Block prints as `block(...)` and does
  /// not round-trip).
  std::string to_string(const PolyRing& ring) const;

  bool operator==(const OrderSpec& other) const;

 private:
  std::strong_ordering compare_span(std::span<const Exponent> a,
                                    std::span<const Exponent> b) const;

  Kind kind_ = Kind::DegLex;
  std::vector<std::size_t> priority_;
  WeightVector weight_;
  std::vector<bool> eliminate_;
  std::shared_ptr<const OrderSpec> base_;
};

/// Term of f with the largest monomial under `ord`.
Term leading_term(const Polynomial& f, const OrderSpec& ord);
Monomial leading_monomial(const Polynomial& f, const OrderSpec& ord);
/// Terms of f sorted strictly descending under `ord`.
std::vector<Term> sorted_terms(const Polynomial& f, const OrderSpec& ord);

/// Parses `lex`, `deglex`, `revlex`, `lex(y,x,z)`, `weight(3,2,1; lex)`.
OrderSpec parse_order(std::string_view text, const PolyRing& ring);

}  // namespace inalg
