#pragma once

// Line-oriented problem files:
//
//   # comment
//   ring x, y, z
//   order lex                  (optional, default revlex)
//   weight a 3,2,1             (optional; `weight 3,2,1` means a)
//   weight b 1,1,1             (optional grading)
//   ideal                      (or `algebra`, or `pairs` with lines `m > n`)
//     x^2 - y,
//     x*y - z
//   end
//   cap 6                      (optional parameters: cap, dmax, jmax,
//                               fiber, freeness-bound)
//
// A block may instead list its entries on the keyword line, comma separated,
// in which case no `end` follows.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "inalg/order.hpp"
#include "inalg/polynomial.hpp"

namespace inalg {

enum class BlockKind { Ideal, Algebra, Pairs };

struct ProblemFile {
  Ring ring;
  std::optional<OrderSpec> order;
  std::optional<WeightVector> weight_a;
  std::optional<WeightVector> weight_b;
  BlockKind kind = BlockKind::Ideal;
  /// Sorted canonically, so the order of input lines never matters.
  std::vector<Polynomial> gens;
  std::vector<std::pair<Monomial, Monomial>> pairs;
  std::optional<std::int64_t> cap, dmax, jmax, freeness_bound;
  std::optional<Rational> fiber;

  OrderSpec order_or_default() const;
};

/// Throws ParseError with 1-based line and column.
ProblemFile parse_problem(std::string_view text);

/// Parses `3,2,1` (spaces allowed) into a positive weight.
WeightVector parse_weight(std::string_view text, std::size_t line = 0, std::size_t column = 1);
Rational parse_rational(std::string_view text, std::size_t line = 0, std::size_t column = 1);

std::string block_keyword(BlockKind k);

/// `ring ...` and `order ...` header lines.
std::string ring_header(const PolyRing& ring, const OrderSpec& ord);

}  // namespace inalg
