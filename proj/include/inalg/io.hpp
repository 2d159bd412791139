#pragma once

// Polynomial text grammar: terms joined by `+`/`-`; a term is factors joined
// by `*` where a factor is a rational `p` or `p/q` or `var[^exp]`; the `*`
// between a leading coefficient and a variable may be omitted. Whitespace is
// insignificant.

#include <string>
#include <string_view>

#include "inalg/order.hpp"
#include "inalg/polynomial.hpp"

namespace inalg {

/// Throws ParseError; `line` is reported as-is so callers parsing files can
/// pass their own line number.
Polynomial parse_polynomial(std::string_view text, const Ring& ring,
                            std::size_t line = 0);
Monomial parse_monomial(std::string_view text, const Ring& ring,
                        std::size_t line = 0);

/// Terms in descending canonical (DegLex) order.
std::string to_string(const Polynomial& f);
/// Terms in descending order under `ord`.
std::string to_string(const Polynomial& f, const OrderSpec& ord);
std::string to_string(const Monomial& m, const PolyRing& ring);
std::string to_string(const Rational& q);

}  // namespace inalg
