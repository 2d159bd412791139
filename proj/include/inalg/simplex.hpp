#pragma once

// Dense two-phase simplex over exact rationals with Bland's rule.

#include <optional>
#include <vector>

#include "inalg/polynomial.hpp"

namespace inalg::lp {

using Matrix = std::vector<std::vector<Rational>>;

enum class Status { Optimal, Infeasible, Unbounded };

struct Result {
  Status status = Status::Infeasible;
  std::vector<Rational> x;
  Rational objective;
};

/// minimize c.x  subject to  A x = b, x >= 0.
Result minimize(const std::vector<Rational>& c, const Matrix& A,
                const std::vector<Rational>& b);

}  // namespace inalg::lp
