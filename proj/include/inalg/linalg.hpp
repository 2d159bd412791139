#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "inalg/polynomial.hpp"

namespace inalg::linalg {

/// (column, value) pairs, strictly increasing columns, no zero values.
using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

/// Rank over the rationals by sparse Gaussian elimination.
std::size_t rank(std::vector<SparseRow> rows);

}  // namespace inalg::linalg
