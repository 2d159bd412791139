#include "inalg/linalg.hpp"

#include <unordered_map>

namespace inalg::linalg {

namespace {

// row <- row - c * pivot
void axpy(SparseRow& row, const Rational& c, const SparseRow& pivot) {
  SparseRow out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 0, j = 0;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      out.push_back(std::move(row[i++]));
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      out.emplace_back(pivot[j].first, -c * pivot[j].second);
      ++j;
    } else {
      Rational v = row[i].second - c * pivot[j].second;
      if (v != 0) out.emplace_back(row[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  row = std::move(out);
}

}  // namespace

std::size_t rank(std::vector<SparseRow> rows) {
  std::unordered_map<std::size_t, SparseRow> pivots;
  for (auto& row : rows) {
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) {
        Rational inv = 1 / row.front().second;
        for (auto& [col, v] : row) v *= inv;
        std::size_t col = row.front().first;
        pivots.emplace(col, std::move(row));
        break;
      }
      Rational c = row.front().second;
      axpy(row, c, it->second);
    }
  }
  return pivots.size();
}

}  // namespace inalg::linalg
