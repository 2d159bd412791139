#include "inalg/simplex.hpp"

namespace inalg::lp {

namespace {

// Tableau rows 0..m-1 are constraints, each with its rhs in the last column.
class Tableau {
 public:
  Tableau(const Matrix& A, const std::vector<Rational>& b, std::size_t nvars)
      : m_(A.size()), n_(nvars + A.size()), rows_(m_, std::vector<Rational>(n_ + 1)),
        basis_(m_) {
    for (std::size_t i = 0; i < m_; ++i) {
      bool flip = b[i] < 0;
      for (std::size_t j = 0; j < nvars; ++j) rows_[i][j] = flip ? -A[i][j] : A[i][j];
      rows_[i][nvars + i] = 1;  // artificial
      rows_[i][n_] = flip ? -b[i] : b[i];
      basis_[i] = nvars + i;
    }
    first_artificial_ = nvars;
  }

  /// Minimizes cost over the current feasible basis; columns with
  /// allowed[j] == false never enter.
  Status run(const std::vector<Rational>& cost, const std::vector<bool>& allowed) {
    for (;;) {
      // Reduced costs d_j = c_j - c_B B^{-1} A_j; Bland: lowest index with d_j < 0.
      std::size_t enter = n_;
      for (std::size_t j = 0; j < n_ && enter == n_; ++j) {
        if (!allowed[j] || is_basic(j)) continue;
        Rational d = cost[j];
        for (std::size_t i = 0; i < m_; ++i) d -= cost[basis_[i]] * rows_[i][j];
        if (d < 0) enter = j;
      }
      if (enter == n_) return Status::Optimal;
      std::size_t leave = m_;
      Rational best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (rows_[i][enter] <= 0) continue;
        Rational ratio = rows_[i][n_] / rows_[i][enter];
        if (leave == m_ || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          best = ratio;
          leave = i;
        }
      }
      if (leave == m_) return Status::Unbounded;
      pivot(leave, enter);
    }
  }

  /// Drive artificial variables at zero level out of the basis where possible.
  void expel_artificials() {
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < first_artificial_) continue;
      for (std::size_t j = 0; j < first_artificial_; ++j)
        if (rows_[i][j] != 0) {
          pivot(i, j);
          break;
        }
    }
  }

  Rational value(const std::vector<Rational>& cost) const {
    Rational v = 0;
    for (std::size_t i = 0; i < m_; ++i) v += cost[basis_[i]] * rows_[i][n_];
    return v;
  }

  std::vector<Rational> solution(std::size_t nvars) const {
    std::vector<Rational> x(nvars);
    for (std::size_t i = 0; i < m_; ++i)
      if (basis_[i] < nvars) x[basis_[i]] = rows_[i][n_];
    return x;
  }

  std::size_t columns() const { return n_; }
  std::size_t first_artificial() const { return first_artificial_; }

 private:
  bool is_basic(std::size_t j) const {
    for (auto b : basis_)
      if (b == j) return true;
    return false;
  }

  void pivot(std::size_t r, std::size_t c) {
    Rational p = rows_[r][c];
    for (auto& v : rows_[r]) v /= p;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r || rows_[i][c] == 0) continue;
      Rational f = rows_[i][c];
      for (std::size_t j = 0; j <= n_; ++j)
        if (rows_[r][j] != 0) rows_[i][j] -= f * rows_[r][j];
    }
    basis_[r] = c;
  }

  std::size_t m_, n_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> basis_;
  std::size_t first_artificial_ = 0;
};

}  // namespace

Result minimize(const std::vector<Rational>& c, const Matrix& A,
                const std::vector<Rational>& b) {
  std::size_t nvars = c.size();
  if (A.size() != b.size()) throw InvalidArgument("lp: row count mismatch");
  for (const auto& row : A)
    if (row.size() != nvars) throw InvalidArgument("lp: column count mismatch");

  Tableau t(A, b, nvars);
  std::vector<Rational> phase1(t.columns(), 0);
  for (std::size_t j = t.first_artificial(); j < t.columns(); ++j) phase1[j] = 1;
  std::vector<bool> all(t.columns(), true);
  t.run(phase1, all);
  if (t.value(phase1) != 0) return Result{Status::Infeasible, {}, 0};
  t.expel_artificials();

  std::vector<Rational> phase2(t.columns(), 0);
  std::copy(c.begin(), c.end(), phase2.begin());
  std::vector<bool> real(t.columns(), false);
  for (std::size_t j = 0; j < nvars; ++j) real[j] = true;
  if (t.run(phase2, real) == Status::Unbounded) return Result{Status::Unbounded, {}, 0};
  return Result{Status::Optimal, t.solution(nvars), t.value(phase2)};
}

}  // namespace inalg::lp
