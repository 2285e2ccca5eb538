#pragma once

#include <optional>
#include <vector>

#include "motocell/numeric.hpp"

namespace motocell {

using RatVec = std::vector<Rational>;
using RatMatrix = std::vector<RatVec>;

// Reduced row echelon form in place; returns the pivot columns.  Zero
// rows are moved to the bottom and removed.
inline std::vector<int> rref(RatMatrix& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const int cols = static_cast<int>(m[0].size());
  int row = 0;
  for (int col = 0; col < cols && row < static_cast<int>(m.size()); ++col) {
    int pivot_row = -1;
    for (int r = row; r < static_cast<int>(m.size()); ++r) {
      if (m[r][col] != 0) {
        pivot_row = r;
        break;
      }
    }
    if (pivot_row < 0) continue;
    std::swap(m[row], m[pivot_row]);
    const Rational lead = m[row][col];
    for (int c = col; c < cols; ++c) m[row][c] /= lead;
    for (int r = 0; r < static_cast<int>(m.size()); ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (int c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  m.resize(row);  // drop the zero rows
  return pivots;
}

struct AffineSolution {
  RatVec particular;     // one solution of A x = b
  RatMatrix null_basis;  // basis of the solution space of A x = 0
};

// Exact solution of A x = b (A given by rows); nullopt when inconsistent.
inline std::optional<AffineSolution> solve_linear(const RatMatrix& a,
                                                  const RatVec& b) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());

  RatMatrix aug(rows, RatVec(cols + 1));
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) aug[r][c] = a[r][c];
    aug[r][cols] = b[r];
  }
  std::vector<int> pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;

  AffineSolution sol;
  sol.particular.assign(cols, Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i)
    sol.particular[pivots[i]] = aug[i][cols];

  std::vector<bool> is_pivot(cols, false);
  for (int p : pivots) is_pivot[p] = true;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RatVec v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = -aug[i][free];
    sol.null_basis.push_back(std::move(v));
  }
  return sol;
}

// Basis of {u : M u = 0} for M given by rows.
inline RatMatrix null_space(RatMatrix m) {
  const int cols = m.empty() ? 0 : static_cast<int>(m[0].size());
  if (cols == 0) return {};
  std::optional<AffineSolution> sol = solve_linear(m, RatVec(m.size(), 0));
  return sol ? sol->null_basis : RatMatrix{};
}

}  // namespace motocell
