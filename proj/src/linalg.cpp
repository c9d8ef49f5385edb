#include "filiform/linalg.hpp"

#include "filiform/errors.hpp"

namespace filiform {

int row_reduce(std::vector<std::vector<Scalar>>& rows) {
  if (rows.empty()) return 0;
  std::size_t cols = rows[0].size();
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows.size(); ++col) {
    std::size_t found = pivot_row;
    while (found < rows.size() && rows[found][col].is_zero()) ++found;
    if (found == rows.size()) continue;
    std::swap(rows[pivot_row], rows[found]);
    Scalar lead = inv(rows[pivot_row][col]);
    for (std::size_t c = col; c < cols; ++c) rows[pivot_row][c] *= lead;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == pivot_row || rows[r][col].is_zero()) continue;
      Scalar factor = rows[r][col];
      for (std::size_t c = col; c < cols; ++c)
        rows[r][c] -= factor * rows[pivot_row][c];
    }
    ++pivot_row;
  }
  return static_cast<int>(pivot_row);
}

int rank(std::vector<std::vector<Scalar>> rows) { return row_reduce(rows); }

Scalar determinant(std::vector<std::vector<Scalar>> rows) {
  std::size_t n = rows.size();
  for (const auto& row : rows)
    if (row.size() != n)
      throw DimensionMismatch("determinant of a non-square matrix");
  Scalar det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t found = col;
    while (found < n && rows[found][col].is_zero()) ++found;
    if (found == n) return Scalar(0);
    if (found != col) {
      std::swap(rows[col], rows[found]);
      det = -det;
    }
    det *= rows[col][col];
    Scalar lead = inv(rows[col][col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (rows[r][col].is_zero()) continue;
      Scalar factor = rows[r][col] * lead;
      for (std::size_t c = col; c < n; ++c)
        rows[r][c] -= factor * rows[col][c];
    }
  }
  return det;
}

}  // namespace filiform
