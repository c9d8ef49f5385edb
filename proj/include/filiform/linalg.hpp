#pragma once

#include <vector>

#include "filiform/scalar.hpp"

namespace filiform {

/// Row-reduces `rows` in place over the Gaussian rationals (fraction-free is
/// unnecessary at these sizes; exact division keeps entries canonical) and
/// returns the rank. Rows may have any common length.
int row_reduce(std::vector<std::vector<Scalar>>& rows);

/// Rank of a copy of `rows`.
int rank(std::vector<std::vector<Scalar>> rows);

/// Exact determinant of a square matrix given as rows.
Scalar determinant(std::vector<std::vector<Scalar>> rows);

}  // namespace filiform
