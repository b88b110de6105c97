#pragma once

#include "bellcone/rational.hpp"

#include <cstddef>
#include <vector>

namespace bellcone {

using Matrix = std::vector<Vector>;
using IntegerMatrix = std::vector<std::vector<Integer>>;

/// Scales a rational vector by the lcm of its denominators.
std::vector<Integer> to_integer_row(const Vector& row);

/// Rank by fraction-free (Bareiss) elimination. The argument is consumed.
std::size_t bareiss_rank(IntegerMatrix rows);
std::size_t rank(const Matrix& rows);

/// Indices of a maximal linearly independent subset, chosen greedily in order.
std::vector<std::size_t> independent_rows(const Matrix& rows, std::size_t dim);

/// Basis of { x : row . x = 0 for every row }, each vector ray-normalized.
Matrix nullspace(const Matrix& rows, std::size_t dim);

/// Inverse of a square nonsingular matrix; throws std::domain_error if singular.
Matrix inverse(const Matrix& m);

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m, std::size_t dim);

}  // namespace bellcone
