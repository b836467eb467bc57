// Exact linear algebra: rank, affine rank, and positive-semidefiniteness.

#pragma once

#include <cstddef>
#include <vector>

#include "krpoly/rational.hpp"

namespace krpoly {

/// Rank over the rationals (Gaussian elimination, exact).
std::size_t matrix_rank(RatMatrix m);

/// Dimension of the affine hull of a nonempty list of equal-length vectors:
/// the rank of the differences to the first point. A single point has affine
/// rank 0. Throws std::invalid_argument on an empty or ragged list.
std::size_t affine_rank(const std::vector<RatVector>& points);

/// True iff the symmetric matrix is positive semidefinite. Decided by
/// repeated symmetric elimination on a positive diagonal pivot: a negative
/// diagonal entry refutes; an all-zero diagonal with a nonzero off-diagonal
/// entry refutes; a fully eliminated matrix confirms. Throws
/// std::invalid_argument if the input is not symmetric.
bool psd_check(const RatMatrix& s);

}  // namespace krpoly
