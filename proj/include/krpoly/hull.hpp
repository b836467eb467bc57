// Exact convex-hull point queries, answered by linear programming.

#pragma once

#include <vector>

#include "krpoly/rational.hpp"

namespace krpoly {

/// Is p a convex combination of the given points? Exact LP feasibility.
bool hull_contains(const std::vector<RatVector>& points, const RatVector& p);

/// Largest t >= 0 with p + t*dir still in the hull; negative return means
/// p itself is outside (the program is infeasible). The hull is compact, so
/// the program is never unbounded.
Rational max_step_inside(const std::vector<RatVector>& points, const RatVector& p,
                         const RatVector& dir);

/// Is p in the interior of the hull, relative to the subspace positively
/// spanned by `dirs`? True iff p is in the hull and admits a strictly
/// positive step along every direction. With a positively spanning
/// direction set this is exactly topological interiority in that subspace:
/// a supporting functional at a boundary point is positive on at least one
/// direction and blocks it.
bool hull_interior(const std::vector<RatVector>& points, const RatVector& p,
                   const std::vector<RatVector>& dirs);

/// d+1 directions positively spanning the sum-zero hyperplane of R^n:
/// the chart basis e_k - e_{n-1} plus the negative of their total.
std::vector<RatVector> sum_zero_directions(int n);

}  // namespace krpoly
