// Exact linear programming over the rationals.
//
// Minimizes objective . x subject to eq_matrix x = eq_rhs, with per-variable
// nonnegativity flags (a variable flagged false is free). Two-phase simplex
// with Bland's pivoting rule: termination is guaranteed without any
// perturbation, and a reported optimum is exactly feasible and exactly
// optimal. There is no tolerance anywhere.

#pragma once

#include <vector>

#include "krpoly/rational.hpp"

namespace krpoly {

enum class LPStatus { Optimal, Infeasible, Unbounded };

struct LPResult {
    LPStatus status = LPStatus::Infeasible;
    Rational value;       // meaningful iff status == Optimal
    RatVector solution;   // meaningful iff status == Optimal
};

LPResult solve_lp(const RatVector& objective,
                  const RatMatrix& eq_matrix,
                  const RatVector& eq_rhs,
                  const std::vector<bool>& nonneg);

/// Shorthand for an all-nonnegative variable set.
LPResult solve_lp(const RatVector& objective,
                  const RatMatrix& eq_matrix,
                  const RatVector& eq_rhs);

}  // namespace krpoly
