#include "krpoly/hull.hpp"

#include <stdexcept>

#include "krpoly/simplex_lp.hpp"

namespace krpoly {

namespace {

// Convex-combination system: columns are the points plus optionally a step
// column -dir; rows are the ambient coordinates plus the weight-sum row.
RatMatrix combination_matrix(const std::vector<RatVector>& points, const RatVector* dir) {
    const std::size_t dim = points.empty() ? 0 : points[0].size();
    const std::size_t k = points.size() + (dir ? 1 : 0);
    RatMatrix a(dim + 1, k);
    for (std::size_t j = 0; j < points.size(); ++j) {
        if (points[j].size() != dim)
            throw std::invalid_argument("hull query: ragged point list");
        for (std::size_t i = 0; i < dim; ++i) a.at(i, j) = points[j][i];
        a.at(dim, j) = 1;
    }
    if (dir) {
        for (std::size_t i = 0; i < dim; ++i) a.at(i, points.size()) = -(*dir)[i];
        a.at(dim, points.size()) = 0;
    }
    return a;
}

RatVector combination_rhs(const RatVector& p) {
    RatVector b(p.begin(), p.end());
    b.push_back(Rational(1));
    return b;
}

}  // namespace

bool hull_contains(const std::vector<RatVector>& points, const RatVector& p) {
    if (points.empty()) return false;
    if (points[0].size() != p.size())
        throw std::invalid_argument("hull query: dimension mismatch");
    const RatVector zero(points.size(), Rational(0));
    const auto res = solve_lp(zero, combination_matrix(points, nullptr), combination_rhs(p));
    return res.status == LPStatus::Optimal;
}

Rational max_step_inside(const std::vector<RatVector>& points, const RatVector& p,
                         const RatVector& dir) {
    if (points.empty()) return Rational(-1);
    if (points[0].size() != p.size() || dir.size() != p.size())
        throw std::invalid_argument("hull query: dimension mismatch");
    RatVector objective(points.size() + 1, Rational(0));
    objective.back() = -1;  // maximize the step
    const auto res = solve_lp(objective, combination_matrix(points, &dir), combination_rhs(p));
    if (res.status == LPStatus::Infeasible) return Rational(-1);
    if (res.status == LPStatus::Unbounded)
        throw std::logic_error("max_step_inside: unbounded step in a compact hull");
    return -res.value;
}

bool hull_interior(const std::vector<RatVector>& points, const RatVector& p,
                   const std::vector<RatVector>& dirs) {
    if (!hull_contains(points, p)) return false;
    for (const auto& dir : dirs) {
        if (max_step_inside(points, p, dir) <= 0) return false;
    }
    return true;
}

std::vector<RatVector> sum_zero_directions(int n) {
    std::vector<RatVector> dirs;
    RatVector total(n, Rational(0));
    for (int k = 0; k + 1 < n; ++k) {
        RatVector d(n, Rational(0));
        d[k] = 1;
        d[n - 1] = -1;
        for (int i = 0; i < n; ++i) total[i] += d[i];
        dirs.push_back(std::move(d));
    }
    for (auto& x : total) x = -x;
    dirs.push_back(std::move(total));
    return dirs;
}

}  // namespace krpoly
