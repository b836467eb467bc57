#include "krpoly/kr_norm.hpp"

#include <stdexcept>

#include "krpoly/simplex_lp.hpp"

namespace krpoly {

std::pair<RatVector, RatVector> split_signs(const RatVector& v) {
    Rational total = 0;
    for (const auto& x : v) total += x;
    if (total != 0) throw std::invalid_argument("split_signs: coordinates must sum to 0");
    RatVector u(v.size()), w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        u[i] = v[i] > 0 ? v[i] : Rational(0);
        w[i] = v[i] < 0 ? -v[i] : Rational(0);
    }
    return {u, w};
}

namespace {

LPResult solve_transport(const DistanceMatrix& dm, const RatVector& v) {
    if (!validate_metric(dm).is_valid)
        throw std::invalid_argument("transport_norm: input is not a metric");
    if (static_cast<int>(v.size()) != dm.n)
        throw std::invalid_argument("transport_norm: vector length mismatch");
    const auto [u, w] = split_signs(v);

    const int n = dm.n;
    const std::size_t vars = std::size_t(n) * n;  // psi[x][y] at x*n + y
    RatVector objective(vars);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) objective[std::size_t(x) * n + y] = dm.at(x, y);

    RatMatrix constraints(2 * n, vars);
    RatVector rhs(2 * n);
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) constraints.at(x, std::size_t(x) * n + y) = 1;
        rhs[x] = u[x];
    }
    for (int y = 0; y < n; ++y) {
        for (int x = 0; x < n; ++x) constraints.at(n + y, std::size_t(x) * n + y) = 1;
        rhs[n + y] = w[y];
    }

    const auto res = solve_lp(objective, constraints, rhs);
    if (res.status != LPStatus::Optimal)
        throw std::logic_error("transport_norm: balanced transportation LP must be solvable");
    return res;
}

}  // namespace

Rational transport_norm(const DistanceMatrix& dm, const RatVector& v) {
    return solve_transport(dm, v).value;
}

TransportPlan optimal_plan(const DistanceMatrix& dm, const RatVector& v) {
    const auto res = solve_transport(dm, v);
    TransportPlan plan;
    plan.n = dm.n;
    plan.psi = res.solution;
    // Marginals hold exactly; solve_lp re-substitutes, but the plan is a
    // user-facing artifact so check its defining identities here too.
    const auto [u, w] = split_signs(v);
    for (int x = 0; x < dm.n; ++x) {
        Rational row = 0, col = 0;
        for (int y = 0; y < dm.n; ++y) {
            row += plan.at(x, y);
            col += plan.at(y, x);
            if (plan.at(x, y) < 0) throw std::logic_error("optimal_plan: negative mass");
        }
        if (row != u[x] || col != w[x]) throw std::logic_error("optimal_plan: marginal mismatch");
    }
    return plan;
}

Rational gauge_norm(const HRepresentation& hrep, const RatVector& v) {
    if (hrep.facets.empty()) throw std::invalid_argument("gauge_norm: empty facet list");
    if (hrep.facets[0].size() != v.size())
        throw std::invalid_argument("gauge_norm: dimension mismatch");
    Rational total = 0;
    for (const auto& x : v) total += x;
    if (total != 0) throw std::invalid_argument("gauge_norm: coordinates must sum to 0");

    Rational best = 0;  // the facet set is closed under negation, so max >= 0
    for (const auto& normal : hrep.facets) {
        Rational acc = 0;
        for (std::size_t i = 0; i < v.size(); ++i) acc += normal[i] * v[i];
        if (acc > best) best = acc;
    }
    return best;
}

bool extension_check(const DistanceMatrix& dm) {
    if (!validate_metric(dm).is_valid)
        throw std::invalid_argument("extension_check: input is not a metric");
    const auto hrep = enumerate_facets(build_fundamental_polytope(dm));
    for (int x = 0; x < dm.n; ++x) {
        for (int y = 0; y < dm.n; ++y) {
            if (x == y) continue;
            RatVector v(dm.n, Rational(0));
            v[x] = 1;
            v[y] = -1;
            if (transport_norm(dm, v) != dm.at(x, y)) return false;
            RatVector generator(dm.n, Rational(0));
            generator[x] = Rational(1) / dm.at(x, y);
            generator[y] = -generator[x];
            if (gauge_norm(hrep, generator) != 1) return false;
        }
    }
    return true;
}

}  // namespace krpoly
