// The transportation norm on sum-zero vectors, evaluated two independent
// ways: as the optimal cost of an exact transportation LP between the
// positive and negative parts, and as the Minkowski gauge of the fundamental
// polytope (a plain max of facet functionals once facets are normalized to
// right-hand side 1). For a valid metric the two agree exactly; the test
// suite checks this with exact rational equality.

#pragma once

#include <utility>

#include "krpoly/metric.hpp"
#include "krpoly/polytope.hpp"
#include "krpoly/rational.hpp"

namespace krpoly {

/// Nonnegative n x n plan; row sums are the source marginals, column sums
/// the sink marginals.
struct TransportPlan {
    int n = 0;
    RatVector psi;  // n * n, row-major

    Rational& at(int i, int j) { return psi[std::size_t(i) * n + j]; }
    const Rational& at(int i, int j) const { return psi[std::size_t(i) * n + j]; }
};

/// Split v = u - w with u = max(v, 0) and w = max(-v, 0), both nonnegative
/// with equal total mass. Rejects vectors whose coordinates do not sum to 0.
std::pair<RatVector, RatVector> split_signs(const RatVector& v);

/// Optimal transportation cost between the positive and negative parts of v:
/// min sum d(x,y) psi[x][y] over nonnegative psi with row sums u and column
/// sums w. Requires a valid metric and a sum-zero v.
Rational transport_norm(const DistanceMatrix& dm, const RatVector& v);

/// A plan achieving transport_norm; marginal identities hold exactly.
TransportPlan optimal_plan(const DistanceMatrix& dm, const RatVector& v);

/// Gauge of the fundamental polytope: max over facets of normal . v.
Rational gauge_norm(const HRepresentation& hrep, const RatVector& v);

/// True iff the norm extends the metric tightly: for every pair x != y the
/// transport norm of (indicator x - indicator y) equals d(x,y), and the
/// gauge of every generator point equals 1.
bool extension_check(const DistanceMatrix& dm);

}  // namespace krpoly
