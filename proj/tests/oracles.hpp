// Test-only oracles. Each one is an independent route to a quantity the
// library computes, deliberately sharing no algorithmic code with the
// implementation it checks: determinants are Bareiss instead of plain
// elimination, LPs are settled by enumerating column bases, facets by
// exhaustive supporting-hyperplane search, interiority (in 2D) by edge-line
// checks, and Euclidean embeddability by Cayley-Menger sign conditions.

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "krpoly/metric.hpp"
#include "krpoly/rational.hpp"

namespace oracle {

using krpoly::DistanceMatrix;
using krpoly::Integer;
using krpoly::Rational;
using krpoly::RatMatrix;
using krpoly::RatVector;

// Fraction-free Bareiss determinant.
inline Rational determinant(RatMatrix m) {
    if (m.rows != m.cols) throw std::invalid_argument("determinant: not square");
    const std::size_t n = m.rows;
    if (n == 0) return Rational(1);
    Rational sign = 1;
    Rational prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m.at(swap_row, k) == 0) ++swap_row;
            if (swap_row == n) return Rational(0);
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(swap_row, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

// Unique solution of a full-column-rank consistent system (columns `cols` of
// a), or nullopt. Plain augmented elimination, written for clarity.
inline std::optional<RatVector> solve_columns(const RatMatrix& a, const RatVector& b,
                                              const std::vector<std::size_t>& cols) {
    const std::size_t m = a.rows;
    const std::size_t k = cols.size();
    RatMatrix aug(m, k + 1);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < k; ++j) aug.at(i, j) = a.at(i, cols[j]);
        aug.at(i, k) = b[i];
    }
    std::size_t row = 0;
    std::vector<std::size_t> pivot_of_col(k, m);
    for (std::size_t col = 0; col < k && row < m; ++col) {
        std::size_t sel = row;
        while (sel < m && aug.at(sel, col) == 0) ++sel;
        if (sel == m) return std::nullopt;  // column dependent: no unique solution
        for (std::size_t j = 0; j <= k; ++j) std::swap(aug.at(sel, j), aug.at(row, j));
        const Rational inv = Rational(1) / aug.at(row, col);
        for (std::size_t j = 0; j <= k; ++j) aug.at(row, j) *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == row || aug.at(i, col) == 0) continue;
            const Rational f = aug.at(i, col);
            for (std::size_t j = 0; j <= k; ++j) aug.at(i, j) -= f * aug.at(row, j);
        }
        pivot_of_col[col] = row;
        ++row;
    }
    for (std::size_t i = row; i < m; ++i)
        if (aug.at(i, k) != 0) return std::nullopt;  // inconsistent
    RatVector x(k);
    for (std::size_t col = 0; col < k; ++col) x[col] = aug.at(pivot_of_col[col], k);
    return x;
}

// Minimum of c.x over {Ax = b, x >= 0} by enumerating all independent
// column subsets of size <= m. Sound for deciding feasibility and, when the
// objective is bounded below on the feasible set, for the optimal value.
struct BasisEnumeration {
    bool feasible = false;
    Rational value;
};

inline void enumerate_subsets(std::size_t n, std::size_t k, std::vector<std::size_t>& current,
                              std::size_t start, const std::function<void()>& visit) {
    if (current.size() == k) {
        visit();
        return;
    }
    for (std::size_t i = start; i < n; ++i) {
        current.push_back(i);
        enumerate_subsets(n, k, current, i + 1, visit);
        current.pop_back();
    }
}

inline BasisEnumeration lp_by_basis_enumeration(const RatVector& c, const RatMatrix& a,
                                                const RatVector& b) {
    BasisEnumeration result;
    const std::size_t n = c.size();
    const std::size_t m = a.rows;
    for (std::size_t k = 0; k <= std::min(n, m); ++k) {
        std::vector<std::size_t> cols;
        enumerate_subsets(n, k, cols, 0, [&] {
            const auto x = solve_columns(a, b, cols);
            if (!x) return;
            for (const auto& v : *x)
                if (v < 0) return;
            Rational value = 0;
            for (std::size_t j = 0; j < cols.size(); ++j) value += c[cols[j]] * (*x)[j];
            if (!result.feasible || value < result.value) {
                result.feasible = true;
                result.value = value;
            }
        });
    }
    return result;
}

// All principal minors nonnegative <=> positive semidefinite.
inline bool psd_by_principal_minors(const RatMatrix& s) {
    const std::size_t n = s.rows;
    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << n); ++mask) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < n; ++i)
            if ((mask >> i) & 1) idx.push_back(i);
        RatMatrix sub(idx.size(), idx.size());
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (std::size_t j = 0; j < idx.size(); ++j) sub.at(i, j) = s.at(idx[i], idx[j]);
        if (determinant(std::move(sub)) < 0) return false;
    }
    return true;
}

// Interior test in the plane: p is interior to conv(points) iff the hull is
// two-dimensional and p lies strictly inside every supporting line spanned
// by a pair of points.
inline bool interior_2d(const std::vector<std::array<Rational, 2>>& points,
                        const std::array<Rational, 2>& p) {
    bool full_dim = false;
    for (std::size_t i = 1; i < points.size() && !full_dim; ++i)
        for (std::size_t j = i + 1; j < points.size() && !full_dim; ++j) {
            const Rational cross = (points[i][0] - points[0][0]) * (points[j][1] - points[0][1]) -
                                   (points[i][1] - points[0][1]) * (points[j][0] - points[0][0]);
            full_dim = cross != 0;
        }
    if (!full_dim) return false;

    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (i == j) continue;
            const Rational nx = -(points[j][1] - points[i][1]);
            const Rational ny = points[j][0] - points[i][0];
            if (nx == 0 && ny == 0) continue;
            const Rational level = nx * points[i][0] + ny * points[i][1];
            bool supporting = true;
            for (const auto& r : points) {
                if (nx * r[0] + ny * r[1] > level) {
                    supporting = false;
                    break;
                }
            }
            if (supporting && nx * p[0] + ny * p[1] >= level) return false;
        }
    }
    return true;
}

// Facets of conv(points) in the sum-zero hyperplane by exhaustive search:
// for every (n-1)-subset, solve for the functional that is 1 on the subset,
// keep it if it supports all points and its tight set spans a facet.
// Everything here uses the local solver and determinant only.
inline std::set<RatVector> facets_by_exhaustion(const std::vector<RatVector>& points, int n) {
    const std::size_t d = static_cast<std::size_t>(n - 1);
    std::set<RatVector> facets;

    // chart(p)[k] = p[k] - p[n-1]
    std::vector<RatVector> chart;
    for (const auto& p : points) {
        RatVector r(d);
        for (std::size_t k = 0; k < d; ++k) r[k] = p[k] - p[n - 1];
        chart.push_back(std::move(r));
    }

    std::vector<std::size_t> subset;
    enumerate_subsets(points.size(), d, subset, 0, [&] {
        RatMatrix sys(d, d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) sys.at(i, j) = chart[subset[i]][j];
        RatVector ones(d, Rational(1));
        std::vector<std::size_t> all_cols(d);
        for (std::size_t j = 0; j < d; ++j) all_cols[j] = j;
        const auto c = solve_columns(sys, ones, all_cols);
        if (!c) return;

        std::vector<std::size_t> tight;
        for (std::size_t i = 0; i < points.size(); ++i) {
            Rational acc = 0;
            for (std::size_t k = 0; k < d; ++k) acc += (*c)[k] * chart[i][k];
            if (acc > 1) return;  // not supporting
            if (acc == 1) tight.push_back(i);
        }
        // The tight set must span a (d-1)-dimensional affine set: some
        // d-subset of it has a nonzero "lifted" determinant.
        bool spans = false;
        std::vector<std::size_t> probe;
        enumerate_subsets(tight.size(), d, probe, 0, [&] {
            if (spans) return;
            RatMatrix lifted(d, d);
            for (std::size_t i = 0; i < d; ++i) {
                for (std::size_t j = 0; j + 1 < d; ++j)
                    lifted.at(i, j) = chart[tight[probe[i]]][j] - chart[tight[probe[0]]][j];
                lifted.at(i, d - 1) = 1;
            }
            // rank of differences = d-1 <=> the (d-1)x(d-1) difference block
            // has a nonzero minor; test via determinant of the block with an
            // appended unit column trick only when d >= 2.
            if (d == 1) {
                spans = true;
                return;
            }
            RatMatrix diffs(d - 1, d);
            for (std::size_t i = 1; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j)
                    diffs.at(i - 1, j) = chart[tight[probe[i]]][j] - chart[tight[probe[0]]][j];
            // (d-1) x d: spans iff some (d-1)x(d-1) minor is nonzero
            for (std::size_t drop = 0; drop < d && !spans; ++drop) {
                RatMatrix minor(d - 1, d - 1);
                for (std::size_t i = 0; i < d - 1; ++i) {
                    std::size_t cj = 0;
                    for (std::size_t j = 0; j < d; ++j) {
                        if (j == drop) continue;
                        minor.at(i, cj++) = diffs.at(i, j);
                    }
                }
                if (determinant(std::move(minor)) != 0) spans = true;
            }
        });
        if (!spans) return;

        // Ambient sum-zero normal.
        RatVector normal(n, Rational(0));
        for (std::size_t k = 0; k < d; ++k) {
            normal[k] += (*c)[k];
            normal[n - 1] -= (*c)[k];
        }
        facets.insert(normal);
    });
    return facets;
}

// Cayley-Menger: the metric embeds in some Euclidean space iff for every
// subset of k+1 points the bordered determinant satisfies
// (-1)^(k+1) CM >= 0.
inline Rational cayley_menger_det(const DistanceMatrix& dm, const std::vector<int>& subset) {
    const std::size_t k = subset.size();
    RatMatrix m(k + 1, k + 1);
    for (std::size_t i = 0; i < k + 1; ++i) m.at(0, i) = i == 0 ? 0 : 1;
    for (std::size_t i = 1; i < k + 1; ++i) {
        m.at(i, 0) = 1;
        for (std::size_t j = 1; j < k + 1; ++j) {
            const Rational dij = dm.at(subset[i - 1], subset[j - 1]);
            m.at(i, j) = dij * dij;
        }
    }
    return determinant(std::move(m));
}

inline bool embeddable_by_cayley_menger(const DistanceMatrix& dm) {
    const int n = dm.n;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
        std::vector<int> subset;
        for (int i = 0; i < n; ++i)
            if ((mask >> i) & 1) subset.push_back(i);
        if (subset.size() < 2) continue;
        const int k = static_cast<int>(subset.size()) - 1;
        const Rational cm = cayley_menger_det(dm, subset);
        const Rational signed_cm = (k % 2 == 0) ? -cm : cm;  // (-1)^(k+1) CM
        if (signed_cm < 0) return false;
    }
    return true;
}

// Faces of the fundamental polytope of the unit metric, counted directly:
// the face spanned by {source set S, sink set T} has dimension |S|+|T|-2,
// and distinct disjoint nonempty pairs give distinct faces.
inline std::vector<std::size_t> root_polytope_f_vector(int n) {
    std::vector<std::size_t> f(static_cast<std::size_t>(n - 1), 0);
    for (std::uint64_t s = 1; s < (std::uint64_t(1) << n); ++s) {
        for (std::uint64_t t = 1; t < (std::uint64_t(1) << n); ++t) {
            if (s & t) continue;
            const int size_s = __builtin_popcountll(s);
            const int size_t_ = __builtin_popcountll(t);
            const int dim = size_s + size_t_ - 2;
            if (dim >= 0 && dim < n - 1) ++f[static_cast<std::size_t>(dim)];
        }
    }
    return f;
}

}  // namespace oracle
