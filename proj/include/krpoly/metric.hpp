// Finite metric spaces: representation, parsing, validation, sampling, and
// the scaled point set that generates the fundamental polytope.

#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "krpoly/rational.hpp"

namespace krpoly {

/// Symmetric n x n matrix of exact rational distances, zero diagonal.
/// The triangle inequality is validated, never assumed: non-metric matrices
/// are representable on purpose (the extremality test below takes them).
struct DistanceMatrix {
    int n = 0;
    RatVector d;  // n * n, row-major

    DistanceMatrix() = default;
    explicit DistanceMatrix(int points) : n(points), d(std::size_t(points) * points) {}

    Rational& at(int i, int j) { return d[std::size_t(i) * n + j]; }
    const Rational& at(int i, int j) const { return d[std::size_t(i) * n + j]; }

    bool operator==(const DistanceMatrix& other) const = default;
};

enum class ViolationKind { Asymmetry, NonzeroDiagonal, Nonpositive, Triangle };

struct Violation {
    ViolationKind kind;
    std::array<int, 3> witness;  // indices; triangle uses all three (i,j via k)
    int witness_size;
};

struct MetricReport {
    bool is_valid = false;
    std::vector<Violation> violations;
};

/// All distances 1 between distinct points.
DistanceMatrix unit_metric(int n);

/// Parses either the whitespace matrix format ('#' lines ignored, one row
/// per line, entries "p/q") or a JSON object {"n": int, "d": [[...]]} with
/// rationals as strings. Symmetry and the zero diagonal are enforced here;
/// violations are parse errors carrying the offending row/column.
DistanceMatrix parse_distance_matrix(std::string_view text);

/// Exhaustive check of the metric axioms, every violation witnessed.
MetricReport validate_metric(const DistanceMatrix& dm);

bool is_symmetric_positive(const DistanceMatrix& dm);

/// One generator point of the fundamental polytope: the difference of the
/// indicator vectors of `from` and `to`, scaled by 1/d(from,to). The
/// mean-centered basepoint embeddings of the two points differ from plain
/// indicators by the same multiple of the all-ones vector, so that offset
/// cancels in the difference and the coordinates always sum to zero.
struct LabeledPoint {
    int from = 0;
    int to = 0;
    RatVector coords;  // length n, sum 0
};

/// The n(n-1) labeled points, lexicographic in (from, to). Requires
/// symmetry, zero diagonal and positive off-diagonal entries; the triangle
/// inequality is deliberately not required.
std::vector<LabeledPoint> fundamental_vectors(const DistanceMatrix& dm);

/// Decides the metric property geometrically: true iff no generator point
/// lies in the interior of the convex hull of the others (interior taken in
/// the sum-zero hyperplane). Exact, by linear programming: a point interior
/// to the hull can be moved a positive step along each direction of a fixed
/// positively-spanning set while staying inside; a boundary or exterior
/// point cannot. Agrees with validate_metric on every symmetric positive
/// input (tested against a brute-force hull oracle).
bool extremality_metric_test(const DistanceMatrix& dm);

/// Schoenberg's criterion: the metric embeds isometrically in some Euclidean
/// space iff the Gram-type matrix G[i][j] = (d(0,i)^2 + d(0,j)^2 -
/// d(i,j)^2)/2 over i,j >= 1 is positive semidefinite. Requires a valid
/// metric.
bool euclidean_type_test(const DistanceMatrix& dm);

enum class SamplerMode { Closure, Euclidean };

SamplerMode sampler_mode_from_string(std::string_view name);
std::string to_string(SamplerMode mode);

/// Deterministic pseudo-random stream. mt19937_64 is fully specified by the
/// standard and the bounded sampler below avoids the implementation-defined
/// std::uniform_int_distribution, so identical seeds give identical output
/// on every platform.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    /// Uniform integer in [lo, hi], unbiased via fixed-width rejection.
    std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);

  private:
    std::mt19937_64 eng_;
};

/// Stream-splitting hash (splitmix64) for deriving per-sample seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

/// Random metric, deterministic for fixed arguments.
///
/// Closure mode draws i.i.d. uniform rationals p/q in (0,1] with q <=
/// denominator_bound for every unordered pair, then applies the all-pairs
/// shortest-path closure, which lands exactly in the metric cone. The
/// closure biases toward tight triangles; callers that need strict ones
/// resample (see the census module).
///
/// Euclidean mode draws n random rational points in the (n-1)-cube and uses
/// their l1 distances, which are exactly rational and always a metric;
/// coinciding points are redrawn.
DistanceMatrix random_metric(int n, std::uint64_t seed, std::uint64_t denominator_bound,
                             SamplerMode mode);

/// Relabel points: result(i,j) = d(perm[i], perm[j]).
DistanceMatrix apply_permutation(const DistanceMatrix& dm, const std::vector<int>& perm);

/// Scale every distance by a positive rational factor.
DistanceMatrix scale_metric(const DistanceMatrix& dm, const Rational& factor);

}  // namespace krpoly
