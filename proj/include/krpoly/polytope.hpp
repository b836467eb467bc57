// The fundamental polytope pipeline: generator points -> extreme points ->
// facet inequalities -> vertex-facet incidence -> face lattice -> f-vector.
//
// Everything lives in the sum-zero hyperplane of R^n and is computed with
// exact rationals. Facets are normalized to (normal . x <= 1) with the
// normal itself sum-zero, which is canonical because the origin is interior
// and functionals on the hyperplane have a unique sum-zero representative.

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "krpoly/metric.hpp"
#include "krpoly/rational.hpp"

namespace krpoly {

// Vertex masks use one bit per vertex, which caps polytopes at 64 vertices;
// that is n <= 8 points, the documented ceiling of this library.
inline constexpr std::size_t kMaxVertices = 64;

struct VRepresentation {
    int ambient_dim = 0;  // n; the polytope spans the sum-zero hyperplane
    std::vector<LabeledPoint> points;
    std::vector<bool> is_vertex;

    std::size_t vertex_count() const;
    /// Coordinates of the extreme points only, in point order.
    std::vector<RatVector> vertex_coords() const;
};

struct HRepresentation {
    int ambient_dim = 0;
    std::vector<RatVector> facets;  // sum-zero normals, inequality normal.x <= 1
};

struct IncidenceMatrix {
    std::size_t num_vertices = 0;
    std::size_t num_facets = 0;
    std::vector<std::vector<char>> on;  // on[v][f] = 1 iff facet f is tight at vertex v

    bool at(std::size_t v, std::size_t f) const { return on[v][f] != 0; }
};

struct Face {
    std::uint64_t vertex_mask = 0;
    int dim = 0;  // -1 for the empty face
};

struct FaceLattice {
    std::vector<Face> faces;  // includes empty face and the whole polytope
    int dim = 0;              // dimension of the polytope
};

struct FVector {
    std::vector<std::size_t> counts;  // f_0 .. f_{d-1}

    std::string to_string() const;  // "(12,24,14)"
    bool operator==(const FVector&) const = default;
};

/// Convex hull of the labeled generator points with exact extremality flags
/// (a point is extreme iff it is not a convex combination of the others).
VRepresentation build_fundamental_polytope(const DistanceMatrix& dm);

/// Complete irredundant facet list via the double description method run on
/// the polar: the facet normals of P are the vertices of {a : a.p <= 1 for
/// all points p}, which are enumerated by cutting a bounding box with one
/// halfspace at a time. Requires a full-dimensional input with the origin
/// interior; throws std::invalid_argument carrying the affine rank found
/// otherwise. Output is sorted lexicographically by normal.
HRepresentation enumerate_facets(const VRepresentation& vrep);

IncidenceMatrix vertex_facet_incidence(const VRepresentation& vrep, const HRepresentation& hrep);

/// All faces as intersections of facet vertex sets (closure under
/// intersection, plus the empty face and the polytope itself); dimensions
/// from the affine rank of each face's vertices.
FaceLattice build_face_lattice(const VRepresentation& vrep, const IncidenceMatrix& incidence);

FVector f_vector(const FaceLattice& lattice);

/// Number of vertices on each facet, ascending.
std::vector<std::size_t> facet_vertex_counts(const IncidenceMatrix& incidence);

/// The fundamental polytope of the unit metric (convex hull of all
/// indicator differences, the classical root polytope).
VRepresentation root_polytope(int n);

}  // namespace krpoly
