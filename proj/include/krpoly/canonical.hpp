// Canonical combinatorial types, similarity of metric spaces, and
// automorphisms.
//
// For a polytope the vertex-facet incidence determines the whole face
// lattice, so canonizing the incidence canonizes the lattice: the lattice
// is the intersection-closure of the facet vertex sets, a construction that
// commutes with any relabeling of vertices and facets. The tests cross-check
// this by rebuilding the lattice from the canonical incidence.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "krpoly/metric.hpp"
#include "krpoly/polytope.hpp"

namespace krpoly {

struct CombinatorialType {
    /// "v1:<num_vertices>:<num_facets>:" + row-major bits of the canonical
    /// incidence, hex-encoded (first bit = most significant bit of the first
    /// digit, zero-padded at the end).
    std::string certificate;
    std::size_t num_vertices = 0;
    std::size_t num_facets = 0;
    /// Number of (vertex permutation, facet permutation) pairs preserving
    /// the incidence.
    std::uint64_t automorphism_order = 0;

    bool operator==(const CombinatorialType&) const = default;
};

/// Canonical form of the incidence bipartite graph with the two color
/// classes (vertices, facets) fixed: the lexicographically minimal row-major
/// bit matrix over all (row, column) permutation pairs. Two incidences give
/// equal certificates iff they differ by such a pair.
CombinatorialType canonical_certificate(const IncidenceMatrix& incidence);

/// Short registry key: 64-bit FNV-1a of the certificate, 16 hex digits.
/// Collisions are harmless in this library because every lookup compares
/// the full certificate on digest match.
std::string certificate_digest(const std::string& certificate);

/// Full pipeline: metric -> polytope -> incidence -> certificate.
CombinatorialType combinatorial_type_of(const DistanceMatrix& dm);

/// Same combinatorial structure, i.e. equal canonical certificates of the
/// fundamental polytopes. Both inputs must be valid metrics.
bool is_similar(const DistanceMatrix& a, const DistanceMatrix& b);

/// All point permutations preserving the distance matrix, each verified to
/// map the polytope's vertex set onto itself and its facet set onto itself
/// (hence to preserve the incidence). Identity included.
std::vector<std::vector<int>> isometry_induced_automorphisms(const DistanceMatrix& dm);

}  // namespace krpoly
