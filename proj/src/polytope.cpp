#include "krpoly/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "krpoly/hull.hpp"
#include "krpoly/linalg.hpp"
#include "krpoly/simplex_lp.hpp"

namespace krpoly {

std::size_t VRepresentation::vertex_count() const {
    std::size_t count = 0;
    for (bool v : is_vertex) count += v ? 1 : 0;
    return count;
}

std::vector<RatVector> VRepresentation::vertex_coords() const {
    std::vector<RatVector> coords;
    for (std::size_t i = 0; i < points.size(); ++i)
        if (is_vertex[i]) coords.push_back(points[i].coords);
    return coords;
}

std::string FVector::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(counts[i]);
    }
    out += ")";
    return out;
}

VRepresentation build_fundamental_polytope(const DistanceMatrix& dm) {
    VRepresentation vrep;
    vrep.ambient_dim = dm.n;
    vrep.points = fundamental_vectors(dm);
    vrep.is_vertex.assign(vrep.points.size(), false);

    std::vector<RatVector> others;
    others.reserve(vrep.points.size() - 1);
    for (std::size_t i = 0; i < vrep.points.size(); ++i) {
        others.clear();
        for (std::size_t j = 0; j < vrep.points.size(); ++j)
            if (j != i) others.push_back(vrep.points[j].coords);
        vrep.is_vertex[i] = !hull_contains(others, vrep.points[i].coords);
    }
    return vrep;
}

namespace {

// --- double description on the polar -------------------------------------
//
// Work in chart coordinates: a = B c with B the basis e_k - e_{n-1} of the
// sum-zero hyperplane. The polar body Q = {c : (B c) . p <= 1 for all
// points p} is bounded with 0 interior exactly when the primal is
// full-dimensional with 0 interior, and its vertex set maps one-to-one onto
// the facet normals of the primal.

struct Constraint {
    RatVector normal;  // in chart coordinates, size d
    Rational rhs;
};

struct DDVertex {
    RatVector c;
    std::vector<int> tight;  // indices into the constraint list, ascending
};

Rational dot(const RatVector& a, const RatVector& b) {
    Rational acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

std::vector<int> tight_set(const std::vector<Constraint>& cons, const RatVector& c) {
    std::vector<int> tight;
    for (std::size_t i = 0; i < cons.size(); ++i)
        if (dot(cons[i].normal, c) == cons[i].rhs) tight.push_back(static_cast<int>(i));
    return tight;
}

// u, v adjacent iff the constraints tight at both cut out a 1-dimensional
// face: rank of their normals must be d-1.
bool adjacent(const std::vector<Constraint>& cons, const DDVertex& u, const DDVertex& v,
              std::size_t d) {
    std::vector<int> common;
    std::set_intersection(u.tight.begin(), u.tight.end(), v.tight.begin(), v.tight.end(),
                          std::back_inserter(common));
    if (common.size() < d - 1) return false;
    RatMatrix m(common.size(), d);
    for (std::size_t i = 0; i < common.size(); ++i)
        for (std::size_t j = 0; j < d; ++j) m.at(i, j) = cons[common[i]].normal[j];
    return matrix_rank(std::move(m)) == d - 1;
}

// Max of c_k over {rows . c <= 1} (sign = +1) or of -c_k (sign = -1),
// solved with the exact simplex on slack form.
Rational polar_extent(const std::vector<RatVector>& rows, std::size_t d, std::size_t k,
                      int sign) {
    const std::size_t m = rows.size();
    RatMatrix a(m, d + m);
    RatVector rhs(m, Rational(1));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < d; ++j) a.at(i, j) = rows[i][j];
        a.at(i, d + i) = 1;
    }
    RatVector objective(d + m, Rational(0));
    objective[k] = -sign;  // minimize -sign * c_k
    std::vector<bool> nonneg(d + m, true);
    for (std::size_t j = 0; j < d; ++j) nonneg[j] = false;
    const auto res = solve_lp(objective, a, rhs, nonneg);
    if (res.status != LPStatus::Optimal)
        throw std::logic_error("enumerate_facets: polar body is unbounded");
    return -res.value;
}

std::vector<DDVertex> box_corners(const std::vector<Constraint>& cons, std::size_t d) {
    std::vector<DDVertex> corners;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << d); ++mask) {
        DDVertex v;
        v.c.resize(d);
        for (std::size_t k = 0; k < d; ++k) {
            const bool high = (mask >> k) & 1;
            // constraint 2k is c_k <= hi, constraint 2k+1 is -c_k <= -lo... see below
            v.c[k] = high ? cons[2 * k].rhs : -cons[2 * k + 1].rhs;
            v.tight.push_back(static_cast<int>(high ? 2 * k : 2 * k + 1));
        }
        std::sort(v.tight.begin(), v.tight.end());
        corners.push_back(std::move(v));
    }
    return corners;
}

}  // namespace

HRepresentation enumerate_facets(const VRepresentation& vrep) {
    const int n = vrep.ambient_dim;
    const std::size_t d = static_cast<std::size_t>(n - 1);
    if (vrep.points.empty()) throw std::invalid_argument("enumerate_facets: no points");

    std::vector<RatVector> coords;
    coords.reserve(vrep.points.size());
    for (const auto& p : vrep.points) coords.push_back(p.coords);

    const std::size_t rank = affine_rank(coords);
    if (rank != d)
        throw std::invalid_argument("enumerate_facets: point set is not full-dimensional "
                                    "(affine rank " + std::to_string(rank) + ", need " +
                                    std::to_string(d) + ")");

    // Origin must be interior. A negation-closed point set of full rank has
    // that for free; anything else gets the explicit LP test.
    bool negation_closed = true;
    {
        std::set<RatVector> coord_set(coords.begin(), coords.end());
        for (const auto& c : coords) {
            RatVector neg(c.size());
            for (std::size_t i = 0; i < c.size(); ++i) neg[i] = -c[i];
            if (!coord_set.count(neg)) {
                negation_closed = false;
                break;
            }
        }
    }
    if (!negation_closed) {
        const RatVector origin(n, Rational(0));
        if (!hull_interior(coords, origin, sum_zero_directions(n)))
            throw std::invalid_argument("enumerate_facets: origin is not interior");
    }

    // Chart rows: row_i[k] = p_i . (e_k - e_{n-1}).
    std::vector<RatVector> rows;
    rows.reserve(coords.size());
    for (const auto& p : coords) {
        RatVector r(d);
        for (std::size_t k = 0; k < d; ++k) r[k] = p[k] - p[n - 1];
        rows.push_back(std::move(r));
    }

    // Bounding box strictly containing Q, so box facets never survive.
    std::vector<Constraint> cons;
    for (std::size_t k = 0; k < d; ++k) {
        const Rational hi = polar_extent(rows, d, k, +1) + 1;
        const Rational lo = polar_extent(rows, d, k, -1) + 1;  // max of -c_k
        RatVector up(d, Rational(0)), down(d, Rational(0));
        up[k] = 1;
        down[k] = -1;
        cons.push_back({up, hi});     // index 2k
        cons.push_back({down, lo});   // index 2k+1
    }

    std::vector<DDVertex> verts = box_corners(cons, d);

    for (const auto& row : rows) {
        const int new_index = static_cast<int>(cons.size());
        cons.push_back({row, Rational(1)});

        std::vector<Rational> slack(verts.size());
        for (std::size_t i = 0; i < verts.size(); ++i)
            slack[i] = Rational(1) - dot(row, verts[i].c);

        // Cut every edge running from a strictly-inside to a strictly-outside
        // vertex; the crossing point is a vertex of the trimmed polytope.
        std::vector<DDVertex> cut;
        for (std::size_t i = 0; i < verts.size(); ++i) {
            if (slack[i] <= 0) continue;
            for (std::size_t j = 0; j < verts.size(); ++j) {
                if (slack[j] >= 0) continue;
                if (!adjacent(cons, verts[i], verts[j], d)) continue;
                const Rational t = slack[i] / (slack[i] - slack[j]);  // in (0,1)
                DDVertex w;
                w.c.resize(d);
                for (std::size_t k = 0; k < d; ++k)
                    w.c[k] = verts[i].c[k] + t * (verts[j].c[k] - verts[i].c[k]);
                w.tight = tight_set(cons, w.c);
                cut.push_back(std::move(w));
            }
        }

        std::vector<DDVertex> next;
        std::set<RatVector> seen;
        auto keep = [&](DDVertex&& v) {
            if (seen.insert(v.c).second) next.push_back(std::move(v));
        };
        for (std::size_t i = 0; i < verts.size(); ++i) {
            if (slack[i] > 0) {
                keep(std::move(verts[i]));
            } else if (slack[i] == 0) {
                DDVertex v = std::move(verts[i]);
                v.tight.push_back(new_index);  // appended: new_index is largest
                keep(std::move(v));
            }
        }
        for (auto& w : cut) keep(std::move(w));
        verts = std::move(next);
    }

    HRepresentation hrep;
    hrep.ambient_dim = n;
    for (const auto& v : verts) {
        for (int idx : v.tight) {
            if (idx < static_cast<int>(2 * d))
                throw std::logic_error("enumerate_facets: box constraint active at a polar vertex");
        }
        // Map back to a sum-zero ambient normal: a = sum_k c_k (e_k - e_{n-1}).
        RatVector a(n, Rational(0));
        for (std::size_t k = 0; k < d; ++k) {
            a[k] += v.c[k];
            a[n - 1] -= v.c[k];
        }
        hrep.facets.push_back(std::move(a));
    }
    std::sort(hrep.facets.begin(), hrep.facets.end());
    return hrep;
}

IncidenceMatrix vertex_facet_incidence(const VRepresentation& vrep, const HRepresentation& hrep) {
    if (vrep.ambient_dim != hrep.ambient_dim)
        throw std::invalid_argument("vertex_facet_incidence: dimension mismatch");
    const auto verts = vrep.vertex_coords();
    IncidenceMatrix inc;
    inc.num_vertices = verts.size();
    inc.num_facets = hrep.facets.size();
    inc.on.assign(inc.num_vertices, std::vector<char>(inc.num_facets, 0));
    for (std::size_t v = 0; v < verts.size(); ++v) {
        for (std::size_t f = 0; f < hrep.facets.size(); ++f) {
            Rational acc = 0;
            for (int i = 0; i < vrep.ambient_dim; ++i) acc += hrep.facets[f][i] * verts[v][i];
            if (acc > 1)
                throw std::logic_error("vertex_facet_incidence: vertex outside a facet halfspace");
            inc.on[v][f] = (acc == 1) ? 1 : 0;
        }
    }
    return inc;
}

FaceLattice build_face_lattice(const VRepresentation& vrep, const IncidenceMatrix& incidence) {
    const auto verts = vrep.vertex_coords();
    const std::size_t nv = verts.size();
    if (nv > kMaxVertices)
        throw std::invalid_argument("build_face_lattice: more than 64 vertices");

    std::vector<std::uint64_t> facet_masks(incidence.num_facets, 0);
    for (std::size_t f = 0; f < incidence.num_facets; ++f)
        for (std::size_t v = 0; v < nv; ++v)
            if (incidence.at(v, f)) facet_masks[f] |= std::uint64_t(1) << v;

    const std::uint64_t full =
        (nv == 64) ? ~std::uint64_t(0) : ((std::uint64_t(1) << nv) - 1);

    // Closure under intersection, seeded by the facets.
    std::set<std::uint64_t> masks(facet_masks.begin(), facet_masks.end());
    std::vector<std::uint64_t> queue(masks.begin(), masks.end());
    while (!queue.empty()) {
        const std::uint64_t m = queue.back();
        queue.pop_back();
        for (const std::uint64_t f : facet_masks) {
            const std::uint64_t meet = m & f;
            if (masks.insert(meet).second) queue.push_back(meet);
        }
    }
    masks.insert(full);
    masks.insert(0);

    FaceLattice lattice;
    std::vector<RatVector> members;
    for (const std::uint64_t mask : masks) {
        Face face;
        face.vertex_mask = mask;
        if (mask == 0) {
            face.dim = -1;
        } else {
            members.clear();
            for (std::size_t v = 0; v < nv; ++v)
                if ((mask >> v) & 1) members.push_back(verts[v]);
            face.dim = static_cast<int>(affine_rank(members));
        }
        lattice.faces.push_back(face);
    }
    lattice.dim = vrep.ambient_dim - 1;
    std::sort(lattice.faces.begin(), lattice.faces.end(), [](const Face& a, const Face& b) {
        return a.dim != b.dim ? a.dim < b.dim : a.vertex_mask < b.vertex_mask;
    });
    return lattice;
}

FVector f_vector(const FaceLattice& lattice) {
    FVector fv;
    fv.counts.assign(static_cast<std::size_t>(lattice.dim), 0);
    for (const Face& face : lattice.faces) {
        if (face.dim < 0 || face.dim >= lattice.dim) continue;  // empty face / whole polytope
        ++fv.counts[static_cast<std::size_t>(face.dim)];
    }
    return fv;
}

std::vector<std::size_t> facet_vertex_counts(const IncidenceMatrix& incidence) {
    std::vector<std::size_t> counts(incidence.num_facets, 0);
    for (std::size_t f = 0; f < incidence.num_facets; ++f)
        for (std::size_t v = 0; v < incidence.num_vertices; ++v)
            if (incidence.at(v, f)) ++counts[f];
    std::sort(counts.begin(), counts.end());
    return counts;
}

VRepresentation root_polytope(int n) {
    return build_fundamental_polytope(unit_metric(n));
}

}  // namespace krpoly
