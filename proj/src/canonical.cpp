#include "krpoly/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace krpoly {

namespace {

// --- canonical labeling -----------------------------------------------------
//
// The canonical string is min over row orders sigma and column orders tau of
// the row-major bit matrix. For a fixed row order the minimizing column
// order simply sorts the columns as bit vectors read top-down, and the first
// k rows of the result depend only on the first k chosen rows. That gives a
// depth-first search over row prefixes with exact lexicographic pruning:
// maintain the column groups induced by the prefix (columns equal on the
// prefix stay grouped), emit each candidate row's bits group by group
// (zeros before ones), and compare against the best string so far.
//
// Vertex-facet incidences have pairwise distinct rows and pairwise distinct
// columns (a vertex is the intersection of its facets, a facet is its vertex
// set), so every automorphism is determined by its row permutation and the
// number of row orders achieving the canonical string is exactly the
// automorphism count.

struct CanonSearch {
    std::size_t nrows = 0;
    std::size_t ncols = 0;
    const IncidenceMatrix* inc = nullptr;

    std::string best;
    bool best_valid = false;
    std::uint64_t count = 0;

    std::string cur;
    std::vector<int> order;       // rows chosen so far
    std::vector<char> used;
    std::vector<std::vector<int>> groups;

    void run() {
        // Cheap seed ordering: low-degree rows first tend to reach the
        // minimum early, which sharpens pruning. Correctness does not
        // depend on it.
        std::vector<int> candidates(nrows);
        std::iota(candidates.begin(), candidates.end(), 0);
        std::stable_sort(candidates.begin(), candidates.end(), [&](int a, int b) {
            return row_degree(a) < row_degree(b);
        });
        seed_order = candidates;

        groups.assign(1, std::vector<int>(ncols));
        std::iota(groups[0].begin(), groups[0].end(), 0);
        used.assign(nrows, 0);
        cur.clear();
        dfs(/*equal_to_best=*/true);
    }

    std::size_t row_degree(int r) const {
        std::size_t deg = 0;
        for (std::size_t c = 0; c < ncols; ++c) deg += inc->at(r, c) ? 1 : 0;
        return deg;
    }

    std::vector<int> seed_order;

    void dfs(bool equal_to_best) {
        if (order.size() == nrows) {
            if (!best_valid || !equal_to_best) {
                best = cur;
                best_valid = true;
                count = 1;
            } else {
                ++count;  // equal_to_best through every position: cur == best
            }
            return;
        }
        const std::size_t offset = cur.size();
        for (int r : seed_order) {
            if (used[r]) continue;

            // Emit row r's bits under the current column grouping.
            std::string chunk;
            chunk.reserve(ncols);
            for (const auto& g : groups) {
                std::size_t ones = 0;
                for (int c : g) ones += inc->at(r, c) ? 1 : 0;
                chunk.append(g.size() - ones, '0');
                chunk.append(ones, '1');
            }

            bool child_equal = equal_to_best;
            if (best_valid && equal_to_best) {
                const int cmp = best.compare(offset, chunk.size(), chunk);
                if (cmp < 0) continue;  // chunk is worse than best: prune
                if (cmp > 0) child_equal = false;
            } else if (!best_valid) {
                child_equal = false;
            }

            // Refine the groups by row r: zeros before ones.
            std::vector<std::vector<int>> saved = groups;
            std::vector<std::vector<int>> refined;
            for (const auto& g : groups) {
                std::vector<int> zeros, ones;
                for (int c : g) (inc->at(r, c) ? ones : zeros).push_back(c);
                if (!zeros.empty()) refined.push_back(std::move(zeros));
                if (!ones.empty()) refined.push_back(std::move(ones));
            }
            groups = std::move(refined);

            used[r] = 1;
            order.push_back(r);
            cur += chunk;
            dfs(child_equal);
            cur.resize(offset);
            order.pop_back();
            used[r] = 0;
            groups = std::move(saved);
        }
    }
};

std::string hex_encode_bits(const std::string& bits) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve((bits.size() + 3) / 4);
    for (std::size_t i = 0; i < bits.size(); i += 4) {
        int nibble = 0;
        for (std::size_t j = 0; j < 4; ++j) {
            nibble <<= 1;
            if (i + j < bits.size() && bits[i + j] == '1') nibble |= 1;
        }
        out += digits[nibble];
    }
    return out;
}

}  // namespace

CombinatorialType canonical_certificate(const IncidenceMatrix& incidence) {
    CanonSearch search;
    search.nrows = incidence.num_vertices;
    search.ncols = incidence.num_facets;
    search.inc = &incidence;
    search.run();

    CombinatorialType type;
    type.num_vertices = incidence.num_vertices;
    type.num_facets = incidence.num_facets;
    type.automorphism_order = search.count;
    type.certificate = "v1:" + std::to_string(incidence.num_vertices) + ":" +
                       std::to_string(incidence.num_facets) + ":" +
                       hex_encode_bits(search.best);
    return type;
}

std::string certificate_digest(const std::string& certificate) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : certificate) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

CombinatorialType combinatorial_type_of(const DistanceMatrix& dm) {
    const auto vrep = build_fundamental_polytope(dm);
    const auto hrep = enumerate_facets(vrep);
    return canonical_certificate(vertex_facet_incidence(vrep, hrep));
}

bool is_similar(const DistanceMatrix& a, const DistanceMatrix& b) {
    if (!validate_metric(a).is_valid || !validate_metric(b).is_valid)
        throw std::invalid_argument("is_similar: both inputs must be valid metrics");
    return combinatorial_type_of(a).certificate == combinatorial_type_of(b).certificate;
}

namespace {

void isometry_backtrack(const DistanceMatrix& dm, std::vector<int>& perm,
                        std::vector<char>& taken, std::vector<std::vector<int>>& out) {
    const int level = static_cast<int>(perm.size());
    if (level == dm.n) {
        out.push_back(perm);
        return;
    }
    for (int cand = 0; cand < dm.n; ++cand) {
        if (taken[cand]) continue;
        bool ok = true;
        for (int prev = 0; prev < level && ok; ++prev)
            ok = dm.at(perm[prev], cand) == dm.at(prev, level);
        if (!ok) continue;
        taken[cand] = 1;
        perm.push_back(cand);
        isometry_backtrack(dm, perm, taken, out);
        perm.pop_back();
        taken[cand] = 0;
    }
}

}  // namespace

std::vector<std::vector<int>> isometry_induced_automorphisms(const DistanceMatrix& dm) {
    if (!validate_metric(dm).is_valid)
        throw std::invalid_argument("isometry_induced_automorphisms: input is not a metric");

    std::vector<std::vector<int>> perms;
    std::vector<int> perm;
    std::vector<char> taken(dm.n, 0);
    isometry_backtrack(dm, perm, taken, perms);

    // Verify each permutation really acts on the polytope: it must permute
    // the vertex coordinate set and the facet normal set.
    const auto vrep = build_fundamental_polytope(dm);
    const auto hrep = enumerate_facets(vrep);
    std::set<RatVector> vertex_set(vrep.vertex_coords().begin(), vrep.vertex_coords().end());
    std::set<RatVector> facet_set(hrep.facets.begin(), hrep.facets.end());

    for (const auto& p : perms) {
        std::vector<int> inverse(dm.n);
        for (int i = 0; i < dm.n; ++i) inverse[p[i]] = i;
        for (const auto& v : vertex_set) {
            RatVector moved(dm.n);
            for (int i = 0; i < dm.n; ++i) moved[i] = v[inverse[i]];
            if (!vertex_set.count(moved))
                throw std::logic_error("isometry does not preserve the vertex set");
        }
        for (const auto& a : facet_set) {
            RatVector moved(dm.n);
            for (int i = 0; i < dm.n; ++i) moved[i] = a[inverse[i]];
            if (!facet_set.count(moved))
                throw std::logic_error("isometry does not preserve the facet set");
        }
    }
    return perms;
}

}  // namespace krpoly
