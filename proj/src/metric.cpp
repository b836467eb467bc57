#include "krpoly/metric.hpp"

#include <nlohmann/json.hpp>
#include <sstream>
#include <stdexcept>

#include "krpoly/hull.hpp"
#include "krpoly/linalg.hpp"

namespace krpoly {

DistanceMatrix unit_metric(int n) {
    if (n < 2) throw std::invalid_argument("unit_metric: need at least 2 points");
    DistanceMatrix dm(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) dm.at(i, j) = (i == j) ? 0 : 1;
    return dm;
}

namespace {

DistanceMatrix matrix_from_rows(const std::vector<RatVector>& rows) {
    const int n = static_cast<int>(rows.size());
    if (n < 2) throw std::invalid_argument("distance matrix: need at least 2 rows, got " +
                                           std::to_string(n));
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n)
            throw std::invalid_argument("distance matrix: row " + std::to_string(i) + " has " +
                                        std::to_string(rows[i].size()) + " entries, expected " +
                                        std::to_string(n));
    }
    DistanceMatrix dm(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) dm.at(i, j) = rows[i][j];
    for (int i = 0; i < n; ++i) {
        if (dm.at(i, i) != 0)
            throw std::invalid_argument("distance matrix: nonzero diagonal at (" +
                                        std::to_string(i) + "," + std::to_string(i) + ")");
        for (int j = i + 1; j < n; ++j) {
            if (dm.at(i, j) != dm.at(j, i))
                throw std::invalid_argument("distance matrix: asymmetric at (" +
                                            std::to_string(i) + "," + std::to_string(j) +
                                            ")/(" + std::to_string(j) + "," +
                                            std::to_string(i) + ")");
        }
    }
    return dm;
}

DistanceMatrix parse_json_matrix(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("distance matrix: bad JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("d"))
        throw std::invalid_argument("distance matrix: JSON object must carry \"n\" and \"d\"");
    if (!doc["n"].is_number_integer())
        throw std::invalid_argument("distance matrix: \"n\" must be an integer");
    const int n = doc["n"].get<int>();
    if (!doc["d"].is_array() || static_cast<int>(doc["d"].size()) != n)
        throw std::invalid_argument("distance matrix: \"d\" must be an array of n rows");
    std::vector<RatVector> rows;
    for (int i = 0; i < n; ++i) {
        const auto& row = doc["d"][i];
        if (!row.is_array())
            throw std::invalid_argument("distance matrix: row " + std::to_string(i) +
                                        " is not an array");
        RatVector r;
        for (const auto& cell : row) {
            if (cell.is_string()) {
                r.push_back(parse_rational(cell.get<std::string>()));
            } else if (cell.is_number_integer()) {
                r.push_back(Rational(cell.get<long long>()));
            } else {
                throw std::invalid_argument(
                    "distance matrix: row " + std::to_string(i) +
                    " holds a non-rational entry (floats are not accepted)");
            }
        }
        rows.push_back(std::move(r));
    }
    return matrix_from_rows(rows);
}

}  // namespace

DistanceMatrix parse_distance_matrix(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos)
        throw std::invalid_argument("distance matrix: empty input");
    if (text[first] == '{') return parse_json_matrix(text);

    std::vector<RatVector> rows;
    std::istringstream stream{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(stream, line)) {
        ++lineno;
        const auto start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        RatVector row;
        std::istringstream cells(line);
        std::string cell;
        while (cells >> cell) {
            try {
                row.push_back(parse_rational(cell));
            } catch (const std::invalid_argument& e) {
                throw std::invalid_argument("distance matrix: line " + std::to_string(lineno) +
                                            ", entry " + std::to_string(row.size()) + ": " +
                                            e.what());
            }
        }
        rows.push_back(std::move(row));
    }
    return matrix_from_rows(rows);
}

MetricReport validate_metric(const DistanceMatrix& dm) {
    MetricReport report;
    const int n = dm.n;
    for (int i = 0; i < n; ++i) {
        if (dm.at(i, i) != 0)
            report.violations.push_back({ViolationKind::NonzeroDiagonal, {i, 0, 0}, 1});
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (dm.at(i, j) != dm.at(j, i))
                report.violations.push_back({ViolationKind::Asymmetry, {i, j, 0}, 2});
            if (dm.at(i, j) <= 0)
                report.violations.push_back({ViolationKind::Nonpositive, {i, j, 0}, 2});
        }
    }
    // All n^3 triangles; report each violating (i,j,k) with k the midpoint.
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                if (dm.at(i, j) > dm.at(i, k) + dm.at(k, j))
                    report.violations.push_back({ViolationKind::Triangle, {i, j, k}, 3});
            }
        }
    }
    report.is_valid = report.violations.empty();
    return report;
}

bool is_symmetric_positive(const DistanceMatrix& dm) {
    for (int i = 0; i < dm.n; ++i) {
        if (dm.at(i, i) != 0) return false;
        for (int j = i + 1; j < dm.n; ++j) {
            if (dm.at(i, j) != dm.at(j, i) || dm.at(i, j) <= 0) return false;
        }
    }
    return true;
}

std::vector<LabeledPoint> fundamental_vectors(const DistanceMatrix& dm) {
    if (!is_symmetric_positive(dm))
        throw std::invalid_argument(
            "fundamental_vectors: need a symmetric matrix with zero diagonal and positive "
            "off-diagonal entries");
    std::vector<LabeledPoint> points;
    points.reserve(std::size_t(dm.n) * (dm.n - 1));
    for (int from = 0; from < dm.n; ++from) {
        for (int to = 0; to < dm.n; ++to) {
            if (to == from) continue;
            LabeledPoint p;
            p.from = from;
            p.to = to;
            p.coords.assign(dm.n, Rational(0));
            const Rational scale = Rational(1) / dm.at(from, to);
            p.coords[from] = scale;
            p.coords[to] = -scale;
            points.push_back(std::move(p));
        }
    }
    return points;
}

bool extremality_metric_test(const DistanceMatrix& dm) {
    const auto points = fundamental_vectors(dm);  // also rejects bad input
    const auto dirs = sum_zero_directions(dm.n);

    std::vector<RatVector> others;
    others.reserve(points.size() - 1);
    for (std::size_t skip = 0; skip < points.size(); ++skip) {
        others.clear();
        for (std::size_t j = 0; j < points.size(); ++j)
            if (j != skip) others.push_back(points[j].coords);
        if (hull_interior(others, points[skip].coords, dirs)) return false;
    }
    return true;
}

bool euclidean_type_test(const DistanceMatrix& dm) {
    if (!validate_metric(dm).is_valid)
        throw std::invalid_argument("euclidean_type_test: input is not a metric");
    const int m = dm.n - 1;
    RatMatrix gram(m, m);
    for (int i = 1; i < dm.n; ++i) {
        for (int j = 1; j < dm.n; ++j) {
            const Rational d0i = dm.at(0, i);
            const Rational d0j = dm.at(0, j);
            const Rational dij = dm.at(i, j);
            gram.at(i - 1, j - 1) = (d0i * d0i + d0j * d0j - dij * dij) / 2;
        }
    }
    return psd_check(gram);
}

SamplerMode sampler_mode_from_string(std::string_view name) {
    if (name == "closure") return SamplerMode::Closure;
    if (name == "euclidean") return SamplerMode::Euclidean;
    throw std::invalid_argument("unknown sampler mode: '" + std::string(name) + "'");
}

std::string to_string(SamplerMode mode) {
    return mode == SamplerMode::Closure ? "closure" : "euclidean";
}

std::uint64_t Rng::uniform(std::uint64_t lo, std::uint64_t hi) {
    const std::uint64_t range = hi - lo + 1;  // callers keep lo <= hi
    if (range == 0) return eng_();            // full 64-bit range
    const std::uint64_t bucket = UINT64_MAX / range;
    const std::uint64_t limit = bucket * range;
    std::uint64_t x;
    do {
        x = eng_();
    } while (x >= limit);
    return lo + x / bucket;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

namespace {

Rational draw_unit_rational(Rng& rng, std::uint64_t bound, bool allow_zero) {
    const std::uint64_t q = rng.uniform(1, bound);
    const std::uint64_t p = rng.uniform(allow_zero ? 0 : 1, q);
    return make_rational(Integer(p), Integer(q));
}

DistanceMatrix closure_sample(int n, Rng& rng, std::uint64_t bound) {
    DistanceMatrix dm(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const Rational v = draw_unit_rational(rng, bound, false);
            dm.at(i, j) = v;
            dm.at(j, i) = v;
        }
    // All-pairs shortest paths: the closest point of the metric cone that
    // only ever shrinks entries.
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                const Rational via = dm.at(i, k) + dm.at(k, j);
                if (i != k && j != k && via < dm.at(i, j)) {
                    dm.at(i, j) = via;
                }
            }
    return dm;
}

DistanceMatrix l1_sample(int n, Rng& rng, std::uint64_t bound) {
    const int dim = n - 1;
    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::vector<RatVector> pts(n, RatVector(dim));
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < dim; ++k) pts[i][k] = draw_unit_rational(rng, bound, true);
        DistanceMatrix dm(n);
        bool distinct = true;
        for (int i = 0; i < n && distinct; ++i)
            for (int j = i + 1; j < n; ++j) {
                Rational dist = 0;
                for (int k = 0; k < dim; ++k) dist += abs(pts[i][k] - pts[j][k]);
                if (dist == 0) {
                    distinct = false;
                    break;
                }
                dm.at(i, j) = dist;
                dm.at(j, i) = dist;
            }
        if (distinct) return dm;
    }
    throw std::logic_error("random_metric: could not draw distinct points");
}

}  // namespace

DistanceMatrix random_metric(int n, std::uint64_t seed, std::uint64_t denominator_bound,
                             SamplerMode mode) {
    if (n < 2) throw std::invalid_argument("random_metric: need at least 2 points");
    if (denominator_bound < 1)
        throw std::invalid_argument("random_metric: denominator bound must be >= 1");
    Rng rng(seed);
    return mode == SamplerMode::Closure ? closure_sample(n, rng, denominator_bound)
                                        : l1_sample(n, rng, denominator_bound);
}

DistanceMatrix apply_permutation(const DistanceMatrix& dm, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != dm.n)
        throw std::invalid_argument("apply_permutation: permutation size mismatch");
    DistanceMatrix out(dm.n);
    for (int i = 0; i < dm.n; ++i)
        for (int j = 0; j < dm.n; ++j) out.at(i, j) = dm.at(perm[i], perm[j]);
    return out;
}

DistanceMatrix scale_metric(const DistanceMatrix& dm, const Rational& factor) {
    if (factor <= 0) throw std::invalid_argument("scale_metric: factor must be positive");
    DistanceMatrix out(dm.n);
    for (std::size_t i = 0; i < dm.d.size(); ++i) out.d[i] = dm.d[i] * factor;
    return out;
}

}  // namespace krpoly
