// Sampling census of combinatorial types over the cone of n-point metrics:
// draw metrics, run the full polytope pipeline on each, bucket by canonical
// certificate, and cross-tabulate with Euclidean embeddability.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "krpoly/canonical.hpp"
#include "krpoly/metric.hpp"

namespace krpoly {

struct SamplerParams {
    SamplerMode mode = SamplerMode::Closure;
    std::uint64_t denominator_bound = 1000;
    /// Resample until every triangle inequality is strict: separates the
    /// full-dimensional strata from degenerate ones.
    bool strict_triangle = false;
};

struct CensusRecord {
    int n = 0;
    std::string certificate;
    std::string digest;
    std::uint64_t sample_count = 0;
    DistanceMatrix representative;
    std::vector<std::size_t> f_vector;
    std::map<std::size_t, std::size_t> facet_size_histogram;
    std::uint64_t euclidean_count = 0;
    /// All generator points extreme and all facets simplicial. Simplicial
    /// facets survive small perturbations of the vertices along their rays,
    /// so this flags types that plausibly persist on a neighborhood of the
    /// sample; it is a proxy for "generic", not a proof.
    bool candidate_generic = false;
    /// Earliest (seed, sample index) that produced this type; the merge rule
    /// keeps the representative with the lexicographically smallest pair, so
    /// merged output is independent of worker count and merge order.
    std::uint64_t first_seed = 0;
    std::uint64_t first_index = 0;
};

struct TypeRegistry {
    int n = 0;
    SamplerMode mode = SamplerMode::Closure;
    bool strict_triangle = false;
    std::vector<std::uint64_t> denominator_bounds;  // sorted, deduplicated
    std::vector<std::uint64_t> seeds;               // sorted, deduplicated
    std::uint64_t total_samples = 0;
    std::map<std::string, CensusRecord> records;    // keyed by full certificate
};

/// Runs `samples` draws with per-sample seeds derived from (seed, index).
/// Deterministic for fixed arguments and independent of `workers`; n is
/// capped to [3, 6] (the pipeline cost beyond that is not desk-scale).
TypeRegistry run_census(int n, std::uint64_t samples, std::uint64_t seed,
                        const SamplerParams& params, unsigned workers = 1);

/// Adds sample counts per certificate. Registries must agree on n and
/// sampler mode. Associative and commutative: representatives follow the
/// smallest (seed, index) rule.
TypeRegistry merge_registries(const TypeRegistry& a, const TypeRegistry& b);

/// Frequency table of types plus the Euclidean cross-tabulation: which
/// types were ever realized by an embeddable sample.
nlohmann::json registry_report(const TypeRegistry& registry);

/// One record per line, records sorted by certificate, keys sorted.
void write_registry_jsonl(const TypeRegistry& registry, std::ostream& out);

nlohmann::json registry_snapshot(const TypeRegistry& registry);

}  // namespace krpoly
