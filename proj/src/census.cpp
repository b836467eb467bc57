#include "krpoly/census.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "krpoly/json_io.hpp"

namespace krpoly {

namespace {

bool all_triangles_strict(const DistanceMatrix& dm) {
    for (int i = 0; i < dm.n; ++i)
        for (int j = i + 1; j < dm.n; ++j)
            for (int k = 0; k < dm.n; ++k) {
                if (k == i || k == j) continue;
                if (dm.at(i, j) >= dm.at(i, k) + dm.at(k, j)) return false;
            }
    return true;
}

DistanceMatrix draw_sample(int n, std::uint64_t sample_seed, const SamplerParams& params) {
    for (std::uint64_t attempt = 0; attempt < 10000; ++attempt) {
        DistanceMatrix dm = random_metric(n, mix_seed(sample_seed, attempt),
                                          params.denominator_bound, params.mode);
        if (!params.strict_triangle || all_triangles_strict(dm)) return dm;
    }
    throw std::logic_error("census: strict-triangle resampling did not converge");
}

void absorb_sample(TypeRegistry& registry, const DistanceMatrix& dm, std::uint64_t seed,
                   std::uint64_t index) {
    const auto vrep = build_fundamental_polytope(dm);
    const auto hrep = enumerate_facets(vrep);
    const auto incidence = vertex_facet_incidence(vrep, hrep);
    const auto lattice = build_face_lattice(vrep, incidence);
    const auto fvec = f_vector(lattice);
    const auto type = canonical_certificate(incidence);
    const bool euclidean = euclidean_type_test(dm);

    bool all_extreme = true;
    for (bool v : vrep.is_vertex) all_extreme = all_extreme && v;
    const auto facet_sizes = facet_vertex_counts(incidence);
    bool simplicial = true;
    for (std::size_t s : facet_sizes) simplicial = simplicial && s == std::size_t(dm.n - 1);

    auto [it, inserted] = registry.records.try_emplace(type.certificate);
    CensusRecord& rec = it->second;
    if (inserted) {
        rec.n = dm.n;
        rec.certificate = type.certificate;
        rec.digest = certificate_digest(type.certificate);
        rec.representative = dm;
        rec.f_vector = fvec.counts;
        for (std::size_t s : facet_sizes) ++rec.facet_size_histogram[s];
        rec.candidate_generic = all_extreme && simplicial;
        rec.first_seed = seed;
        rec.first_index = index;
    } else if (std::make_pair(seed, index) <
               std::make_pair(rec.first_seed, rec.first_index)) {
        rec.representative = dm;
        rec.first_seed = seed;
        rec.first_index = index;
    }
    ++rec.sample_count;
    if (euclidean) ++rec.euclidean_count;
    ++registry.total_samples;
}

}  // namespace

TypeRegistry run_census(int n, std::uint64_t samples, std::uint64_t seed,
                        const SamplerParams& params, unsigned workers) {
    if (n < 3 || n > 6)
        throw std::invalid_argument(
            "run_census: n must be in [3, 6]; the full facet/lattice/canonization pipeline "
            "per sample is not desk-scale beyond that");
    if (samples < 1) throw std::invalid_argument("run_census: need at least one sample");
    if (workers < 1) workers = 1;
    if (workers > samples) workers = static_cast<unsigned>(samples);

    auto make_empty = [&] {
        TypeRegistry r;
        r.n = n;
        r.mode = params.mode;
        r.strict_triangle = params.strict_triangle;
        r.denominator_bounds = {params.denominator_bound};
        r.seeds = {seed};
        return r;
    };

    // Each sample depends only on (seed, index), so splitting indices across
    // workers and merging in worker order cannot change the result.
    std::vector<TypeRegistry> partial(workers);
    auto work = [&](unsigned w) {
        partial[w] = make_empty();
        for (std::uint64_t index = w; index < samples; index += workers) {
            const DistanceMatrix dm = draw_sample(n, mix_seed(seed, index), params);
            absorb_sample(partial[w], dm, seed, index);
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> threads;
        for (unsigned w = 0; w < workers; ++w) threads.emplace_back(work, w);
        for (auto& t : threads) t.join();
    }

    TypeRegistry result = std::move(partial[0]);
    for (unsigned w = 1; w < workers; ++w) result = merge_registries(result, partial[w]);
    return result;
}

TypeRegistry merge_registries(const TypeRegistry& a, const TypeRegistry& b) {
    if (a.n != b.n) throw std::invalid_argument("merge_registries: point counts differ");
    if (a.mode != b.mode) throw std::invalid_argument("merge_registries: sampler modes differ");

    TypeRegistry out = a;
    out.strict_triangle = a.strict_triangle && b.strict_triangle;
    for (auto v : b.denominator_bounds) out.denominator_bounds.push_back(v);
    for (auto v : b.seeds) out.seeds.push_back(v);
    for (auto* list : {&out.denominator_bounds, &out.seeds}) {
        std::sort(list->begin(), list->end());
        list->erase(std::unique(list->begin(), list->end()), list->end());
    }
    out.total_samples += b.total_samples;

    for (const auto& [cert, rec] : b.records) {
        auto [it, inserted] = out.records.try_emplace(cert, rec);
        if (inserted) continue;
        CensusRecord& merged = it->second;
        if (merged.f_vector != rec.f_vector ||
            merged.facet_size_histogram != rec.facet_size_histogram)
            throw std::logic_error("merge_registries: identical certificates with "
                                   "inconsistent derived data");
        merged.sample_count += rec.sample_count;
        merged.euclidean_count += rec.euclidean_count;
        if (std::make_pair(rec.first_seed, rec.first_index) <
            std::make_pair(merged.first_seed, merged.first_index)) {
            merged.representative = rec.representative;
            merged.first_seed = rec.first_seed;
            merged.first_index = rec.first_index;
        }
    }
    return out;
}

namespace {

nlohmann::json record_to_json(const CensusRecord& rec) {
    nlohmann::json doc;
    doc["format_version"] = "1";
    doc["n"] = rec.n;
    doc["certificate"] = rec.certificate;
    doc["digest"] = rec.digest;
    doc["sample_count"] = rec.sample_count;
    doc["representative"] = matrix_to_json(rec.representative)["d"];
    doc["f_vector"] = rec.f_vector;
    nlohmann::json hist = nlohmann::json::object();
    for (const auto& [size, count] : rec.facet_size_histogram)
        hist[std::to_string(size)] = count;
    doc["facet_size_histogram"] = std::move(hist);
    doc["euclidean_count"] = rec.euclidean_count;
    doc["candidate_generic"] = rec.candidate_generic;
    doc["first_seen"] = {{"seed", rec.first_seed}, {"sample_index", rec.first_index}};
    return doc;
}

}  // namespace

void write_registry_jsonl(const TypeRegistry& registry, std::ostream& out) {
    for (const auto& [cert, rec] : registry.records) out << record_to_json(rec).dump() << "\n";
}

nlohmann::json registry_snapshot(const TypeRegistry& registry) {
    nlohmann::json doc;
    doc["format_version"] = "1";
    doc["n"] = registry.n;
    doc["mode"] = to_string(registry.mode);
    doc["strict_triangle"] = registry.strict_triangle;
    doc["denominator_bounds"] = registry.denominator_bounds;
    doc["seeds"] = registry.seeds;
    doc["total_samples"] = registry.total_samples;
    auto records = nlohmann::json::array();
    for (const auto& [cert, rec] : registry.records) records.push_back(record_to_json(rec));
    doc["records"] = std::move(records);
    return doc;
}

nlohmann::json registry_report(const TypeRegistry& registry) {
    std::vector<const CensusRecord*> rows;
    for (const auto& [cert, rec] : registry.records) rows.push_back(&rec);
    std::sort(rows.begin(), rows.end(), [](const CensusRecord* a, const CensusRecord* b) {
        if (a->sample_count != b->sample_count) return a->sample_count > b->sample_count;
        return a->digest < b->digest;
    });

    nlohmann::json doc;
    doc["format_version"] = "1";
    doc["n"] = registry.n;
    doc["total_samples"] = registry.total_samples;
    doc["distinct_types"] = registry.records.size();
    auto types = nlohmann::json::array();
    std::size_t euclidean_realized = 0;
    for (const CensusRecord* rec : rows) {
        nlohmann::json row;
        row["digest"] = rec->digest;
        row["f_vector"] = rec->f_vector;
        nlohmann::json hist = nlohmann::json::object();
        for (const auto& [size, count] : rec->facet_size_histogram)
            hist[std::to_string(size)] = count;
        row["facet_size_histogram"] = std::move(hist);
        row["sample_count"] = rec->sample_count;
        row["euclidean_count"] = rec->euclidean_count;
        row["euclidean_realized"] = rec->euclidean_count > 0;
        row["candidate_generic"] = rec->candidate_generic;
        types.push_back(std::move(row));
        if (rec->euclidean_count > 0) ++euclidean_realized;
    }
    doc["types"] = std::move(types);
    doc["euclidean_realized_types"] = euclidean_realized;
    return doc;
}

}  // namespace krpoly
