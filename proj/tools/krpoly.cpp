// Command-line front end. Machine-readable JSON on stdout (keys sorted,
// rationals as exact strings), diagnostics on stderr, exit codes: 0 success,
// 1 domain error, 2 usage error. Identical invocations produce byte
// identical stdout.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "krpoly/canonical.hpp"
#include "krpoly/census.hpp"
#include "krpoly/hull.hpp"
#include "krpoly/json_io.hpp"
#include "krpoly/kr_norm.hpp"
#include "krpoly/metric.hpp"
#include "krpoly/polytope.hpp"

namespace {

using krpoly::DistanceMatrix;
using krpoly::Rational;
using krpoly::RatVector;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

DistanceMatrix load_matrix(const std::string& path) {
    return krpoly::parse_distance_matrix(read_file(path));
}

RatVector parse_vector(const std::vector<std::string>& tokens) {
    RatVector v;
    for (const auto& t : tokens) v.push_back(krpoly::parse_rational(t));
    return v;
}

bool json_output = true;

void emit(const nlohmann::json& doc, const std::string& text_form) {
    if (json_output)
        std::cout << doc.dump() << "\n";
    else
        std::cout << text_form;
}

std::string matrix_to_text(const DistanceMatrix& dm) {
    std::string out;
    for (int i = 0; i < dm.n; ++i) {
        for (int j = 0; j < dm.n; ++j) {
            if (j) out += " ";
            out += krpoly::format_rational(dm.at(i, j));
        }
        out += "\n";
    }
    return out;
}

// The extremality answer mirrors the axioms whenever the geometric test is
// not applicable (nonpositive or asymmetric input has no generator points).
bool extremality_or_false(const DistanceMatrix& dm) {
    if (!krpoly::is_symmetric_positive(dm)) return false;
    return krpoly::extremality_metric_test(dm);
}

int cmd_validate(const std::string& file) {
    const auto dm = load_matrix(file);
    const auto report = krpoly::validate_metric(dm);
    const bool extremality = extremality_or_false(dm);

    nlohmann::json doc = krpoly::report_to_json(report);
    doc["is_metric_axioms"] = report.is_valid;
    doc["is_metric_extremality"] = extremality;
    doc.erase("is_valid");

    std::string text = "axioms: " + std::string(report.is_valid ? "true" : "false") +
                       "\nextremality: " + (extremality ? "true" : "false") + "\n";
    for (const auto& v : report.violations) {
        text += "violation " + krpoly::violation_kind_name(v.kind) + " at (";
        for (int i = 0; i < v.witness_size; ++i) {
            if (i) text += ",";
            text += std::to_string(v.witness[i]);
        }
        text += ")\n";
    }
    emit(doc, text);
    return 0;
}

int cmd_polytope(const std::string& file, bool frep, bool hrep, bool lattice, bool fvector) {
    const auto dm = load_matrix(file);
    if (!krpoly::is_symmetric_positive(dm))
        throw std::invalid_argument("polytope: matrix must be symmetric with zero diagonal "
                                    "and positive off-diagonal entries");
    if (!krpoly::validate_metric(dm).is_valid)
        std::cerr << "warning: input violates the triangle inequality; "
                     "the polytope is still defined\n";
    if (!frep && !hrep && !lattice && !fvector) fvector = true;

    const auto vrep = krpoly::build_fundamental_polytope(dm);
    nlohmann::json doc;
    std::string text;
    if (frep) {
        doc.update(krpoly::vrep_to_json(dm, vrep));
        text += matrix_to_text(dm);
        for (std::size_t i = 0; i < vrep.points.size(); ++i) {
            text += "point " + std::to_string(vrep.points[i].from) + "->" +
                    std::to_string(vrep.points[i].to) + " " +
                    krpoly::format_vector(vrep.points[i].coords) +
                    (vrep.is_vertex[i] ? " vertex" : " non-vertex") + "\n";
        }
    }
    if (hrep || lattice || fvector) {
        const auto facets = krpoly::enumerate_facets(vrep);
        if (hrep) {
            doc["hrep"] = krpoly::hrep_to_json(facets);
            for (const auto& normal : facets.facets)
                text += "facet " + krpoly::format_vector(normal) + " <= 1\n";
        }
        if (lattice || fvector) {
            const auto incidence = krpoly::vertex_facet_incidence(vrep, facets);
            const auto faces = krpoly::build_face_lattice(vrep, incidence);
            if (lattice) {
                doc["lattice"] = krpoly::lattice_to_json(faces);
                for (const auto& face : faces.faces) {
                    text += "face dim " + std::to_string(face.dim) + ":";
                    for (std::size_t v = 0; v < krpoly::kMaxVertices; ++v)
                        if ((face.vertex_mask >> v) & 1) text += " " + std::to_string(v);
                    text += "\n";
                }
            }
            if (fvector) {
                const auto fv = krpoly::f_vector(faces);
                doc["fvector"] = fv.to_string();
                text += fv.to_string() + "\n";
            }
        }
    }
    emit(doc, text);
    return 0;
}

int cmd_canon(const std::string& file) {
    const auto dm = load_matrix(file);
    if (!krpoly::validate_metric(dm).is_valid)
        throw std::invalid_argument("canon: input is not a metric");
    const auto type = krpoly::combinatorial_type_of(dm);
    nlohmann::json doc;
    doc["certificate"] = type.certificate;
    doc["digest"] = krpoly::certificate_digest(type.certificate);
    doc["num_vertices"] = type.num_vertices;
    doc["num_facets"] = type.num_facets;
    doc["automorphism_order"] = type.automorphism_order;
    emit(doc, "digest " + krpoly::certificate_digest(type.certificate) + "\nvertices " +
                  std::to_string(type.num_vertices) + "\nfacets " +
                  std::to_string(type.num_facets) + "\nautomorphism_order " +
                  std::to_string(type.automorphism_order) + "\n");
    return 0;
}

int cmd_similar(const std::string& file1, const std::string& file2) {
    const bool similar = krpoly::is_similar(load_matrix(file1), load_matrix(file2));
    nlohmann::json doc;
    doc["similar"] = similar;
    emit(doc, std::string(similar ? "true" : "false") + "\n");
    return 0;
}

int cmd_norm(const std::string& file, const std::vector<std::string>& coords, bool with_plan) {
    const auto dm = load_matrix(file);
    const RatVector v = parse_vector(coords);
    if (static_cast<int>(v.size()) != dm.n)
        throw std::invalid_argument("norm: vector length must equal the point count");

    const Rational lp_value = krpoly::transport_norm(dm, v);
    const auto hrep = krpoly::enumerate_facets(krpoly::build_fundamental_polytope(dm));
    const Rational gauge_value = krpoly::gauge_norm(hrep, v);

    nlohmann::json doc;
    doc["lp_value"] = krpoly::format_rational(lp_value);
    doc["gauge_value"] = krpoly::format_rational(gauge_value);
    doc["equal"] = lp_value == gauge_value;
    std::string text = "lp_value " + krpoly::format_rational(lp_value) + "\ngauge_value " +
                       krpoly::format_rational(gauge_value) + "\nequal " +
                       (lp_value == gauge_value ? "true" : "false") + "\n";
    if (with_plan) {
        const auto plan = krpoly::optimal_plan(dm, v);
        doc["plan"] = krpoly::plan_to_json(plan);
        for (int i = 0; i < plan.n; ++i) {
            for (int j = 0; j < plan.n; ++j) {
                if (j) text += " ";
                text += krpoly::format_rational(plan.at(i, j));
            }
            text += "\n";
        }
    }
    emit(doc, text);
    return 0;
}

int cmd_census(int n, std::uint64_t samples, std::uint64_t seed, const std::string& mode,
               std::uint64_t bound, bool strict, unsigned workers, const std::string& out) {
    krpoly::SamplerParams params;
    params.mode = krpoly::sampler_mode_from_string(mode);
    params.denominator_bound = bound;
    params.strict_triangle = strict;
    const auto registry = krpoly::run_census(n, samples, seed, params, workers);

    {
        std::ofstream jsonl(out + ".jsonl", std::ios::binary);
        if (!jsonl) throw std::invalid_argument("cannot write " + out + ".jsonl");
        krpoly::write_registry_jsonl(registry, jsonl);
        std::ofstream snapshot(out + ".json", std::ios::binary);
        if (!snapshot) throw std::invalid_argument("cannot write " + out + ".json");
        snapshot << krpoly::registry_snapshot(registry).dump() << "\n";
    }

    const auto report = krpoly::registry_report(registry);
    std::string text = "n " + std::to_string(n) + ", samples " + std::to_string(samples) +
                       ", distinct types " + std::to_string(registry.records.size()) + "\n";
    for (const auto& row : report["types"]) {
        text += row["digest"].get<std::string>() + "  fvector (";
        const auto& fv = row["f_vector"];
        for (std::size_t i = 0; i < fv.size(); ++i) {
            if (i) text += ",";
            text += std::to_string(fv[i].get<std::size_t>());
        }
        text += ")  samples " + std::to_string(row["sample_count"].get<std::uint64_t>()) +
                "  euclidean " + std::to_string(row["euclidean_count"].get<std::uint64_t>()) +
                (row["candidate_generic"].get<bool>() ? "  generic-candidate" : "") + "\n";
    }
    emit(report, text);
    return 0;
}

int cmd_embed_check(const std::string& file) {
    const bool euclidean = krpoly::euclidean_type_test(load_matrix(file));
    nlohmann::json doc;
    doc["euclidean"] = euclidean;
    emit(doc, std::string(euclidean ? "true" : "false") + "\n");
    return 0;
}

int cmd_root(int n) {
    const auto dm = krpoly::unit_metric(n);
    emit(krpoly::matrix_to_json(dm), matrix_to_text(dm));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact toolkit for fundamental polytopes of finite metric spaces and the "
                 "Kantorovich-Rubinstein norm"};
    app.require_subcommand(1);
    std::string format = "json";
    app.add_option("--format", format, "Output format: json (default) or text")
        ->check(CLI::IsMember({"json", "text"}));

    std::string file, file2, mode = "closure", out = "registry";
    std::vector<std::string> coords;
    int n = 3;
    std::uint64_t samples = 100, seed = 1, bound = 1000;
    unsigned workers = 1;
    bool strict = false;
    bool frep = false, hrep = false, lattice = false, fvector = false;

    auto* validate = app.add_subcommand("validate", "Check the metric axioms two ways");
    validate->add_option("matrix", file)->required();

    auto* polytope = app.add_subcommand("polytope", "Fundamental polytope representations");
    polytope->add_option("matrix", file)->required();
    polytope->add_flag("--frep", frep, "Generator points with extremality flags");
    polytope->add_flag("--hrep", hrep, "Facet inequalities (normal . x <= 1)");
    polytope->add_flag("--lattice", lattice, "Face lattice");
    polytope->add_flag("--fvector", fvector, "f-vector (default)");

    auto* canon = app.add_subcommand("canon", "Canonical combinatorial type");
    canon->add_option("matrix", file)->required();

    auto* similar = app.add_subcommand("similar", "Same combinatorial type?");
    similar->add_option("matrix1", file)->required();
    similar->add_option("matrix2", file2)->required();

    auto* norm = app.add_subcommand("norm", "Transportation norm of a sum-zero vector");
    norm->add_option("matrix", file)->required();
    norm->add_option("v", coords, "Vector coordinates as rationals")->required();

    auto* plan = app.add_subcommand("plan", "Norm plus an optimal transport plan");
    plan->add_option("matrix", file)->required();
    plan->add_option("v", coords, "Vector coordinates as rationals")->required();

    auto* census = app.add_subcommand("census", "Sampled census of combinatorial types");
    census->add_option("n", n, "Point count (3..6)")->required();
    census->add_option("--samples", samples, "Number of samples");
    census->add_option("--seed", seed, "Base seed");
    census->add_option("--mode", mode, "Sampler: closure or euclidean");
    census->add_option("--bound", bound, "Denominator bound");
    census->add_flag("--strict", strict, "Resample until all triangle inequalities are strict");
    census->add_option("--workers", workers, "Worker threads (output independent of value)");
    census->add_option("--out", out, "Output prefix for .jsonl and .json files");

    auto* embed = app.add_subcommand("embed-check", "Euclidean embeddability (exact)");
    embed->add_option("matrix", file)->required();

    auto* root = app.add_subcommand("root", "Emit the unit metric on n points");
    root->add_option("n", n, "Point count")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    json_output = format == "json";
    try {
        if (app.got_subcommand(validate)) return cmd_validate(file);
        if (app.got_subcommand(polytope)) return cmd_polytope(file, frep, hrep, lattice, fvector);
        if (app.got_subcommand(canon)) return cmd_canon(file);
        if (app.got_subcommand(similar)) return cmd_similar(file, file2);
        if (app.got_subcommand(norm)) return cmd_norm(file, coords, false);
        if (app.got_subcommand(plan)) return cmd_norm(file, coords, true);
        if (app.got_subcommand(census))
            return cmd_census(n, samples, seed, mode, bound, strict, workers, out);
        if (app.got_subcommand(embed)) return cmd_embed_check(file);
        if (app.got_subcommand(root)) return cmd_root(n);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
