#include "krpoly/json_io.hpp"

namespace krpoly {

namespace {

nlohmann::json rational_array(const RatVector& v) {
    auto arr = nlohmann::json::array();
    for (const auto& x : v) arr.push_back(format_rational(x));
    return arr;
}

}  // namespace

nlohmann::json matrix_to_json(const DistanceMatrix& dm) {
    nlohmann::json doc;
    doc["n"] = dm.n;
    auto rows = nlohmann::json::array();
    for (int i = 0; i < dm.n; ++i) {
        auto row = nlohmann::json::array();
        for (int j = 0; j < dm.n; ++j) row.push_back(format_rational(dm.at(i, j)));
        rows.push_back(std::move(row));
    }
    doc["d"] = std::move(rows);
    return doc;
}

nlohmann::json vrep_to_json(const DistanceMatrix& dm, const VRepresentation& vrep) {
    nlohmann::json doc = matrix_to_json(dm);
    auto points = nlohmann::json::array();
    for (std::size_t i = 0; i < vrep.points.size(); ++i) {
        nlohmann::json p;
        p["from"] = vrep.points[i].from;
        p["to"] = vrep.points[i].to;
        p["coords"] = rational_array(vrep.points[i].coords);
        p["is_vertex"] = vrep.is_vertex[i];
        points.push_back(std::move(p));
    }
    doc["points"] = std::move(points);
    return doc;
}

nlohmann::json hrep_to_json(const HRepresentation& hrep) {
    nlohmann::json doc;
    doc["ambient_dim"] = hrep.ambient_dim;
    doc["rhs"] = "1";
    auto facets = nlohmann::json::array();
    for (const auto& normal : hrep.facets) facets.push_back(rational_array(normal));
    doc["facets"] = std::move(facets);
    return doc;
}

nlohmann::json lattice_to_json(const FaceLattice& lattice) {
    nlohmann::json doc;
    doc["dim"] = lattice.dim;
    auto faces = nlohmann::json::array();
    for (const auto& face : lattice.faces) {
        nlohmann::json f;
        f["dim"] = face.dim;
        auto verts = nlohmann::json::array();
        for (std::size_t v = 0; v < kMaxVertices; ++v)
            if ((face.vertex_mask >> v) & 1) verts.push_back(v);
        f["vertices"] = std::move(verts);
        faces.push_back(std::move(f));
    }
    doc["faces"] = std::move(faces);
    return doc;
}

std::string violation_kind_name(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::Asymmetry: return "asymmetry";
        case ViolationKind::NonzeroDiagonal: return "nonzero-diagonal";
        case ViolationKind::Nonpositive: return "nonpositive";
        case ViolationKind::Triangle: return "triangle";
    }
    return "unknown";
}

nlohmann::json report_to_json(const MetricReport& report) {
    nlohmann::json doc;
    doc["is_valid"] = report.is_valid;
    auto violations = nlohmann::json::array();
    for (const auto& v : report.violations) {
        nlohmann::json item;
        item["kind"] = violation_kind_name(v.kind);
        auto witness = nlohmann::json::array();
        for (int i = 0; i < v.witness_size; ++i) witness.push_back(v.witness[i]);
        item["witness"] = std::move(witness);
        violations.push_back(std::move(item));
    }
    doc["violations"] = std::move(violations);
    return doc;
}

nlohmann::json plan_to_json(const TransportPlan& plan) {
    auto rows = nlohmann::json::array();
    for (int i = 0; i < plan.n; ++i) {
        auto row = nlohmann::json::array();
        for (int j = 0; j < plan.n; ++j) row.push_back(format_rational(plan.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace krpoly
