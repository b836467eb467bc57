// JSON emission for every machine-readable surface. Rationals are always
// the exact strings "p/q"; keys are sorted; arrays carry a documented
// deterministic order. Identical inputs give byte-identical output.

#pragma once

#include <nlohmann/json.hpp>

#include "krpoly/kr_norm.hpp"
#include "krpoly/metric.hpp"
#include "krpoly/polytope.hpp"

namespace krpoly {

nlohmann::json matrix_to_json(const DistanceMatrix& dm);

/// Includes the "n"/"d" keys of the matrix format, so the emitted object is
/// itself parseable by parse_distance_matrix.
nlohmann::json vrep_to_json(const DistanceMatrix& dm, const VRepresentation& vrep);

nlohmann::json hrep_to_json(const HRepresentation& hrep);

nlohmann::json lattice_to_json(const FaceLattice& lattice);

nlohmann::json report_to_json(const MetricReport& report);

nlohmann::json plan_to_json(const TransportPlan& plan);

std::string violation_kind_name(ViolationKind kind);

}  // namespace krpoly
