#pragma once

#include <string>

#include <json.hpp>

#include "reconf/sequence.hpp"

namespace reconf {

/// JSON views of the simulation types. Robot, resource and edge indices are
/// 1-indexed on the wire, matching the plain-text edge-list convention;
/// absent distance entries serialize as null. parse(emit(x)) == x exactly.

nlohmann::json topology_to_json(const Topology& t);
Topology topology_from_json(const nlohmann::json& j);

nlohmann::json distances_to_json(const NeighborDistanceMatrix& d);
NeighborDistanceMatrix distances_from_json(const nlohmann::json& j);

nlohmann::json resources_to_json(const ResourceMatrix& r);
ResourceMatrix resources_from_json(const nlohmann::json& j);

nlohmann::json configuration_to_json(const Configuration& c);
Configuration configuration_from_json(const nlohmann::json& j);

nlohmann::json trace_step_to_json(const TraceStep& s);
TraceStep trace_step_from_json(const nlohmann::json& j);

nlohmann::json failure_trace_to_json(const FailureTrace& t);
FailureTrace failure_trace_from_json(const nlohmann::json& j);

/// Pretty-printed document with a trailing newline.
std::string emit_trace_json(const FailureTrace& t);
FailureTrace parse_trace_json(const std::string& text);

}  // namespace reconf
