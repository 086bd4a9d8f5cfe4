#include "reconf/trace_json.hpp"

#include <stdexcept>

namespace reconf {

using nlohmann::json;

json topology_to_json(const Topology& t) {
    json edges = json::array();
    for (const EdgePair& e : t.edges()) {
        edges.push_back({e.first + 1, e.second + 1});
    }
    return {{"n", t.n()}, {"edges", edges}};
}

Topology topology_from_json(const json& j) {
    std::vector<EdgePair> edges;
    for (const json& e : j.at("edges")) {
        edges.push_back({e.at(0).get<int>() - 1, e.at(1).get<int>() - 1});
    }
    return Topology(j.at("n").get<int>(), std::move(edges));
}

json distances_to_json(const NeighborDistanceMatrix& d) {
    json rows = json::array();
    for (int i = 0; i < d.n(); ++i) {
        json row = json::array();
        for (int j = 0; j < d.n(); ++j) {
            if (auto v = d.at(i, j)) {
                row.push_back(*v);
            } else {
                row.push_back(nullptr);
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

NeighborDistanceMatrix distances_from_json(const json& j) {
    const int n = static_cast<int>(j.size());
    NeighborDistanceMatrix d(n);
    for (int i = 0; i < n; ++i) {
        const json& row = j.at(static_cast<std::size_t>(i));
        if (static_cast<int>(row.size()) != n) {
            throw std::invalid_argument("distance JSON: ragged matrix");
        }
        for (int k = 0; k < n; ++k) {
            const json& cell = row.at(static_cast<std::size_t>(k));
            if (i < k && !cell.is_null()) {
                d.set(i, k, cell.get<double>());
            }
        }
    }
    // Reject documents whose lower triangle disagrees with the upper one.
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            const json& cell =
                j.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(k));
            const auto stored = d.at(i, k);
            if (cell.is_null() != !stored.has_value() ||
                (stored && cell.get<double>() != *stored)) {
                throw std::invalid_argument(
                    "distance JSON: asymmetric entries");
            }
        }
    }
    return d;
}

json resources_to_json(const ResourceMatrix& r) {
    json rows = json::array();
    for (int i = 0; i < r.robots(); ++i) {
        json row = json::array();
        for (int j = 0; j < r.resource_kinds(); ++j) {
            row.push_back(r.gamma(i, j));
        }
        rows.push_back(std::move(row));
    }
    return {{"threshold", r.threshold}, {"matrix", rows}};
}

ResourceMatrix resources_from_json(const json& j) {
    const json& rows = j.at("matrix");
    const int n = static_cast<int>(rows.size());
    if (n == 0) throw std::invalid_argument("resource JSON: empty matrix");
    const int r = static_cast<int>(rows.at(0).size());
    Eigen::MatrixXi gamma(n, r);
    for (int i = 0; i < n; ++i) {
        const json& row = rows.at(static_cast<std::size_t>(i));
        if (static_cast<int>(row.size()) != r) {
            throw std::invalid_argument("resource JSON: ragged matrix");
        }
        for (int k = 0; k < r; ++k) {
            gamma(i, k) = row.at(static_cast<std::size_t>(k)).get<int>();
        }
    }
    ResourceMatrix out{std::move(gamma), j.at("threshold").get<int>()};
    out.validate();
    return out;
}

json configuration_to_json(const Configuration& c) {
    return {{"topology", topology_to_json(c.topology)},
            {"distances", distances_to_json(c.distances)},
            {"resources", resources_to_json(c.resources)}};
}

Configuration configuration_from_json(const json& j) {
    return Configuration{topology_from_json(j.at("topology")),
                         distances_from_json(j.at("distances")),
                         resources_from_json(j.at("resources"))};
}

json trace_step_to_json(const TraceStep& s) {
    json toggled = json::array();
    for (const EdgePair& e : s.toggled_edges) {
        toggled.push_back({e.first + 1, e.second + 1});
    }
    return {{"step", s.step},
            {"robot", s.event.robot + 1},
            {"resource", s.event.resource + 1},
            {"kind", to_string(s.event.kind)},
            {"resources_after", resources_to_json(s.resources_after)},
            {"configuration", configuration_to_json(s.configuration)},
            {"reconfigured", s.reconfigured},
            {"toggled_edges", toggled},
            {"inefficacy_before", s.inefficacy_before},
            {"inefficacy_after", s.inefficacy_after},
            {"laplacian_trace", s.laplacian_trace},
            {"escalations", s.escalations},
            {"budget_used", s.budget_used}};
}

TraceStep trace_step_from_json(const json& j) {
    TraceStep s;
    s.step = j.at("step").get<int>();
    s.event.robot = j.at("robot").get<int>() - 1;
    s.event.resource = j.at("resource").get<int>() - 1;
    s.event.kind = failure_kind_from_string(j.at("kind").get<std::string>());
    s.resources_after = resources_from_json(j.at("resources_after"));
    s.configuration = configuration_from_json(j.at("configuration"));
    s.reconfigured = j.at("reconfigured").get<bool>();
    for (const json& e : j.at("toggled_edges")) {
        s.toggled_edges.push_back(
            {e.at(0).get<int>() - 1, e.at(1).get<int>() - 1});
    }
    s.inefficacy_before = j.at("inefficacy_before").get<double>();
    s.inefficacy_after = j.at("inefficacy_after").get<double>();
    s.laplacian_trace = j.at("laplacian_trace").get<double>();
    s.escalations = j.at("escalations").get<int>();
    s.budget_used = j.at("budget_used").get<int>();
    return s;
}

json failure_trace_to_json(const FailureTrace& t) {
    json steps = json::array();
    for (const TraceStep& s : t.steps) steps.push_back(trace_step_to_json(s));
    return {{"strategy", to_string(t.strategy)},
            {"initial", configuration_to_json(t.initial)},
            {"steps", std::move(steps)}};
}

FailureTrace failure_trace_from_json(const json& j) {
    FailureTrace t{strategy_kind_from_string(j.at("strategy").get<std::string>()),
                   configuration_from_json(j.at("initial")),
                   {}};
    for (const json& s : j.at("steps")) {
        t.steps.push_back(trace_step_from_json(s));
    }
    return t;
}

std::string emit_trace_json(const FailureTrace& t) {
    return failure_trace_to_json(t).dump(2) + "\n";
}

FailureTrace parse_trace_json(const std::string& text) {
    return failure_trace_from_json(json::parse(text));
}

}  // namespace reconf
