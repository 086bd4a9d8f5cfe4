#include "reconf/sequence.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "reconf/confgen.hpp"
#include "reconf/inefficacy.hpp"
#include "reconf/strategies.hpp"

namespace reconf {

std::string to_string(StrategyKind kind) {
    switch (kind) {
        case StrategyKind::Ours: return "ours";
        case StrategyKind::RandomEdge: return "random_edge";
        case StrategyKind::Hindsight: return "hindsight";
    }
    throw std::logic_error("unreachable strategy kind");
}

StrategyKind strategy_kind_from_string(const std::string& s) {
    if (s == "ours") return StrategyKind::Ours;
    if (s == "random_edge") return StrategyKind::RandomEdge;
    if (s == "hindsight") return StrategyKind::Hindsight;
    throw std::invalid_argument("unknown strategy kind: " + s);
}

int FailureTrace::tolerable_count() const {
    return static_cast<int>(
        std::count_if(steps.begin(), steps.end(), [](const TraceStep& s) {
            return s.event.kind == FailureKind::Tolerable;
        }));
}

std::vector<FailureEvent> sample_failure_events(const ResourceMatrix& initial,
                                                RngStream& rng) {
    if (!resource_feasible(initial)) {
        throw std::invalid_argument(
            "sample_failure_events: initial resources must be feasible");
    }
    std::vector<FailureEvent> events;
    ResourceMatrix resources = initial;
    while (true) {
        auto [after, event] = apply_failure(resources, rng);
        events.push_back(event);
        if (event.kind == FailureKind::Catastrophic) break;
        resources = std::move(after);
    }
    return events;
}

namespace {

double unchanged_topology_trace(const Configuration& config,
                                const GeometryParams& params) {
    const EdgeWeightMap weights =
        weights_from_distances(config.distances, params);
    if (weights.empty()) return 0.0;
    return laplacian_from_weights(config.topology, weights).trace();
}

}  // namespace

FailureTrace replay_failure_sequence(const Configuration& initial,
                                     const std::vector<FailureEvent>& events,
                                     StrategyKind strategy,
                                     const GeometryParams& params,
                                     const SequenceOptions& options,
                                     RngStream& strategy_rng) {
    params.validate();
    initial.validate();
    if (options.escalation_cap < 0) {
        throw std::invalid_argument(
            "replay_failure_sequence: escalation cap must be >= 0");
    }

    // Materialize the resource chain once, checking that each event's kind
    // matches what feasibility says about its own outcome.
    std::vector<ResourceMatrix> chain;
    chain.reserve(events.size());
    {
        const ResourceMatrix* prev = &initial.resources;
        for (const FailureEvent& ev : events) {
            auto [after, replayed] =
                apply_failure_at(*prev, ev.robot, ev.resource);
            if (replayed.kind != ev.kind) {
                throw std::invalid_argument(
                    "replay_failure_sequence: event kind inconsistent with "
                    "the resource evolution");
            }
            chain.push_back(std::move(after));
            prev = &chain.back();
        }
    }
    std::size_t horizon = events.size();  // index of the catastrophic event
    for (std::size_t k = 0; k < events.size(); ++k) {
        if (events[k].kind == FailureKind::Catastrophic) {
            if (k + 1 != events.size()) {
                throw std::invalid_argument(
                    "replay_failure_sequence: catastrophic event must be "
                    "last");
            }
            horizon = k;
        }
    }

    FailureTrace trace{strategy, initial, {}};
    Configuration current = initial;
    for (std::size_t k = 0; k < events.size(); ++k) {
        const FailureEvent& ev = events[k];
        const ResourceMatrix& new_resources = chain[k];
        TraceStep step;
        step.step = static_cast<int>(k) + 1;
        step.event = ev;
        step.resources_after = new_resources;
        step.budget_used = params.ne;

        if (ev.kind == FailureKind::Catastrophic) {
            step.configuration = Configuration{
                current.topology, current.distances, new_resources};
            step.inefficacy_before =
                task_inefficacy(current.topology, new_resources);
            step.inefficacy_after = step.inefficacy_before;
            step.laplacian_trace = unchanged_topology_trace(current, params);
            trace.steps.push_back(std::move(step));
            break;
        }

        switch (strategy) {
            case StrategyKind::Ours: {
                GeometryParams attempt_params = params;
                std::optional<ConfigGenResult> result;
                while (true) {
                    result = generate_configuration(current, new_resources,
                                                    attempt_params);
                    if (result || step.escalations >= options.escalation_cap) {
                        break;
                    }
                    attempt_params.ne += 2;
                    ++step.escalations;
                }
                step.budget_used = attempt_params.ne;
                if (result) {
                    step.reconfigured = true;
                    step.toggled_edges = result->toggled_edges;
                    step.inefficacy_before = result->inefficacy_before;
                    step.inefficacy_after = result->inefficacy_after;
                    step.laplacian_trace = result->trace;
                    step.configuration = std::move(result->configuration);
                } else {
                    step.configuration = Configuration{
                        current.topology, current.distances, new_resources};
                    step.inefficacy_before =
                        task_inefficacy(current.topology, new_resources);
                    step.inefficacy_after = step.inefficacy_before;
                    step.laplacian_trace =
                        unchanged_topology_trace(current, params);
                }
                break;
            }
            case StrategyKind::RandomEdge: {
                const Configuration parent{current.topology, current.distances,
                                           new_resources};
                Configuration next = random_edge_strategy(
                    parent, ev.robot, params, strategy_rng);
                step.reconfigured = !(next.topology == parent.topology);
                if (step.reconfigured) {
                    for (const EdgePair& e : next.topology.edges()) {
                        if (!parent.topology.has_edge(e.first, e.second)) {
                            step.toggled_edges.push_back(e);
                        }
                    }
                }
                step.inefficacy_before =
                    task_inefficacy(parent.topology, new_resources);
                step.inefficacy_after =
                    task_inefficacy(next.topology, new_resources);
                step.laplacian_trace = unchanged_topology_trace(next, params);
                step.configuration = std::move(next);
                break;
            }
            case StrategyKind::Hindsight: {
                Oracle oracle;
                for (std::size_t j = k + 1; j < horizon; ++j) {
                    oracle.future.push_back(chain[j]);
                }
                ConfigGenResult result = hindsight_strategy(
                    current, new_resources, oracle, params);
                step.reconfigured = !result.toggled_edges.empty();
                step.toggled_edges = result.toggled_edges;
                step.inefficacy_before = result.inefficacy_before;
                step.inefficacy_after = result.inefficacy_after;
                step.laplacian_trace = result.trace;
                step.configuration = std::move(result.configuration);
                break;
            }
        }
        current = step.configuration;
        trace.steps.push_back(std::move(step));
    }
    return trace;
}

FailureTrace run_failure_sequence(const Configuration& initial,
                                  StrategyKind strategy,
                                  const GeometryParams& params,
                                  const SequenceOptions& options,
                                  std::uint64_t seed) {
    RngStream failures = make_stream(seed, "failures");
    const std::vector<FailureEvent> events =
        sample_failure_events(initial.resources, failures);
    RngStream strategy_rng = make_stream(seed, "strategy");
    return replay_failure_sequence(initial, events, strategy, params, options,
                                   strategy_rng);
}

}  // namespace reconf
