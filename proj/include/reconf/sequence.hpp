#pragma once

#include <string>
#include <vector>

#include "reconf/configuration.hpp"
#include "reconf/failure_model.hpp"
#include "reconf/params.hpp"
#include "reconf/rng.hpp"

namespace reconf {

enum class StrategyKind { Ours, RandomEdge, Hindsight };

std::string to_string(StrategyKind kind);
StrategyKind strategy_kind_from_string(const std::string& s);

/// One failure and the team's response to it. The final step of a trace
/// carries the catastrophic event and an unchanged configuration.
struct TraceStep {
    int step = 0;  // 1-based event index
    FailureEvent event;
    ResourceMatrix resources_after;
    /// Team state after the strategy's response (placeholder until filled).
    Configuration configuration{Topology::empty(1), NeighborDistanceMatrix(1),
                                ResourceMatrix::ones(1, 1)};
    bool reconfigured = false;
    std::vector<EdgePair> toggled_edges;
    double inefficacy_before = 0.0;  // previous topology on the new resources
    double inefficacy_after = 0.0;   // response topology on the new resources
    double laplacian_trace = 0.0;    // of the response's weighted Laplacian
    int escalations = 0;             // budget raises consumed at this step
    int budget_used = 0;             // change budget in effect for the response

    bool operator==(const TraceStep&) const = default;
};

struct FailureTrace {
    StrategyKind strategy = StrategyKind::Ours;
    Configuration initial;
    std::vector<TraceStep> steps;

    /// Number of leading tolerable events (the last step, if catastrophic,
    /// is excluded).
    int tolerable_count() const;

    bool operator==(const FailureTrace&) const = default;
};

struct SequenceOptions {
    /// How many times a step may raise the change budget by 2 when no
    /// improving candidate exists at the current budget. 0 disables
    /// escalation.
    int escalation_cap = 3;
};

/// Draws failures against the evolving resource matrix until the first
/// catastrophic one, inclusive. The drawn entries depend only on the
/// resource evolution, never on any strategy.
std::vector<FailureEvent> sample_failure_events(const ResourceMatrix& initial,
                                                RngStream& rng);

/// Replays a pre-sampled failure sequence under one strategy. The same event
/// list can be replayed under different strategies for like-for-like
/// comparison; only the random-edge strategy consumes the stream.
FailureTrace replay_failure_sequence(const Configuration& initial,
                                     const std::vector<FailureEvent>& events,
                                     StrategyKind strategy,
                                     const GeometryParams& params,
                                     const SequenceOptions& options,
                                     RngStream& strategy_rng);

/// sample_failure_events + replay_failure_sequence on streams "failures" and
/// "strategy" derived from the given seed.
FailureTrace run_failure_sequence(const Configuration& initial,
                                  StrategyKind strategy,
                                  const GeometryParams& params,
                                  const SequenceOptions& options,
                                  std::uint64_t seed);

}  // namespace reconf
