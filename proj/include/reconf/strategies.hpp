#pragma once

#include <vector>

#include "reconf/confgen.hpp"
#include "reconf/configuration.hpp"
#include "reconf/rng.hpp"

namespace reconf {

/// Baseline response to a failure: the failed robot connects to one
/// uniformly-chosen robot it does not currently communicate with; the new
/// edge gets the loosest legal distance d_mc. If the robot already talks to
/// everyone, the configuration is returned unchanged.
Configuration random_edge_strategy(const Configuration& config,
                                   int failed_robot,
                                   const GeometryParams& params,
                                   RngStream& rng);

/// task_inefficacy(random topology) - task_inefficacy(our topology) on the
/// same resources; positive means our strategy left less inefficacy behind.
double delta_v(const ResourceMatrix& resources, const Topology& topo_random,
               const Topology& topo_ours);

/// Foreknowledge of the remaining resource losses: the post-failure matrices
/// of the failures yet to come, in order.
struct Oracle {
    std::vector<ResourceMatrix> future;
};

/// Throws unless each consecutive step current -> future[0] -> future[1] ...
/// differs in exactly one entry, flipped 1 -> 0.
void validate_oracle(const ResourceMatrix& current, const Oracle& oracle);

/// Inefficacy of a fixed topology summed over the current resources and
/// every future matrix the oracle provides.
double hindsight_inefficacy(const Topology& topology,
                            const ResourceMatrix& current,
                            const Oracle& oracle);

/// Clairvoyant reconfiguration: over all connected within-budget candidates
/// (the unchanged topology included, with no requirement to improve),
/// minimizes hindsight inefficacy; ties broken by smaller optimized
/// Laplacian trace, then lexicographically smallest toggle set. Weights and
/// distances come from the same inner optimization as the main strategy.
ConfigGenResult hindsight_strategy(const Configuration& prev,
                                   const ResourceMatrix& current,
                                   const Oracle& oracle,
                                   const GeometryParams& params);

}  // namespace reconf
