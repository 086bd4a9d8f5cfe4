#pragma once

#include <vector>

#include "reconf/topology.hpp"

namespace reconf {

/// One admissible topology change relative to a previous topology.
struct TopologyCandidate {
    Topology topology;
    std::vector<EdgePair> toggled_edges;  // sorted lexicographically
    int frobenius_cost = 0;  // squared Frobenius distance of closed adjacencies
};

/// All simple topologies whose closed adjacency differs from prev's in at
/// most ne entries, i.e. up to ne/2 edge toggles. The unchanged topology is
/// first; toggle sets are emitted in lexicographic order within each size.
std::vector<TopologyCandidate> enumerate_topology_candidates(
    const Topology& prev, int ne);

}  // namespace reconf
