#pragma once

#include "reconf/laplacian.hpp"
#include "reconf/resources.hpp"
#include "reconf/topology.hpp"

namespace reconf {

/// Full team state: communication topology, desired neighbor distances and
/// the resource distribution. The distance matrix carries finite entries on
/// exactly the topology's edges.
struct Configuration {
    Topology topology;
    NeighborDistanceMatrix distances;
    ResourceMatrix resources;

    /// Throws if the finite pattern of distances disagrees with the edge set
    /// or the dimensions are inconsistent.
    void validate() const;

    bool operator==(const Configuration&) const = default;
};

}  // namespace reconf
