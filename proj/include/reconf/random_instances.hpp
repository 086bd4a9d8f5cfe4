#pragma once

#include "reconf/resources.hpp"
#include "reconf/rng.hpp"
#include "reconf/topology.hpp"

namespace reconf {

/// Connected random graph on n >= 2 vertices with exactly
/// floor(target_density * n(n-1)/2) edges: a uniform random spanning tree
/// (random Prufer sequence) plus uniformly-sampled extra edges. Throws when
/// the requested density cannot hold a spanning tree.
Topology random_connected_graph(int n, double target_density, RngStream& rng);

/// Resource matrix with exactly ceil(p_r * n * r / 100) ones at unique
/// positions, feasible at the given threshold: each column first receives
/// `threshold` ones at distinct random rows, the remainder fills uniformly
/// among empty cells. Throws when the one-count cannot satisfy feasibility.
ResourceMatrix random_feasible_resources(int n, int r, double p_r,
                                         int threshold, RngStream& rng);

/// Number of ones random_feasible_resources will place, with the product
/// snapped before the ceiling so 50% of 12 entries is 6, not 7.
int resource_one_count(int n, int r, double p_r);

}  // namespace reconf
