#pragma once

#include <optional>

#include "reconf/laplacian.hpp"
#include "reconf/params.hpp"
#include "reconf/topology.hpp"

namespace reconf {

struct WeightLpSolution {
    EdgeWeightMap weights;  // one weight per edge, in [c_min, c_max]
    double trace = 0.0;     // 2 * sum of weights
};

/// Minimizes trace(L) over edge weights subject to, per edge,
/// w in [c_min, c_max] and, per vertex, sum of incident weights >= c_max
/// (equivalently every Laplacian diagonal entry >= c_max).
///
/// Solved exactly with a bounded-variable primal simplex; the all-weights-
/// at-c_max point is feasible whenever no vertex is isolated, so no phase-1
/// is needed. Throws std::invalid_argument on a disconnected input with
/// n >= 2; returns nullopt when a vertex is isolated (only the single-robot
/// topology once disconnected inputs are rejected).
std::optional<WeightLpSolution> optimize_edge_weights(
    const Topology& topology, const GeometryParams& params);

}  // namespace reconf
