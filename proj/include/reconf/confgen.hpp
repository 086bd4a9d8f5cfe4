#pragma once

#include <optional>
#include <string>
#include <vector>

#include "reconf/configuration.hpp"
#include "reconf/laplacian.hpp"
#include "reconf/params.hpp"

namespace reconf {

/// Absolute margin by which a candidate topology must reduce task inefficacy
/// to count as a strict improvement.
inline constexpr double kInefficacyDecreaseTolerance = 1e-9;

struct ConfigGenResult {
    Configuration configuration;
    WeightedLaplacian laplacian;
    double trace = 0.0;
    double inefficacy_before = 0.0;
    double inefficacy_after = 0.0;
    std::vector<EdgePair> toggled_edges;
    int candidate_count = 0;  // candidates enumerated within budget, incl. unchanged
};

/// Reconfigures the team after a resource change: enumerates every topology
/// within the edge-change budget, keeps those that are connected and strictly
/// reduce task inefficacy under the new resource matrix, optimizes edge
/// weights for each survivor, and returns the one with minimal Laplacian
/// trace (ties: smaller resulting inefficacy, then lexicographically smallest
/// toggle set). Distances are derived from the optimized Laplacian.
///
/// Returns nullopt when no candidate qualifies ("no improving candidate").
/// Throws std::invalid_argument if new_resources is infeasible or the
/// previous topology is disconnected.
std::optional<ConfigGenResult> generate_configuration(
    const Configuration& prev, const ResourceMatrix& new_resources,
    const GeometryParams& params);

struct ConstraintCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct ConstraintReport {
    std::vector<ConstraintCheck> checks;

    bool all_passed() const;
    std::vector<std::string> violations() const;  // names of failed checks
};

/// Re-validates a reconfiguration result against every structural constraint
/// of the optimization it came from: zero Laplacian row sums, a positive
/// connectivity certificate, symmetric unit-diagonal closed adjacency,
/// degree lower bounds, per-edge weight-magnitude bounds, the topology
/// change budget, and strict inefficacy decrease.
ConstraintReport verify_misdp_constraints(const ConfigGenResult& result,
                                          const Configuration& prev,
                                          const GeometryParams& params);

}  // namespace reconf
