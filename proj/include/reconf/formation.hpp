#pragma once

#include <Eigen/Dense>
#include <vector>

#include "reconf/configuration.hpp"
#include "reconf/params.hpp"

namespace reconf {

/// Robot positions in meters, one point per robot, indexed like the topology.
using Formation = std::vector<Eigen::Vector3d>;

/// Sum over edges of (||X_i - X_j|| - d_ij)^2 against the configuration's
/// desired distances. Throws if the formation size disagrees with the
/// topology or a desired distance is missing on an edge.
double stress_objective(const Formation& x, const Configuration& config);

/// Largest exponent fed to std::exp by the penalty; e^700 is near the top of
/// the double range, so anything above is clamped and counted as saturated.
inline constexpr double kPenaltyExponentMax = 700.0;

/// Exponential constraint penalty e^{h*y} for signed violation y (positive =
/// violated). Requires h > 0.
double penalty(double y, double h);

/// True when h*y reaches the exponent clamp, i.e. the returned penalty value
/// saturated.
bool penalty_saturated(double y, double h);

/// Soft energy terms, one group per hard constraint family. Every pair/axis
/// contributes a term regardless of sign, so the groups vanish only in the
/// limit of large hardness on strictly feasible formations.
struct EnergyBreakdown {
    double stress = 0.0;
    double edge_min_penalty = 0.0;   // edges closer than d_s
    double edge_max_penalty = 0.0;   // edges farther than d_mc
    double non_edge_penalty = 0.0;   // non-edges closer than d_mc
    double box_penalty = 0.0;        // per-axis containment, both sides
    int saturated_terms = 0;

    double total() const {
        return stress + edge_min_penalty + edge_max_penalty +
               non_edge_penalty + box_penalty;
    }
};

EnergyBreakdown energy_breakdown(const Formation& x, const Configuration& config,
                                 const GeometryParams& params, double h);

/// stress_objective plus the four penalty groups at hardness h.
double energy(const Formation& x, const Configuration& config,
              const GeometryParams& params, double h);

/// Hard-constraint slack: all margins are nonnegative exactly on formations
/// satisfying the separation, communication-range and box constraints.
/// Groups with no member (e.g. non-edges of a complete graph) report +inf.
struct FeasibilityReport {
    bool feasible = false;
    double edge_min_margin = 0.0;  // min over edges of ||X_i-X_j|| - d_s
    double edge_max_margin = 0.0;  // min over edges of d_mc - ||X_i-X_j||
    double non_edge_margin = 0.0;  // min over non-edges of ||X_i-X_j|| - d_mc
    double box_margin = 0.0;       // min over robots/axes of distance to the box faces

    double worst_margin() const;
};

/// Absolute slack (meters) below which a hard constraint counts as violated.
inline constexpr double kFeasibilityTolerance = 1e-6;

FeasibilityReport check_feasibility(const Formation& x,
                                    const Configuration& config,
                                    const GeometryParams& params);

/// Cube-ish lattice with spacing d_mc centered in the box; the cold-start
/// initial guess when no previous formation exists.
Formation grid_formation(int n, const GeometryParams& params);

/// Per-coordinate clamp of every point into the box.
Formation clamp_into_box(Formation x, const GeometryParams& params);

}  // namespace reconf
