#pragma once

#include <Eigen/Dense>

namespace reconf {

/// Geometric and budget parameters shared by configuration generation and
/// formation synthesis. All lengths in meters.
struct GeometryParams {
    double d_s = 1.0;   // minimum safe distance between robots
    double d_mc = 3.0;  // communication range / minimum non-communicating distance
    double c_min = 1.0;  // smallest admissible Laplacian edge weight
    double c_max = 3.0;  // largest admissible Laplacian edge weight
    int ne = 2;  // topology-change budget, counts differing closed-adjacency entries
    Eigen::Vector3d box_min{-10.0, -10.0, -10.0};
    Eigen::Vector3d box_max{10.0, 10.0, 10.0};

    /// Slope of the affine weight-to-distance map; negative by construction.
    double kappa() const { return (d_s - d_mc) / (c_max - c_min); }

    int max_toggles() const { return ne / 2; }

    /// Throws std::invalid_argument if any invariant is violated.
    void validate() const;
};

}  // namespace reconf
