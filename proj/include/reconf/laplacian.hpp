#pragma once

#include <Eigen/Dense>
#include <map>
#include <optional>

#include "reconf/params.hpp"
#include "reconf/topology.hpp"

namespace reconf {

using EdgeWeightMap = std::map<EdgePair, double>;

/// Weighted graph Laplacian: symmetric, zero row sums, nonpositive
/// off-diagonal entries. Constructed through laplacian_from_weights so the
/// invariants hold by construction.
class WeightedLaplacian {
public:
    explicit WeightedLaplacian(Eigen::MatrixXd m);

    const Eigen::MatrixXd& matrix() const { return m_; }
    int n() const { return static_cast<int>(m_.rows()); }
    double trace() const { return m_.trace(); }

private:
    Eigen::MatrixXd m_;
};

/// L = Diag(A*1) - A where A carries the given positive edge weights.
/// Throws if any topology edge is missing from the weight map.
WeightedLaplacian laplacian_from_weights(const Topology& topology,
                                         const EdgeWeightMap& weights);

/// Desired pairwise distances for communicating robots. Non-edges carry an
/// explicit absent marker, never a sentinel float.
class NeighborDistanceMatrix {
public:
    explicit NeighborDistanceMatrix(int n);

    int n() const { return n_; }
    bool has(int i, int j) const { return present_(i, j) != 0; }
    std::optional<double> at(int i, int j) const;
    /// Distance of a known edge; throws if (i,j) has no finite entry.
    double edge_distance(int i, int j) const;
    void set(int i, int j, double d);
    void clear(int i, int j);

    /// Normalized set of pairs carrying finite entries.
    std::vector<EdgePair> finite_pairs() const;

    bool operator==(const NeighborDistanceMatrix& other) const;

private:
    int n_;
    Eigen::MatrixXd values_;
    Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic> present_;
};

/// Affine map from Laplacian off-diagonal magnitudes to inter-robot
/// distances: d = kappa * (|L_ij| - c_min) + d_mc on edges, absent elsewhere.
/// Throws if a nonzero off-diagonal magnitude lies outside [c_min, c_max]
/// (tolerance 1e-9).
NeighborDistanceMatrix distance_from_laplacian(const WeightedLaplacian& lap,
                                               const GeometryParams& params);

/// Inverse of the distance map: recovers one weight in [c_min, c_max] per
/// finite distance entry. Throws if a distance lies outside [d_s, d_mc]
/// (tolerance 1e-9).
EdgeWeightMap weights_from_distances(const NeighborDistanceMatrix& distances,
                                     const GeometryParams& params);

}  // namespace reconf
