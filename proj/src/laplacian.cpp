#include "reconf/laplacian.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace reconf {

namespace {
constexpr double kRowSumTol = 1e-12;
constexpr double kWeightTol = 1e-9;
}  // namespace

WeightedLaplacian::WeightedLaplacian(Eigen::MatrixXd m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols())
        throw std::invalid_argument("WeightedLaplacian: matrix must be square");
    const int n = static_cast<int>(m_.rows());
    for (int i = 0; i < n; ++i) {
        if (std::abs(m_.row(i).sum()) > kRowSumTol * std::max(1.0, m_(i, i)))
            throw std::invalid_argument("WeightedLaplacian: row sums not zero");
        for (int j = 0; j < n; ++j) {
            if (i != j && m_(i, j) > 0)
                throw std::invalid_argument(
                    "WeightedLaplacian: positive off-diagonal entry");
            if (std::abs(m_(i, j) - m_(j, i)) > kRowSumTol)
                throw std::invalid_argument("WeightedLaplacian: not symmetric");
        }
    }
}

WeightedLaplacian laplacian_from_weights(const Topology& topology,
                                         const EdgeWeightMap& weights) {
    const int n = topology.n();
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (const auto& e : topology.edges()) {
        auto it = weights.find(e);
        if (it == weights.end())
            throw std::invalid_argument("laplacian_from_weights: missing weight for edge (" +
                                        std::to_string(e.first + 1) + "," +
                                        std::to_string(e.second + 1) + ")");
        if (!(it->second > 0))
            throw std::invalid_argument(
                "laplacian_from_weights: weights must be positive");
        a(e.first, e.second) = it->second;
        a(e.second, e.first) = it->second;
    }
    Eigen::MatrixXd l = -a;
    for (int i = 0; i < n; ++i) l(i, i) = a.row(i).sum();
    return WeightedLaplacian(std::move(l));
}

NeighborDistanceMatrix::NeighborDistanceMatrix(int n)
    : n_(n),
      values_(Eigen::MatrixXd::Zero(n, n)),
      present_(Eigen::Matrix<std::uint8_t, Eigen::Dynamic,
                             Eigen::Dynamic>::Zero(n, n)) {
    if (n < 1)
        throw std::invalid_argument("NeighborDistanceMatrix: n must be >= 1");
}

std::optional<double> NeighborDistanceMatrix::at(int i, int j) const {
    if (!has(i, j)) return std::nullopt;
    return values_(i, j);
}

double NeighborDistanceMatrix::edge_distance(int i, int j) const {
    if (!has(i, j))
        throw std::out_of_range("NeighborDistanceMatrix: no entry for pair");
    return values_(i, j);
}

void NeighborDistanceMatrix::set(int i, int j, double d) {
    if (i == j)
        throw std::invalid_argument("NeighborDistanceMatrix: diagonal entry");
    if (!std::isfinite(d) || d <= 0)
        throw std::invalid_argument(
            "NeighborDistanceMatrix: distance must be finite and positive");
    values_(i, j) = values_(j, i) = d;
    present_(i, j) = present_(j, i) = 1;
}

void NeighborDistanceMatrix::clear(int i, int j) {
    values_(i, j) = values_(j, i) = 0.0;
    present_(i, j) = present_(j, i) = 0;
}

std::vector<EdgePair> NeighborDistanceMatrix::finite_pairs() const {
    std::vector<EdgePair> out;
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (has(i, j)) out.push_back({i, j});
    return out;
}

bool NeighborDistanceMatrix::operator==(
    const NeighborDistanceMatrix& other) const {
    return n_ == other.n_ && present_ == other.present_ &&
           values_ == other.values_;
}

EdgeWeightMap weights_from_distances(const NeighborDistanceMatrix& distances,
                                     const GeometryParams& params) {
    EdgeWeightMap weights;
    for (const EdgePair& e : distances.finite_pairs()) {
        const double d = distances.edge_distance(e.first, e.second);
        if (d < params.d_s - kWeightTol || d > params.d_mc + kWeightTol)
            throw std::invalid_argument(
                "weights_from_distances: distance outside [d_s, d_mc]");
        const double w = params.c_min + (d - params.d_mc) / params.kappa();
        weights[e] = std::clamp(w, params.c_min, params.c_max);
    }
    return weights;
}

NeighborDistanceMatrix distance_from_laplacian(const WeightedLaplacian& lap,
                                               const GeometryParams& params) {
    const int n = lap.n();
    const Eigen::MatrixXd& l = lap.matrix();
    const double kappa = params.kappa();
    NeighborDistanceMatrix d(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (l(i, j) < 0) {
                const double w = std::abs(l(i, j));
                if (w < params.c_min - kWeightTol ||
                    w > params.c_max + kWeightTol)
                    throw std::invalid_argument(
                        "distance_from_laplacian: off-diagonal magnitude "
                        "outside [c_min, c_max]");
                const double dist = kappa * (w - params.c_min) + params.d_mc;
                d.set(i, j, std::clamp(dist, params.d_s, params.d_mc));
            }
        }
    }
    return d;
}

}  // namespace reconf
