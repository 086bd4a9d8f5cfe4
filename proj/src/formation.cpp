#include "reconf/formation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace reconf {

namespace {

void require_matching_size(const Formation& x, const Configuration& config) {
    if (static_cast<int>(x.size()) != config.topology.n()) {
        throw std::invalid_argument(
            "formation size does not match the topology's robot count");
    }
}

}  // namespace

double stress_objective(const Formation& x, const Configuration& config) {
    require_matching_size(x, config);
    double sum = 0.0;
    for (const EdgePair& e : config.topology.edges()) {
        const double desired = config.distances.edge_distance(e.first, e.second);
        const double actual = (x[static_cast<std::size_t>(e.first)] -
                               x[static_cast<std::size_t>(e.second)])
                                  .norm();
        const double gap = actual - desired;
        sum += gap * gap;
    }
    return sum;
}

double penalty(double y, double h) {
    if (!(h > 0.0)) {
        throw std::invalid_argument("penalty hardness must be positive");
    }
    return std::exp(std::min(h * y, kPenaltyExponentMax));
}

bool penalty_saturated(double y, double h) {
    return h * y >= kPenaltyExponentMax;
}

EnergyBreakdown energy_breakdown(const Formation& x, const Configuration& config,
                                 const GeometryParams& params, double h) {
    require_matching_size(x, config);
    EnergyBreakdown b;
    b.stress = stress_objective(x, config);

    const int n = config.topology.n();
    auto add = [&](double& group, double violation) {
        group += penalty(violation, h);
        if (penalty_saturated(violation, h)) ++b.saturated_terms;
    };

    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double dist = (x[static_cast<std::size_t>(i)] -
                                 x[static_cast<std::size_t>(j)])
                                    .norm();
            if (config.topology.has_edge(i, j)) {
                add(b.edge_min_penalty, params.d_s - dist);
                add(b.edge_max_penalty, dist - params.d_mc);
            } else {
                add(b.non_edge_penalty, params.d_mc - dist);
            }
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int axis = 0; axis < 3; ++axis) {
            const double c = x[static_cast<std::size_t>(i)](axis);
            add(b.box_penalty, params.box_min(axis) - c);
            add(b.box_penalty, c - params.box_max(axis));
        }
    }
    return b;
}

double energy(const Formation& x, const Configuration& config,
              const GeometryParams& params, double h) {
    return energy_breakdown(x, config, params, h).total();
}

double FeasibilityReport::worst_margin() const {
    return std::min(std::min(edge_min_margin, edge_max_margin),
                    std::min(non_edge_margin, box_margin));
}

FeasibilityReport check_feasibility(const Formation& x,
                                    const Configuration& config,
                                    const GeometryParams& params) {
    require_matching_size(x, config);
    constexpr double kInf = std::numeric_limits<double>::infinity();
    FeasibilityReport report;
    report.edge_min_margin = kInf;
    report.edge_max_margin = kInf;
    report.non_edge_margin = kInf;
    report.box_margin = kInf;

    const int n = config.topology.n();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double dist = (x[static_cast<std::size_t>(i)] -
                                 x[static_cast<std::size_t>(j)])
                                    .norm();
            if (config.topology.has_edge(i, j)) {
                report.edge_min_margin =
                    std::min(report.edge_min_margin, dist - params.d_s);
                report.edge_max_margin =
                    std::min(report.edge_max_margin, params.d_mc - dist);
            } else {
                report.non_edge_margin =
                    std::min(report.non_edge_margin, dist - params.d_mc);
            }
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int axis = 0; axis < 3; ++axis) {
            const double c = x[static_cast<std::size_t>(i)](axis);
            report.box_margin =
                std::min(report.box_margin, c - params.box_min(axis));
            report.box_margin =
                std::min(report.box_margin, params.box_max(axis) - c);
        }
    }
    report.feasible = report.worst_margin() >= -kFeasibilityTolerance;
    return report;
}

Formation grid_formation(int n, const GeometryParams& params) {
    if (n < 1) throw std::invalid_argument("grid_formation: n must be >= 1");
    int side = 1;
    while (side * side * side < n) ++side;
    const Eigen::Vector3d center = 0.5 * (params.box_min + params.box_max);
    const double span = (side - 1) * params.d_mc;
    Formation points;
    points.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const int ix = i % side;
        const int iy = (i / side) % side;
        const int iz = i / (side * side);
        Eigen::Vector3d p = center - Eigen::Vector3d::Constant(span / 2.0) +
                            params.d_mc * Eigen::Vector3d(ix, iy, iz);
        points.push_back(p);
    }
    return clamp_into_box(std::move(points), params);
}

Formation clamp_into_box(Formation x, const GeometryParams& params) {
    for (Eigen::Vector3d& p : x) {
        p = p.cwiseMax(params.box_min).cwiseMin(params.box_max);
    }
    return x;
}

}  // namespace reconf
