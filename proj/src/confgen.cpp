#include "reconf/confgen.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "reconf/candidates.hpp"
#include "reconf/inefficacy.hpp"
#include "reconf/weight_lp.hpp"

namespace reconf {

namespace {

std::string format_scalar(double v) {
    std::ostringstream out;
    out.precision(12);
    out << v;
    return out.str();
}

}  // namespace

std::optional<ConfigGenResult> generate_configuration(
    const Configuration& prev, const ResourceMatrix& new_resources,
    const GeometryParams& params) {
    params.validate();
    prev.validate();
    new_resources.validate();
    if (new_resources.robots() != prev.topology.n()) {
        throw std::invalid_argument(
            "generate_configuration: resource matrix row count must match "
            "robot count");
    }
    if (!resource_feasible(new_resources)) {
        throw std::invalid_argument(
            "generate_configuration: new resource matrix is infeasible");
    }
    if (prev.topology.n() >= 2 && !is_connected(prev.topology)) {
        throw std::invalid_argument(
            "generate_configuration: previous topology must be connected");
    }

    const double inefficacy_before =
        task_inefficacy(prev.topology, new_resources);

    const std::vector<TopologyCandidate> candidates =
        enumerate_topology_candidates(prev.topology, params.ne);

    struct Best {
        double trace = 0.0;
        double inefficacy_after = 0.0;
        const TopologyCandidate* candidate = nullptr;
        EdgeWeightMap weights;
    };
    std::optional<Best> best;

    for (const TopologyCandidate& candidate : candidates) {
        if (!is_connected(candidate.topology)) continue;
        const double inefficacy_after =
            task_inefficacy(candidate.topology, new_resources);
        if (!(inefficacy_after <
              inefficacy_before - kInefficacyDecreaseTolerance)) {
            continue;
        }
        std::optional<WeightLpSolution> lp =
            optimize_edge_weights(candidate.topology, params);
        if (!lp) continue;  // single-robot topology; nothing to weight

        const bool improves =
            !best || lp->trace < best->trace ||
            (lp->trace == best->trace &&
             (inefficacy_after < best->inefficacy_after ||
              (inefficacy_after == best->inefficacy_after &&
               candidate.toggled_edges < best->candidate->toggled_edges)));
        if (improves) {
            best = Best{lp->trace, inefficacy_after, &candidate,
                        std::move(lp->weights)};
        }
    }

    if (!best) return std::nullopt;

    WeightedLaplacian laplacian =
        laplacian_from_weights(best->candidate->topology, best->weights);
    NeighborDistanceMatrix distances =
        distance_from_laplacian(laplacian, params);

    ConfigGenResult result{
        Configuration{best->candidate->topology, std::move(distances),
                      new_resources},
        std::move(laplacian),
        best->trace,
        inefficacy_before,
        best->inefficacy_after,
        best->candidate->toggled_edges,
        static_cast<int>(candidates.size())};
    result.configuration.validate();
    return result;
}

bool ConstraintReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const ConstraintCheck& c) { return c.passed; });
}

std::vector<std::string> ConstraintReport::violations() const {
    std::vector<std::string> names;
    for (const ConstraintCheck& c : checks) {
        if (!c.passed) names.push_back(c.name);
    }
    return names;
}

ConstraintReport verify_misdp_constraints(const ConfigGenResult& result,
                                          const Configuration& prev,
                                          const GeometryParams& params) {
    constexpr double kTol = 1e-9;
    ConstraintReport report;
    const Eigen::MatrixXd& laplacian = result.laplacian.matrix();
    const Topology& topology = result.configuration.topology;
    const int n = topology.n();

    {
        double worst = 0.0;
        for (int i = 0; i < laplacian.rows(); ++i) {
            worst = std::max(worst, std::abs(laplacian.row(i).sum()));
        }
        report.checks.push_back({"laplacian-row-sums-zero", worst <= kTol,
                                 "max |row sum| = " + format_scalar(worst)});
    }
    {
        const ConnectivityCertificate cert = connectivity(topology);
        const bool ok = cert.connected && cert.mu > kConnectivityTolerance;
        report.checks.push_back(
            {"connectivity-certificate-positive", ok,
             "mu = " + format_scalar(cert.mu)});
    }
    {
        const Eigen::MatrixXi closed = closed_adjacency(topology);
        const bool ok = (closed.diagonal().array() == 1).all() &&
                        closed == closed.transpose().eval();
        report.checks.push_back({"closed-adjacency-symmetric-unit-diagonal",
                                 ok, ""});
    }
    {
        double worst_deficit = 0.0;
        for (int i = 0; i < laplacian.rows(); ++i) {
            worst_deficit =
                std::max(worst_deficit, params.c_max - laplacian(i, i));
        }
        report.checks.push_back(
            {"degree-lower-bound", worst_deficit <= kTol,
             "max c_max - L_ii = " + format_scalar(worst_deficit)});
    }
    {
        bool ok = true;
        std::string detail;
        for (int i = 0; i < n && ok; ++i) {
            for (int j = i + 1; j < n && ok; ++j) {
                const double magnitude = std::abs(laplacian(i, j));
                if (topology.has_edge(i, j)) {
                    if (magnitude < params.c_min - kTol ||
                        magnitude > params.c_max + kTol) {
                        ok = false;
                        detail = "edge weight out of range: " +
                                 format_scalar(magnitude);
                    }
                } else if (magnitude > kTol) {
                    ok = false;
                    detail = "nonzero entry on a non-edge: " +
                             format_scalar(magnitude);
                }
            }
        }
        report.checks.push_back({"off-diagonal-bounds", ok, detail});
    }
    {
        const Eigen::MatrixXi diff =
            closed_adjacency(topology) - closed_adjacency(prev.topology);
        const int frobenius_sq = diff.cwiseAbs2().sum();
        report.checks.push_back(
            {"change-budget", frobenius_sq <= params.ne,
             "squared Frobenius change = " + std::to_string(frobenius_sq) +
                 ", budget = " + std::to_string(params.ne)});
    }
    {
        const double before =
            task_inefficacy(prev.topology, result.configuration.resources);
        const double after =
            task_inefficacy(topology, result.configuration.resources);
        const bool ok = after < before - kInefficacyDecreaseTolerance;
        report.checks.push_back(
            {"strict-inefficacy-decrease", ok,
             "before = " + format_scalar(before) +
                 ", after = " + format_scalar(after)});
    }
    {
        bool ok = true;
        const NeighborDistanceMatrix& distances =
            result.configuration.distances;
        for (const EdgePair& e : topology.edges()) {
            const double d = distances.edge_distance(e.first, e.second);
            if (d < params.d_s - kTol || d > params.d_mc + kTol) {
                ok = false;
                break;
            }
        }
        report.checks.push_back({"distances-in-range", ok, ""});
    }
    return report;
}

}  // namespace reconf
