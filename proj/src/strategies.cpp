#include "reconf/strategies.hpp"

#include <limits>
#include <stdexcept>
#include <utility>

#include "reconf/candidates.hpp"
#include "reconf/inefficacy.hpp"
#include "reconf/weight_lp.hpp"

namespace reconf {

Configuration random_edge_strategy(const Configuration& config,
                                   int failed_robot,
                                   const GeometryParams& params,
                                   RngStream& rng) {
    config.validate();
    params.validate();
    if (failed_robot < 0 || failed_robot >= config.topology.n()) {
        throw std::invalid_argument(
            "random_edge_strategy: failed robot index out of range");
    }
    const std::vector<int> candidates =
        config.topology.non_neighbors(failed_robot);
    if (candidates.empty()) return config;

    const int partner =
        candidates[rng.bounded(candidates.size())];
    const EdgePair added = normalized_edge(failed_robot, partner);
    Configuration out{config.topology.with_toggled({added}), config.distances,
                      config.resources};
    out.distances.set(added.first, added.second, params.d_mc);
    return out;
}

double delta_v(const ResourceMatrix& resources, const Topology& topo_random,
               const Topology& topo_ours) {
    if (topo_random.n() != topo_ours.n() ||
        topo_random.n() != resources.robots()) {
        throw std::invalid_argument("delta_v: dimension mismatch");
    }
    return task_inefficacy(topo_random, resources) -
           task_inefficacy(topo_ours, resources);
}

void validate_oracle(const ResourceMatrix& current, const Oracle& oracle) {
    const ResourceMatrix* prev = &current;
    for (const ResourceMatrix& next : oracle.future) {
        if (next.robots() != prev->robots() ||
            next.resource_kinds() != prev->resource_kinds()) {
            throw std::invalid_argument("oracle: dimension mismatch");
        }
        int drops = 0;
        int other_changes = 0;
        for (int i = 0; i < next.robots(); ++i) {
            for (int j = 0; j < next.resource_kinds(); ++j) {
                const int before = prev->gamma(i, j);
                const int after = next.gamma(i, j);
                if (before == 1 && after == 0) {
                    ++drops;
                } else if (before != after) {
                    ++other_changes;
                }
            }
        }
        if (drops != 1 || other_changes != 0) {
            throw std::invalid_argument(
                "oracle: consecutive matrices must differ by exactly one "
                "1 -> 0 flip");
        }
        prev = &next;
    }
}

double hindsight_inefficacy(const Topology& topology,
                            const ResourceMatrix& current,
                            const Oracle& oracle) {
    double sum = task_inefficacy(topology, current);
    for (const ResourceMatrix& future : oracle.future) {
        sum += task_inefficacy(topology, future);
    }
    return sum;
}

ConfigGenResult hindsight_strategy(const Configuration& prev,
                                   const ResourceMatrix& current,
                                   const Oracle& oracle,
                                   const GeometryParams& params) {
    params.validate();
    prev.validate();
    current.validate();
    if (current.robots() != prev.topology.n()) {
        throw std::invalid_argument(
            "hindsight_strategy: resource matrix row count must match robot "
            "count");
    }
    if (!resource_feasible(current)) {
        throw std::invalid_argument(
            "hindsight_strategy: current resource matrix is infeasible");
    }
    if (prev.topology.n() >= 2 && !is_connected(prev.topology)) {
        throw std::invalid_argument(
            "hindsight_strategy: previous topology must be connected");
    }
    validate_oracle(current, oracle);

    const std::vector<TopologyCandidate> candidates =
        enumerate_topology_candidates(prev.topology, params.ne);

    // First pass: the hindsight objective alone decides which candidates can
    // win; the inner weight optimization is only needed to break ties.
    std::vector<double> objective(candidates.size(),
                                  std::numeric_limits<double>::infinity());
    double best_objective = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < candidates.size(); ++k) {
        if (!is_connected(candidates[k].topology)) continue;
        objective[k] =
            hindsight_inefficacy(candidates[k].topology, current, oracle);
        best_objective = std::min(best_objective, objective[k]);
    }

    const TopologyCandidate* winner = nullptr;
    double winner_trace = 0.0;
    EdgeWeightMap winner_weights;
    for (std::size_t k = 0; k < candidates.size(); ++k) {
        if (objective[k] != best_objective) continue;
        std::optional<WeightLpSolution> lp =
            optimize_edge_weights(candidates[k].topology, params);
        const double trace = lp ? lp->trace : 0.0;  // single-robot team: no edges
        const bool improves =
            !winner || trace < winner_trace ||
            (trace == winner_trace &&
             candidates[k].toggled_edges < winner->toggled_edges);
        if (improves) {
            winner = &candidates[k];
            winner_trace = trace;
            winner_weights = lp ? std::move(lp->weights) : EdgeWeightMap{};
        }
    }

    WeightedLaplacian laplacian =
        laplacian_from_weights(winner->topology, winner_weights);
    NeighborDistanceMatrix distances =
        distance_from_laplacian(laplacian, params);
    ConfigGenResult result{
        Configuration{winner->topology, std::move(distances), current},
        std::move(laplacian),
        winner_trace,
        task_inefficacy(prev.topology, current),
        task_inefficacy(winner->topology, current),
        winner->toggled_edges,
        static_cast<int>(candidates.size())};
    result.configuration.validate();
    return result;
}

}  // namespace reconf
