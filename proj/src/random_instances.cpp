#include "reconf/random_instances.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <vector>

namespace reconf {

namespace {

/// First `take` entries of a uniform random permutation of `items`
/// (partial Fisher-Yates).
template <typename T>
std::vector<T> sample_without_replacement(std::vector<T> items,
                                          std::size_t take, RngStream& rng) {
    for (std::size_t i = 0; i < take; ++i) {
        const std::size_t j =
            i + static_cast<std::size_t>(rng.bounded(items.size() - i));
        std::swap(items[i], items[j]);
    }
    items.resize(take);
    return items;
}

std::vector<EdgePair> random_spanning_tree(int n, RngStream& rng) {
    if (n == 2) return {{0, 1}};
    // A uniform labeled tree corresponds to a uniform Prufer sequence.
    std::vector<int> prufer(static_cast<std::size_t>(n - 2));
    for (int& x : prufer) x = rng.uniform_int(0, n - 1);

    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (int x : prufer) ++degree[static_cast<std::size_t>(x)];

    std::vector<EdgePair> edges;
    edges.reserve(static_cast<std::size_t>(n - 1));
    for (int x : prufer) {
        for (int leaf = 0; leaf < n; ++leaf) {
            if (degree[static_cast<std::size_t>(leaf)] == 1) {
                edges.push_back(normalized_edge(leaf, x));
                degree[static_cast<std::size_t>(leaf)] = 0;
                --degree[static_cast<std::size_t>(x)];
                break;
            }
        }
    }
    int first = -1;
    for (int v = 0; v < n; ++v) {
        if (degree[static_cast<std::size_t>(v)] == 1) {
            if (first < 0) {
                first = v;
            } else {
                edges.push_back(normalized_edge(first, v));
            }
        }
    }
    return edges;
}

}  // namespace

Topology random_connected_graph(int n, double target_density, RngStream& rng) {
    if (n < 2) {
        throw std::invalid_argument("random_connected_graph: n must be >= 2");
    }
    const int max_edges = n * (n - 1) / 2;
    const int target = static_cast<int>(
        std::floor(target_density * max_edges + 1e-9));
    if (target < n - 1 || target > max_edges) {
        throw std::invalid_argument(
            "random_connected_graph: density below spanning-tree minimum or "
            "above 1");
    }

    std::vector<EdgePair> edges = random_spanning_tree(n, rng);
    const std::set<EdgePair> tree(edges.begin(), edges.end());
    std::vector<EdgePair> rest;
    rest.reserve(static_cast<std::size_t>(max_edges - n + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (!tree.count({i, j})) rest.push_back({i, j});
        }
    }
    const std::size_t extra = static_cast<std::size_t>(target - (n - 1));
    for (EdgePair e : sample_without_replacement(std::move(rest), extra, rng)) {
        edges.push_back(e);
    }
    return Topology(n, std::move(edges));
}

int resource_one_count(int n, int r, double p_r) {
    return static_cast<int>(std::ceil(p_r * n * r / 100.0 - 1e-9));
}

ResourceMatrix random_feasible_resources(int n, int r, double p_r,
                                         int threshold, RngStream& rng) {
    if (n < 1 || r < 1 || threshold < 1 || !(p_r > 0.0) || p_r > 100.0) {
        throw std::invalid_argument(
            "random_feasible_resources: invalid dimensions or percentage");
    }
    const int count = resource_one_count(n, r, p_r);
    if (count < threshold * r) {
        throw std::invalid_argument(
            "random_feasible_resources: one-count too small to satisfy the "
            "feasibility threshold");
    }
    if (count > n * r) {
        throw std::invalid_argument(
            "random_feasible_resources: one-count exceeds matrix size");
    }
    if (threshold > n) {
        throw std::invalid_argument(
            "random_feasible_resources: threshold exceeds robot count");
    }

    ResourceMatrix out{Eigen::MatrixXi::Zero(n, r), threshold};
    std::vector<int> rows(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) rows[static_cast<std::size_t>(i)] = i;
    for (int j = 0; j < r; ++j) {
        for (int i : sample_without_replacement(
                 rows, static_cast<std::size_t>(threshold), rng)) {
            out.gamma(i, j) = 1;
        }
    }

    std::vector<std::pair<int, int>> empty_cells;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < r; ++j) {
            if (out.gamma(i, j) == 0) empty_cells.push_back({i, j});
        }
    }
    const std::size_t remainder =
        static_cast<std::size_t>(count - threshold * r);
    for (auto [i, j] : sample_without_replacement(std::move(empty_cells),
                                                  remainder, rng)) {
        out.gamma(i, j) = 1;
    }
    return out;
}

}  // namespace reconf
