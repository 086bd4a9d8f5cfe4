#include "reconf/topology.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace reconf {

Topology::Topology(int n, std::vector<EdgePair> edges) : n_(n) {
    if (n < 1) throw std::invalid_argument("Topology: n must be >= 1");
    edges_.reserve(edges.size());
    for (auto [i, j] : edges) {
        if (i == j) throw std::invalid_argument("Topology: self-loop");
        if (i < 0 || j < 0 || i >= n || j >= n)
            throw std::invalid_argument("Topology: vertex out of range");
        edges_.push_back(normalized_edge(i, j));
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw std::invalid_argument("Topology: duplicate edge");
}

Topology Topology::complete(int n) {
    std::vector<EdgePair> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.push_back({i, j});
    return Topology(n, std::move(e));
}

Topology Topology::line(int n) {
    std::vector<EdgePair> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    return Topology(n, std::move(e));
}

bool Topology::has_edge(int i, int j) const {
    return std::binary_search(edges_.begin(), edges_.end(),
                              normalized_edge(i, j));
}

int Topology::degree(int v) const {
    int d = 0;
    for (auto [i, j] : edges_)
        if (i == v || j == v) ++d;
    return d;
}

std::vector<int> Topology::neighbors(int v) const {
    std::vector<int> out;
    for (auto [i, j] : edges_) {
        if (i == v) out.push_back(j);
        if (j == v) out.push_back(i);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> Topology::non_neighbors(int v) const {
    std::vector<int> out;
    for (int u = 0; u < n_; ++u)
        if (u != v && !has_edge(u, v)) out.push_back(u);
    return out;
}

Topology Topology::with_toggled(const std::vector<EdgePair>& toggles) const {
    std::set<EdgePair> edge_set(edges_.begin(), edges_.end());
    for (auto [i, j] : toggles) {
        const EdgePair e = normalized_edge(i, j);
        auto it = edge_set.find(e);
        if (it != edge_set.end())
            edge_set.erase(it);
        else
            edge_set.insert(e);
    }
    return Topology(n_, {edge_set.begin(), edge_set.end()});
}

Eigen::MatrixXi closed_adjacency(const Topology& topology) {
    const int n = topology.n();
    Eigen::MatrixXi a = Eigen::MatrixXi::Identity(n, n);
    for (auto [i, j] : topology.edges()) {
        a(i, j) = 1;
        a(j, i) = 1;
    }
    return a;
}

double edge_density(const Topology& topology) {
    const int n = topology.n();
    if (n < 2) throw std::invalid_argument("edge_density: n must be >= 2");
    return static_cast<double>(topology.edge_count()) /
           (static_cast<double>(n) * (n - 1) / 2.0);
}

bool is_connected(const Topology& topology) {
    const int n = topology.n();
    std::vector<std::vector<int>> adj(n);
    for (auto [i, j] : topology.edges()) {
        adj[i].push_back(j);
        adj[j].push_back(i);
    }
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int u : adj[v]) {
            if (!seen[u]) {
                seen[u] = 1;
                ++count;
                stack.push_back(u);
            }
        }
    }
    return count == n;
}

ConnectivityCertificate connectivity(const Topology& topology) {
    const int n = topology.n();
    Eigen::MatrixXd m = Eigen::MatrixXd::Constant(n, n, 1.0 / n);
    for (auto [i, j] : topology.edges()) {
        m(i, i) += 1.0;
        m(j, j) += 1.0;
        m(i, j) -= 1.0;
        m(j, i) -= 1.0;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(m,
                                                       Eigen::EigenvaluesOnly);
    ConnectivityCertificate cert;
    cert.mu = eig.eigenvalues()(0);
    cert.connected = is_connected(topology);
    return cert;
}

}  // namespace reconf
