#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

namespace reconf {

using EdgePair = std::pair<int, int>;  // normalized: first < second, 0-indexed

/// Undirected simple graph on n labeled vertices. Immutable after
/// construction; edits go through with_toggled(), which returns a new value.
class Topology {
public:
    Topology(int n, std::vector<EdgePair> edges);

    /// Graph with no edges.
    static Topology empty(int n) { return Topology(n, {}); }
    static Topology complete(int n);
    /// Path 0-1-2-...-(n-1).
    static Topology line(int n);

    int n() const { return n_; }
    const std::vector<EdgePair>& edges() const { return edges_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    bool has_edge(int i, int j) const;
    int degree(int v) const;
    std::vector<int> neighbors(int v) const;
    std::vector<int> non_neighbors(int v) const;

    /// Copy with each listed pair toggled (present edges removed, absent
    /// edges added). Pairs need not be normalized.
    Topology with_toggled(const std::vector<EdgePair>& toggles) const;

    bool operator==(const Topology& other) const = default;

private:
    int n_ = 0;
    std::vector<EdgePair> edges_;  // sorted, unique
};

inline EdgePair normalized_edge(int i, int j) {
    return i < j ? EdgePair{i, j} : EdgePair{j, i};
}

/// Adjacency matrix with forced unit diagonal: entry (i,j) is 1 iff i=j or
/// {i,j} is an edge.
Eigen::MatrixXi closed_adjacency(const Topology& topology);

/// |E| / (n(n-1)/2). Requires n >= 2.
double edge_density(const Topology& topology);

struct ConnectivityCertificate {
    bool connected = false;
    /// Smallest eigenvalue of (1/n)*11^T + L for the unit-weight Laplacian;
    /// positive exactly when the graph is connected.
    double mu = 0.0;
};

inline constexpr double kConnectivityTolerance = 1e-9;

/// Decides connectivity by graph search and attaches the algebraic
/// certificate mu. The flag is authoritative; mu is reported for validation.
ConnectivityCertificate connectivity(const Topology& topology);

/// Graph-search connectivity alone (no eigen decomposition).
bool is_connected(const Topology& topology);

}  // namespace reconf
