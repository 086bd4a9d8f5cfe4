#include "reconf/candidates.hpp"

#include <stdexcept>

namespace reconf {

namespace {

void emit_subsets(const std::vector<EdgePair>& pairs, int size, int start,
                  std::vector<EdgePair>& current, const Topology& prev,
                  std::vector<TopologyCandidate>& out) {
    if (static_cast<int>(current.size()) == size) {
        out.push_back({prev.with_toggled(current), current,
                       2 * static_cast<int>(current.size())});
        return;
    }
    const int remaining = size - static_cast<int>(current.size());
    for (int k = start; k <= static_cast<int>(pairs.size()) - remaining; ++k) {
        current.push_back(pairs[k]);
        emit_subsets(pairs, size, k + 1, current, prev, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<TopologyCandidate> enumerate_topology_candidates(
    const Topology& prev, int ne) {
    if (ne < 0)
        throw std::invalid_argument(
            "enumerate_topology_candidates: ne must be >= 0");
    const int n = prev.n();
    std::vector<EdgePair> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});

    std::vector<TopologyCandidate> out;
    out.push_back({prev, {}, 0});
    const int max_toggles = ne / 2;
    std::vector<EdgePair> current;
    for (int size = 1; size <= max_toggles; ++size)
        emit_subsets(pairs, size, 0, current, prev, out);
    return out;
}

}  // namespace reconf
