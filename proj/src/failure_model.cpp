#include "reconf/failure_model.hpp"

#include <stdexcept>
#include <vector>

namespace reconf {

std::string to_string(FailureKind kind) {
    return kind == FailureKind::Tolerable ? "tolerable" : "catastrophic";
}

FailureKind failure_kind_from_string(const std::string& s) {
    if (s == "tolerable") return FailureKind::Tolerable;
    if (s == "catastrophic") return FailureKind::Catastrophic;
    throw std::invalid_argument("unknown failure kind: " + s);
}

std::pair<ResourceMatrix, FailureEvent> apply_failure(
    const ResourceMatrix& resources, RngStream& rng) {
    resources.validate();
    std::vector<std::pair<int, int>> nonzero;
    for (int i = 0; i < resources.robots(); ++i) {
        for (int j = 0; j < resources.resource_kinds(); ++j) {
            if (resources.gamma(i, j) != 0) nonzero.push_back({i, j});
        }
    }
    if (nonzero.empty()) {
        throw std::invalid_argument(
            "apply_failure: no nonzero entry left to fail");
    }
    const auto [robot, resource] =
        nonzero[rng.bounded(nonzero.size())];
    return apply_failure_at(resources, robot, resource);
}

std::pair<ResourceMatrix, FailureEvent> apply_failure_at(
    const ResourceMatrix& resources, int robot, int resource) {
    if (robot < 0 || robot >= resources.robots() || resource < 0 ||
        resource >= resources.resource_kinds()) {
        throw std::invalid_argument("apply_failure_at: index out of range");
    }
    if (resources.gamma(robot, resource) != 1) {
        throw std::invalid_argument(
            "apply_failure_at: targeted entry is not 1");
    }
    ResourceMatrix after = resources;
    after.gamma(robot, resource) = 0;
    const FailureKind kind = resource_feasible(after)
                                 ? FailureKind::Tolerable
                                 : FailureKind::Catastrophic;
    return {after, FailureEvent{robot, resource, kind}};
}

}  // namespace reconf
