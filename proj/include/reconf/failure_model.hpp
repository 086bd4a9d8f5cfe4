#pragma once

#include <string>
#include <utility>

#include "reconf/resources.hpp"
#include "reconf/rng.hpp"

namespace reconf {

enum class FailureKind { Tolerable, Catastrophic };

std::string to_string(FailureKind kind);
FailureKind failure_kind_from_string(const std::string& s);

/// One resource loss: entry (robot, resource) flipped 1 -> 0. Tolerable when
/// the resulting matrix is still feasible, catastrophic otherwise.
struct FailureEvent {
    int robot = 0;
    int resource = 0;
    FailureKind kind = FailureKind::Tolerable;

    bool operator==(const FailureEvent&) const = default;
};

/// Zeroes one uniformly-chosen nonzero entry (row-major enumeration of the
/// nonzero set) and classifies the event by the feasibility of the result.
/// Throws std::invalid_argument when the matrix has no nonzero entry.
std::pair<ResourceMatrix, FailureEvent> apply_failure(
    const ResourceMatrix& resources, RngStream& rng);

/// Deterministic variant: fails the given entry, which must currently be 1.
std::pair<ResourceMatrix, FailureEvent> apply_failure_at(
    const ResourceMatrix& resources, int robot, int resource);

}  // namespace reconf
