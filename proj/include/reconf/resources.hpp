#pragma once

#include <Eigen/Dense>

namespace reconf {

/// Binary robot-by-resource possession matrix. A resource distribution is
/// feasible when every resource is held by at least `threshold` robots.
struct ResourceMatrix {
    Eigen::MatrixXi gamma;  // entries in {0,1}
    int threshold = 1;

    int robots() const { return static_cast<int>(gamma.rows()); }
    int resource_kinds() const { return static_cast<int>(gamma.cols()); }
    int ones_count() const { return gamma.sum(); }

    static ResourceMatrix ones(int n, int r, int threshold = 1) {
        return ResourceMatrix{Eigen::MatrixXi::Ones(n, r), threshold};
    }

    /// Throws if any entry is outside {0,1} or threshold < 1.
    void validate() const;

    bool operator==(const ResourceMatrix& other) const {
        return threshold == other.threshold && gamma == other.gamma;
    }
};

/// True iff every column sum of gamma is >= threshold.
bool resource_feasible(const ResourceMatrix& resources);

}  // namespace reconf
