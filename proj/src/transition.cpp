#include "reconf/transition.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace reconf {

TransitionReport straight_line_transition_check(const Formation& from,
                                                const Formation& to, double d_s,
                                                int samples, double tol) {
    if (from.size() != to.size()) {
        throw std::invalid_argument(
            "transition check: formations must have the same size");
    }
    if (samples < 1) {
        throw std::invalid_argument("transition check: samples must be >= 1");
    }
    const int n = static_cast<int>(from.size());
    TransitionReport report;
    report.min_separation = std::numeric_limits<double>::infinity();

    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const Eigen::Vector3d u = from[static_cast<std::size_t>(i)] -
                                      from[static_cast<std::size_t>(j)];
            const Eigen::Vector3d w =
                (to[static_cast<std::size_t>(i)] -
                 from[static_cast<std::size_t>(i)]) -
                (to[static_cast<std::size_t>(j)] -
                 from[static_cast<std::size_t>(j)]);
            // Squared separation is q(t) = |u|^2 + 2 t u.w + t^2 |w|^2, a
            // convex parabola; its unconstrained minimizer clamps onto [0,1].
            const double ww = w.squaredNorm();
            double t_star = 0.0;
            if (ww > 0.0) {
                t_star = std::clamp(-u.dot(w) / ww, 0.0, 1.0);
            }
            auto separation_at = [&](double t) {
                return (u + t * w).norm();
            };
            double min_sep = separation_at(t_star);
            double t_min = t_star;
            for (int k = 0; k <= samples; ++k) {
                const double t = static_cast<double>(k) / samples;
                const double s = separation_at(t);
                if (s < min_sep) {
                    min_sep = s;
                    t_min = t;
                }
            }
            PairClearance pair{i, j, min_sep, t_min, min_sep < d_s - tol};
            if (pair.violates) {
                report.violating_pairs.push_back({i, j});
            }
            report.min_separation = std::min(report.min_separation, min_sep);
            report.pairs.push_back(pair);
        }
    }
    report.clear = report.violating_pairs.empty();
    return report;
}

}  // namespace reconf
