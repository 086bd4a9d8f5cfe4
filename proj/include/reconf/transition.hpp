#pragma once

#include <vector>

#include "reconf/formation.hpp"

namespace reconf {

struct PairClearance {
    int i = 0;
    int j = 0;
    double min_separation = 0.0;  // over the whole motion
    double t_at_min = 0.0;        // interpolation parameter attaining it
    bool violates = false;        // dips below the safety distance
};

struct TransitionReport {
    bool clear = false;           // no pair violates
    double min_separation = 0.0;  // over all pairs; +inf when n < 2
    std::vector<PairClearance> pairs;            // all i<j pairs
    std::vector<EdgePair> violating_pairs;
};

/// Clearance of the synchronized straight-line motion from one formation to
/// another: every robot moves along x_i(t) = (1-t)*from_i + t*to_i. Each
/// pair's minimum separation is found analytically (squared distance is
/// quadratic in t) and cross-checked on at least `samples`+1 evenly spaced
/// instants. A pair violates when its minimum dips below d_s - tol.
TransitionReport straight_line_transition_check(const Formation& from,
                                                const Formation& to, double d_s,
                                                int samples = 100,
                                                double tol = 1e-6);

}  // namespace reconf
