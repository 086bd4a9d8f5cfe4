#pragma once

#include <cstdint>

#include "reconf/formation.hpp"
#include "reconf/rng.hpp"

namespace reconf {

struct AnnealParams {
    int steps = 20000;
    double t_start = 1.0;
    double t_end = 1e-8;
    double h_start = 1.0;
    double h_end = 1e3;
    double delta_max = 0.1;  // proposal half-width, meters; callers usually pass d_s/10
    int max_restarts = 5;
    std::uint64_t seed = 0;
    /// Accept uphill moves with exp(-T * dE) instead of the standard
    /// exp(-dE / T). With a decaying temperature the alternative form grows
    /// permissive as the run cools; it exists for side-by-side comparison
    /// only.
    bool printed_acceptance = false;

    /// Throws std::invalid_argument if any invariant is violated.
    void validate() const;
};

/// Geometric interpolation from t_start (step 0) to t_end (final step);
/// both endpoints are returned exactly.
double temperature_at(int step, const AnnealParams& params);
/// Same schedule shape for the penalty hardness, h_start -> h_end.
double hardness_at(int step, const AnnealParams& params);

/// Copy of x with exactly one coordinate of one uniformly-chosen robot
/// perturbed by Uniform[-delta_max, delta_max]. Draw order: robot, axis,
/// offset.
Formation propose(const Formation& x, double delta_max, RngStream& rng);

struct AnnealResult {
    Formation formation;       // best state seen, by energy at final hardness
    double final_energy = 0.0; // energy of that state at final hardness
    int accepted_moves = 0;
    int saturated_terms = 0;   // penalty saturation count at the returned state
};

/// Metropolis simulated annealing over formations: runs exactly params.steps
/// iterations, always accepts downhill moves, accepts uphill moves with
/// probability exp(-dE/T), and returns the best state seen as measured at the
/// final hardness. Deterministic given the stream.
AnnealResult anneal(const Formation& x0, const Configuration& config,
                    const GeometryParams& gparams, const AnnealParams& aparams,
                    RngStream& rng);

struct SynthesisResult {
    bool feasible = false;
    Formation formation;       // feasible result, or the least-violated attempt
    FeasibilityReport report;
    double stress = 0.0;
    double final_energy = 0.0;
    int attempt = 0;           // 0 = warm start, k = k-th restart
};

/// Full synthesis: clamps the initial guess into the box, anneals, and
/// on infeasibility restarts up to max_restarts times from the initial guess
/// perturbed per coordinate by Uniform[-d_s/2, d_s/2], each restart on its
/// own derived random stream. Returns the first feasible attempt, else the
/// attempt with the largest worst-case margin with feasible = false.
SynthesisResult synthesize(const Formation& initial, const Configuration& config,
                           const GeometryParams& gparams,
                           const AnnealParams& aparams);

}  // namespace reconf
