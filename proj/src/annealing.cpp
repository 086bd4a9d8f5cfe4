#include "reconf/annealing.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace reconf {

void AnnealParams::validate() const {
    if (steps < 1) throw std::invalid_argument("anneal: steps must be >= 1");
    if (!(t_start > t_end) || !(t_end > 0.0)) {
        throw std::invalid_argument("anneal: need t_start > t_end > 0");
    }
    if (!(h_end >= h_start) || !(h_start > 0.0)) {
        throw std::invalid_argument("anneal: need h_end >= h_start > 0");
    }
    if (!(delta_max > 0.0)) {
        throw std::invalid_argument("anneal: delta_max must be positive");
    }
    if (max_restarts < 0) {
        throw std::invalid_argument("anneal: max_restarts must be >= 0");
    }
}

namespace {

double geometric_schedule(int step, int steps, double start, double end) {
    if (step <= 0) return steps == 1 ? end : start;
    if (step >= steps - 1) return end;
    const double f = static_cast<double>(step) / (steps - 1);
    return std::exp((1.0 - f) * std::log(start) + f * std::log(end));
}

}  // namespace

double temperature_at(int step, const AnnealParams& params) {
    return geometric_schedule(step, params.steps, params.t_start, params.t_end);
}

double hardness_at(int step, const AnnealParams& params) {
    return geometric_schedule(step, params.steps, params.h_start, params.h_end);
}

Formation propose(const Formation& x, double delta_max, RngStream& rng) {
    if (!(delta_max > 0.0)) {
        throw std::invalid_argument("propose: delta_max must be positive");
    }
    if (x.empty()) throw std::invalid_argument("propose: empty formation");
    Formation out = x;
    const int robot = rng.uniform_int(0, static_cast<int>(x.size()) - 1);
    const int axis = rng.uniform_int(0, 2);
    const double delta = rng.uniform(-delta_max, delta_max);
    out[static_cast<std::size_t>(robot)](axis) += delta;
    return out;
}

AnnealResult anneal(const Formation& x0, const Configuration& config,
                    const GeometryParams& gparams, const AnnealParams& aparams,
                    RngStream& rng) {
    aparams.validate();
    gparams.validate();

    Formation current = x0;
    AnnealResult result;
    result.formation = current;
    result.final_energy = energy(current, config, gparams, aparams.h_end);

    for (int step = 0; step < aparams.steps; ++step) {
        const double t = temperature_at(step, aparams);
        const double h = hardness_at(step, aparams);
        const double current_energy = energy(current, config, gparams, h);
        Formation candidate = propose(current, aparams.delta_max, rng);
        const double candidate_energy = energy(candidate, config, gparams, h);
        const double delta_e = candidate_energy - current_energy;

        bool accept = delta_e < 0.0;
        if (!accept) {
            const double exponent =
                aparams.printed_acceptance ? -t * delta_e : -delta_e / t;
            accept = rng.next_double() < std::exp(exponent);
        }
        if (accept) {
            current = std::move(candidate);
            ++result.accepted_moves;
            const double end_energy =
                energy(current, config, gparams, aparams.h_end);
            if (end_energy < result.final_energy) {
                result.final_energy = end_energy;
                result.formation = current;
            }
        }
    }
    result.saturated_terms =
        energy_breakdown(result.formation, config, gparams, aparams.h_end)
            .saturated_terms;
    return result;
}

SynthesisResult synthesize(const Formation& initial, const Configuration& config,
                           const GeometryParams& gparams,
                           const AnnealParams& aparams) {
    aparams.validate();
    gparams.validate();
    if (static_cast<int>(initial.size()) != config.topology.n()) {
        throw std::invalid_argument(
            "synthesize: initial guess size does not match robot count");
    }

    SynthesisResult best;
    bool have_best = false;
    for (int attempt = 0; attempt <= aparams.max_restarts; ++attempt) {
        Formation start = initial;
        if (attempt > 0) {
            RngStream jitter = make_stream(
                aparams.seed, "restart-init/" + std::to_string(attempt));
            const double half = gparams.d_s / 2.0;
            for (Eigen::Vector3d& p : start) {
                for (int axis = 0; axis < 3; ++axis) {
                    p(axis) += jitter.uniform(-half, half);
                }
            }
        }
        start = clamp_into_box(std::move(start), gparams);

        RngStream walk =
            make_stream(aparams.seed, "anneal/" + std::to_string(attempt));
        AnnealResult run = anneal(start, config, gparams, aparams, walk);
        SynthesisResult outcome;
        outcome.formation = run.formation;
        outcome.report = check_feasibility(outcome.formation, config, gparams);
        outcome.feasible = outcome.report.feasible;
        outcome.stress = stress_objective(outcome.formation, config);
        outcome.final_energy = run.final_energy;
        outcome.attempt = attempt;
        if (outcome.feasible) return outcome;
        if (!have_best ||
            outcome.report.worst_margin() > best.report.worst_margin()) {
            best = std::move(outcome);
            have_best = true;
        }
    }
    return best;
}

}  // namespace reconf
