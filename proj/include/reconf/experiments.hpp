#pragma once

#include <cstdint>
#include <vector>

#include "reconf/annealing.hpp"
#include "reconf/experiment_config.hpp"
#include "reconf/sequence.hpp"
#include "reconf/transition.hpp"

namespace reconf {

/// Per-reconfiguration formation work inside a scenario run.
struct ScenarioStepArtifacts {
    int step = 0;  // matches the trace step index
    SynthesisResult synthesis;
    TransitionReport transition;  // previous formation -> this one
};

struct ScenarioResult {
    FailureTrace trace;
    SynthesisResult initial_synthesis;
    std::vector<ScenarioStepArtifacts> artifacts;  // one per reconfigured step
    bool all_synthesized = true;
};

/// Builds the default team (line topology, full resources), runs the main
/// strategy through a full failure sequence and synthesizes a formation for
/// every reconfiguration, with straight-line transition checks between
/// consecutive formations.
ScenarioResult run_scenario(const ExperimentConfig& config);

struct DeltaVRecord {
    double p_r = 0.0;
    int trial = 0;
    int n = 0;
    int r = 0;
    double edge_density = 0.0;  // of the parent graph, in (0, 1]
    double delta_v = 0.0;       // random-edge minus ours; positive favors ours
    std::uint64_t sub_seed = 0; // replaying this seed reproduces the record
};

struct BinnedSeries {
    int bins = 50;
    std::vector<int> count;    // samples per bin over (0, 1]
    std::vector<double> mean;  // meaningful where count > 0
};

/// Equal-width bins over (0, 1]: bin k covers (k/bins, (k+1)/bins].
int density_bin_index(double density, int bins);
BinnedSeries bin_delta_v(const std::vector<DeltaVRecord>& records, int bins);

struct RandomComparisonResult {
    std::vector<double> p_r_values;
    std::vector<std::vector<DeltaVRecord>> records_per_pr;
    std::vector<BinnedSeries> bins_per_pr;
};

/// Paired one-failure comparison of the main strategy against the
/// random-edge baseline across random teams, aggregated per edge-density
/// bin for each requested resource percentage.
RandomComparisonResult run_random_edge_comparison(const ExperimentConfig&);

struct HindsightStepRecord {
    int n = 0;
    int trial = 0;
    int step = 0;  // 1-based
    double ours_hindsight = 0.0;         // our chain's topology, full-horizon
    double hindsight_chain = 0.0;        // clairvoyant chain's topology
    double same_parent_hindsight = 0.0;  // clairvoyant response on our parent
    bool dominance_ok = false;  // same_parent_hindsight <= ours_hindsight
};

struct HindsightSeries {
    int n = 0;
    std::vector<double> max_ours;       // per step, worst of our trials
    std::vector<double> min_hindsight;  // per step, best clairvoyant trial
    std::vector<int> trials_at_step;
};

struct HindsightComparisonResult {
    std::vector<HindsightStepRecord> records;
    std::vector<HindsightSeries> series;  // one per team size
};

/// Replays identical failure sequences under the main strategy and the
/// clairvoyant strategy (fixed budget, no escalation) and evaluates the
/// full-horizon objective of both chains at every step, plus the
/// same-parent dominance check.
HindsightComparisonResult run_hindsight_comparison(const ExperimentConfig&);

/// Line-graph team with every resource everywhere and distances from the
/// optimized weights; the canonical starting state.
Configuration make_line_team(int n, int r, int threshold,
                             const GeometryParams& params);

}  // namespace reconf
