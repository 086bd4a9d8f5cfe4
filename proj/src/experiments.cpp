#include "reconf/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "reconf/confgen.hpp"
#include "reconf/inefficacy.hpp"
#include "reconf/parallel.hpp"
#include "reconf/random_instances.hpp"
#include "reconf/strategies.hpp"
#include "reconf/text_io.hpp"
#include "reconf/weight_lp.hpp"

namespace reconf {

namespace {

NeighborDistanceMatrix lp_distances(const Topology& topology,
                                    const GeometryParams& params) {
    const std::optional<WeightLpSolution> lp =
        optimize_edge_weights(topology, params);
    if (!lp) {
        throw std::invalid_argument(
            "cannot derive distances for a single-robot topology");
    }
    return distance_from_laplacian(
        laplacian_from_weights(topology, lp->weights), params);
}

}  // namespace

Configuration make_line_team(int n, int r, int threshold,
                             const GeometryParams& params) {
    const Topology topology = Topology::line(n);
    Configuration config{topology, lp_distances(topology, params),
                         ResourceMatrix::ones(n, r, threshold)};
    config.validate();
    return config;
}

ScenarioResult run_scenario(const ExperimentConfig& config) {
    config.validate();
    const GeometryParams& g = config.geometry;
    const Configuration initial = make_line_team(
        config.scenario_robots, config.scenario_resources, config.threshold,
        g);

    RngStream failures = make_stream(config.seed, "scenario/failures");
    const std::vector<FailureEvent> events =
        sample_failure_events(initial.resources, failures);
    RngStream strategy_rng = make_stream(config.seed, "scenario/strategy");
    FailureTrace trace = replay_failure_sequence(
        initial, events, StrategyKind::Ours, g,
        SequenceOptions{config.escalation_cap}, strategy_rng);

    ScenarioResult result{std::move(trace), SynthesisResult{}, {}, true};

    AnnealParams anneal = config.anneal;
    anneal.seed = derive_seed(config.seed, "scenario/synth/initial");
    result.initial_synthesis = synthesize(
        grid_formation(config.scenario_robots, g), initial, g, anneal);
    result.all_synthesized = result.initial_synthesis.feasible;

    Formation previous = result.initial_synthesis.formation;
    for (const TraceStep& step : result.trace.steps) {
        if (!step.reconfigured) continue;
        anneal.seed = derive_seed(
            config.seed, "scenario/synth/" + std::to_string(step.step));
        ScenarioStepArtifacts artifact;
        artifact.step = step.step;
        artifact.synthesis =
            synthesize(previous, step.configuration, g, anneal);
        artifact.transition = straight_line_transition_check(
            previous, artifact.synthesis.formation, g.d_s);
        if (artifact.synthesis.feasible) {
            previous = artifact.synthesis.formation;
        } else {
            result.all_synthesized = false;
        }
        result.artifacts.push_back(std::move(artifact));
    }
    return result;
}

int density_bin_index(double density, int bins) {
    if (bins < 1) throw std::invalid_argument("bins must be >= 1");
    if (!(density > 0.0) || density > 1.0) {
        throw std::invalid_argument("density must lie in (0, 1]");
    }
    const int index =
        static_cast<int>(std::ceil(density * bins - 1e-9)) - 1;
    return std::clamp(index, 0, bins - 1);
}

BinnedSeries bin_delta_v(const std::vector<DeltaVRecord>& records, int bins) {
    BinnedSeries series;
    series.bins = bins;
    series.count.assign(static_cast<std::size_t>(bins), 0);
    series.mean.assign(static_cast<std::size_t>(bins), 0.0);
    std::vector<double> sum(static_cast<std::size_t>(bins), 0.0);
    for (const DeltaVRecord& rec : records) {
        const auto k =
            static_cast<std::size_t>(density_bin_index(rec.edge_density, bins));
        ++series.count[k];
        sum[k] += rec.delta_v;
    }
    for (std::size_t k = 0; k < sum.size(); ++k) {
        if (series.count[k] > 0) {
            series.mean[k] = sum[k] / series.count[k];
        }
    }
    return series;
}

namespace {

DeltaVRecord run_one_random_comparison(const ExperimentConfig& config,
                                       double p_r, int trial) {
    const GeometryParams& g = config.geometry;
    const std::string stream_name =
        "cmp-rand/" + format_double(p_r) + "/" + std::to_string(trial);
    RngStream rng = make_stream(config.seed, stream_name);

    // The instance must admit a tolerable failure: with fewer than
    // threshold*r + 1 ones every failure is catastrophic.
    int n = 0;
    int r = 0;
    bool found = false;
    for (int attempt = 0; attempt < 1000 && !found; ++attempt) {
        n = rng.uniform_int(config.compare_n_min, config.compare_n_max);
        r = rng.uniform_int(config.compare_r_min, config.compare_r_max);
        found = resource_one_count(n, r, p_r) >= config.threshold * r + 1;
    }
    if (!found) {
        throw ConfigError(
            "compare-random: no (n, r) in the configured ranges leaves room "
            "for a tolerable failure at p_r = " +
            format_double(p_r));
    }

    const double min_density = 2.0 / n;
    const Topology graph = random_connected_graph(
        n, rng.uniform(min_density, 1.0), rng);
    const ResourceMatrix resources =
        random_feasible_resources(n, r, p_r, config.threshold, rng);
    const Configuration parent{graph, lp_distances(graph, g), resources};

    ResourceMatrix failed = resources;
    int failed_robot = -1;
    for (int attempt = 0; attempt < 10000; ++attempt) {
        auto [after, event] = apply_failure(resources, rng);
        if (event.kind == FailureKind::Tolerable) {
            failed = std::move(after);
            failed_robot = event.robot;
            break;
        }
    }
    if (failed_robot < 0) {
        throw std::runtime_error(
            "compare-random: failed to draw a tolerable failure");
    }

    const std::optional<ConfigGenResult> ours =
        generate_configuration(parent, failed, g);
    const Topology& topo_ours =
        ours ? ours->configuration.topology : parent.topology;

    const Configuration failed_parent{parent.topology, parent.distances,
                                      failed};
    const Configuration random_response = random_edge_strategy(
        failed_parent, failed_robot, g, rng);

    DeltaVRecord rec;
    rec.p_r = p_r;
    rec.trial = trial;
    rec.n = n;
    rec.r = r;
    rec.edge_density = edge_density(graph);
    rec.delta_v = delta_v(failed, random_response.topology, topo_ours);
    rec.sub_seed = derive_seed(config.seed, stream_name);
    return rec;
}

}  // namespace

RandomComparisonResult run_random_edge_comparison(
    const ExperimentConfig& config) {
    config.validate();
    RandomComparisonResult result;
    result.p_r_values = config.compare_p_r;
    result.records_per_pr.resize(result.p_r_values.size());

    const std::size_t per_pr = static_cast<std::size_t>(config.compare_trials);
    for (auto& records : result.records_per_pr) records.resize(per_pr);
    parallel_for_indexed(
        result.p_r_values.size() * per_pr, [&](std::size_t flat) {
            const std::size_t p = flat / per_pr;
            const std::size_t t = flat % per_pr;
            result.records_per_pr[p][t] = run_one_random_comparison(
                config, result.p_r_values[p], static_cast<int>(t));
        });

    for (const auto& records : result.records_per_pr) {
        result.bins_per_pr.push_back(bin_delta_v(records, config.bins));
    }
    return result;
}

namespace {

struct HindsightTrial {
    std::vector<HindsightStepRecord> records;
};

HindsightTrial run_one_hindsight_trial(const ExperimentConfig& config, int n,
                                       int trial) {
    const GeometryParams& g = config.geometry;
    const Configuration initial =
        make_line_team(n, config.hindsight_resources, config.threshold, g);

    const std::string stream_name =
        "cmp-hind/" + std::to_string(n) + "/" + std::to_string(trial);
    RngStream failures = make_stream(config.seed, stream_name + "/failures");
    const std::vector<FailureEvent> events =
        sample_failure_events(initial.resources, failures);

    // Post-failure resource chain; the tolerable prefix is the horizon.
    std::vector<ResourceMatrix> chain;
    {
        const ResourceMatrix* prev = &initial.resources;
        for (const FailureEvent& ev : events) {
            chain.push_back(
                apply_failure_at(*prev, ev.robot, ev.resource).first);
            prev = &chain.back();
        }
    }
    std::size_t horizon = events.size();
    if (!events.empty() &&
        events.back().kind == FailureKind::Catastrophic) {
        horizon = events.size() - 1;
    }

    HindsightTrial out;
    Configuration parent_ours = initial;
    Configuration parent_hind = initial;
    for (std::size_t k = 0; k < horizon; ++k) {
        const ResourceMatrix& now = chain[k];
        Oracle oracle;
        for (std::size_t j = k + 1; j < horizon; ++j) {
            oracle.future.push_back(chain[j]);
        }

        HindsightStepRecord rec;
        rec.n = n;
        rec.trial = trial;
        rec.step = static_cast<int>(k) + 1;

        // Our chain: fixed budget, no escalation, keep the topology when no
        // candidate strictly improves.
        const std::optional<ConfigGenResult> ours =
            generate_configuration(parent_ours, now, g);
        Configuration next_ours =
            ours ? ours->configuration
                 : Configuration{parent_ours.topology, parent_ours.distances,
                                 now};
        rec.ours_hindsight =
            hindsight_inefficacy(next_ours.topology, now, oracle);

        const ConfigGenResult hind_on_parent =
            hindsight_strategy(parent_ours, now, oracle, g);
        rec.same_parent_hindsight = hindsight_inefficacy(
            hind_on_parent.configuration.topology, now, oracle);
        rec.dominance_ok = rec.same_parent_hindsight <= rec.ours_hindsight;

        // Clairvoyant chain evolves independently.
        ConfigGenResult hind_chain =
            hindsight_strategy(parent_hind, now, oracle, g);
        rec.hindsight_chain = hindsight_inefficacy(
            hind_chain.configuration.topology, now, oracle);

        parent_ours = std::move(next_ours);
        parent_hind = std::move(hind_chain.configuration);
        out.records.push_back(rec);
    }
    return out;
}

}  // namespace

HindsightComparisonResult run_hindsight_comparison(
    const ExperimentConfig& config) {
    config.validate();
    HindsightComparisonResult result;
    const std::size_t trials =
        static_cast<std::size_t>(config.hindsight_trials);
    const std::size_t sizes = config.hindsight_team_sizes.size();

    std::vector<HindsightTrial> all(sizes * trials);
    parallel_for_indexed(sizes * trials, [&](std::size_t flat) {
        const std::size_t s = flat / trials;
        const std::size_t t = flat % trials;
        all[flat] = run_one_hindsight_trial(
            config, config.hindsight_team_sizes[s], static_cast<int>(t));
    });

    for (std::size_t s = 0; s < sizes; ++s) {
        HindsightSeries series;
        series.n = config.hindsight_team_sizes[s];
        for (std::size_t t = 0; t < trials; ++t) {
            const HindsightTrial& trial = all[s * trials + t];
            for (const HindsightStepRecord& rec : trial.records) {
                const auto idx = static_cast<std::size_t>(rec.step - 1);
                if (idx >= series.max_ours.size()) {
                    series.max_ours.resize(idx + 1, rec.ours_hindsight);
                    series.min_hindsight.resize(idx + 1, rec.hindsight_chain);
                    series.trials_at_step.resize(idx + 1, 0);
                }
                series.max_ours[idx] =
                    std::max(series.max_ours[idx], rec.ours_hindsight);
                series.min_hindsight[idx] =
                    std::min(series.min_hindsight[idx], rec.hindsight_chain);
                ++series.trials_at_step[idx];
                result.records.push_back(rec);
            }
        }
        result.series.push_back(std::move(series));
    }
    return result;
}

}  // namespace reconf
