#include "reconf/emit.hpp"

#include <filesystem>
#include <sstream>

#include <json.hpp>

#include "reconf/text_io.hpp"
#include "reconf/trace_json.hpp"

namespace reconf {

using nlohmann::json;

std::string csv_line(const std::vector<std::string>& fields) {
    std::string line;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) line += ',';
        line += fields[i];
    }
    line += '\n';
    return line;
}

std::string delta_v_records_csv(const RandomComparisonResult& result) {
    std::string out = csv_line(
        {"p_r", "trial", "n", "r", "edge_density", "delta_v", "sub_seed"});
    for (const auto& records : result.records_per_pr) {
        for (const DeltaVRecord& rec : records) {
            out += csv_line({format_double(rec.p_r), std::to_string(rec.trial),
                             std::to_string(rec.n), std::to_string(rec.r),
                             format_double(rec.edge_density),
                             format_double(rec.delta_v),
                             std::to_string(rec.sub_seed)});
        }
    }
    return out;
}

std::string delta_v_bins_csv(const RandomComparisonResult& result) {
    std::string out = csv_line({"p_r", "bin_index", "bin_low", "bin_high",
                                "mean_delta_v", "sample_count"});
    for (std::size_t p = 0; p < result.p_r_values.size(); ++p) {
        const BinnedSeries& series = result.bins_per_pr[p];
        for (int k = 0; k < series.bins; ++k) {
            const auto idx = static_cast<std::size_t>(k);
            if (series.count[idx] == 0) continue;  // empty bins are omitted
            out += csv_line(
                {format_double(result.p_r_values[p]), std::to_string(k),
                 format_double(static_cast<double>(k) / series.bins),
                 format_double(static_cast<double>(k + 1) / series.bins),
                 format_double(series.mean[idx]),
                 std::to_string(series.count[idx])});
        }
    }
    return out;
}

std::string hindsight_steps_csv(const HindsightComparisonResult& result) {
    std::string out =
        csv_line({"n", "trial", "step", "ours_hindsight", "hindsight_chain",
                  "same_parent_hindsight", "dominance_ok"});
    for (const HindsightStepRecord& rec : result.records) {
        out += csv_line({std::to_string(rec.n), std::to_string(rec.trial),
                         std::to_string(rec.step),
                         format_double(rec.ours_hindsight),
                         format_double(rec.hindsight_chain),
                         format_double(rec.same_parent_hindsight),
                         rec.dominance_ok ? "1" : "0"});
    }
    return out;
}

std::string hindsight_series_csv(const HindsightComparisonResult& result) {
    std::string out = csv_line(
        {"n", "step", "max_ours", "min_hindsight", "trials_at_step"});
    for (const HindsightSeries& series : result.series) {
        for (std::size_t k = 0; k < series.max_ours.size(); ++k) {
            out += csv_line({std::to_string(series.n),
                             std::to_string(static_cast<int>(k) + 1),
                             format_double(series.max_ours[k]),
                             format_double(series.min_hindsight[k]),
                             std::to_string(series.trials_at_step[k])});
        }
    }
    return out;
}

std::string transitions_csv(const ScenarioResult& result) {
    std::string out = csv_line({"step", "attempt", "feasible", "stress",
                                "min_separation", "clear"});
    for (const ScenarioStepArtifacts& artifact : result.artifacts) {
        out += csv_line({std::to_string(artifact.step),
                         std::to_string(artifact.synthesis.attempt),
                         artifact.synthesis.feasible ? "1" : "0",
                         format_double(artifact.synthesis.stress),
                         format_double(artifact.transition.min_separation),
                         artifact.transition.clear ? "1" : "0"});
    }
    return out;
}

namespace {

json config_echo(const ExperimentConfig& config) {
    return {{"seed", config.seed},
            {"normalized", experiment_config_to_text(config)}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string scenario_summary_json(const ScenarioResult& result,
                                  const ExperimentConfig& config) {
    int reconfigured = 0;
    for (const TraceStep& step : result.trace.steps) {
        if (step.reconfigured) ++reconfigured;
    }
    return dump({{"experiment", "scenario"},
                 {"config", config_echo(config)},
                 {"events", result.trace.steps.size()},
                 {"tolerable_events", result.trace.tolerable_count()},
                 {"reconfigurations", reconfigured},
                 {"all_synthesized", result.all_synthesized}});
}

std::string random_comparison_summary_json(const RandomComparisonResult& result,
                                           const ExperimentConfig& config) {
    json per_pr = json::array();
    for (std::size_t p = 0; p < result.p_r_values.size(); ++p) {
        const BinnedSeries& series = result.bins_per_pr[p];
        int occupied = 0;
        int positive = 0;
        for (int k = 0; k < series.bins; ++k) {
            const auto idx = static_cast<std::size_t>(k);
            if (series.count[idx] == 0) continue;
            ++occupied;
            if (series.mean[idx] > 0.0) ++positive;
        }
        per_pr.push_back({{"p_r", result.p_r_values[p]},
                          {"records", result.records_per_pr[p].size()},
                          {"occupied_bins", occupied},
                          {"positive_mean_bins", positive}});
    }
    return dump({{"experiment", "compare-random"},
                 {"config", config_echo(config)},
                 {"per_p_r", std::move(per_pr)}});
}

std::string hindsight_summary_json(const HindsightComparisonResult& result,
                                   const ExperimentConfig& config) {
    std::size_t dominance_ok = 0;
    for (const HindsightStepRecord& rec : result.records) {
        if (rec.dominance_ok) ++dominance_ok;
    }
    return dump({{"experiment", "compare-hindsight"},
                 {"config", config_echo(config)},
                 {"evaluations", result.records.size()},
                 {"dominance_ok", dominance_ok}});
}

namespace {

void write_in_dir(const std::string& dir, const std::string& name,
                  const std::string& contents) {
    write_text_file((std::filesystem::path(dir) / name).string(), contents);
}

}  // namespace

void write_scenario_outputs(const ScenarioResult& result,
                            const ExperimentConfig& config,
                            const std::string& dir) {
    std::filesystem::create_directories(dir);
    write_in_dir(dir, "trace.json", emit_trace_json(result.trace));
    write_in_dir(dir, "transitions.csv", transitions_csv(result));
    write_in_dir(dir, "summary.json", scenario_summary_json(result, config));
    {
        std::ostringstream out;
        write_formation(out, result.initial_synthesis.formation);
        write_in_dir(dir, "formation_initial.txt", out.str());
    }
    for (const ScenarioStepArtifacts& artifact : result.artifacts) {
        std::ostringstream out;
        write_formation(out, artifact.synthesis.formation);
        write_in_dir(dir,
                     "formation_step_" + std::to_string(artifact.step) + ".txt",
                     out.str());
    }
}

void write_random_comparison_outputs(const RandomComparisonResult& result,
                                     const ExperimentConfig& config,
                                     const std::string& dir) {
    std::filesystem::create_directories(dir);
    write_in_dir(dir, "delta_v_records.csv", delta_v_records_csv(result));
    write_in_dir(dir, "delta_v_bins.csv", delta_v_bins_csv(result));
    write_in_dir(dir, "summary.json",
                 random_comparison_summary_json(result, config));
}

void write_hindsight_outputs(const HindsightComparisonResult& result,
                             const ExperimentConfig& config,
                             const std::string& dir) {
    std::filesystem::create_directories(dir);
    write_in_dir(dir, "hindsight_steps.csv", hindsight_steps_csv(result));
    write_in_dir(dir, "hindsight_series.csv", hindsight_series_csv(result));
    write_in_dir(dir, "summary.json", hindsight_summary_json(result, config));
}

}  // namespace reconf
