#pragma once

#include <string>
#include <vector>

#include "reconf/experiments.hpp"

namespace reconf {

/// One CSV line; fields are joined with commas and the line ends in "\n".
/// Fields must not contain commas, quotes or newlines (all emitters here
/// write numbers and fixed words only).
std::string csv_line(const std::vector<std::string>& fields);

/// Column schemas are documented in the README; all emitters write a header
/// line even for empty result sets, and rows in deterministic order.

std::string delta_v_records_csv(const RandomComparisonResult& result);
std::string delta_v_bins_csv(const RandomComparisonResult& result);
std::string hindsight_steps_csv(const HindsightComparisonResult& result);
std::string hindsight_series_csv(const HindsightComparisonResult& result);
std::string transitions_csv(const ScenarioResult& result);

/// summary.json payloads for each experiment.
std::string scenario_summary_json(const ScenarioResult& result,
                                  const ExperimentConfig& config);
std::string random_comparison_summary_json(const RandomComparisonResult& result,
                                           const ExperimentConfig& config);
std::string hindsight_summary_json(const HindsightComparisonResult& result,
                                   const ExperimentConfig& config);

/// Write each experiment's full artifact set under `dir` (created if
/// needed). File names are fixed; see the README.
void write_scenario_outputs(const ScenarioResult& result,
                            const ExperimentConfig& config,
                            const std::string& dir);
void write_random_comparison_outputs(const RandomComparisonResult& result,
                                     const ExperimentConfig& config,
                                     const std::string& dir);
void write_hindsight_outputs(const HindsightComparisonResult& result,
                             const ExperimentConfig& config,
                             const std::string& dir);

}  // namespace reconf
