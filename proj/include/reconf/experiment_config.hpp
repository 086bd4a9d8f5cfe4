#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "reconf/annealing.hpp"
#include "reconf/params.hpp"

namespace reconf {

/// Invalid experiment configuration (unknown key, bad value, broken
/// invariant). The command line maps this to its config-error exit code.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Everything an experiment run needs, parsed from a flat key=value file.
/// Unknown keys are errors.
struct ExperimentConfig {
    GeometryParams geometry;
    AnnealParams anneal;

    int threshold = 1;
    int escalation_cap = 3;

    int scenario_robots = 7;
    int scenario_resources = 3;

    std::vector<double> compare_p_r = {20.0, 50.0, 80.0};
    int compare_trials = 200;
    int compare_n_min = 5;
    int compare_n_max = 10;
    int compare_r_min = 3;
    int compare_r_max = 6;

    std::vector<int> hindsight_team_sizes = {5, 10, 20};
    int hindsight_trials = 30;
    int hindsight_resources = 6;

    int bins = 50;
    std::uint64_t seed = 0;
    std::string out_dir = "out";

    /// Throws ConfigError on any broken invariant.
    void validate() const;
};

/// Parses `key = value` lines ('#' comments and blank lines allowed).
/// Unrecognized keys, duplicate keys, unparsable values and invariant
/// violations all throw ConfigError. When anneal.delta_max is not given it
/// defaults to geometry.d_s / 10.
ExperimentConfig parse_experiment_config(const std::string& text);

/// parse_experiment_config on a file's contents.
ExperimentConfig load_experiment_config(const std::string& path);

/// All recognized keys with their current values, in file syntax; serves as
/// both documentation and a starting template.
std::string experiment_config_to_text(const ExperimentConfig& config);

}  // namespace reconf
