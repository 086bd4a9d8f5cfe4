#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "reconf/annealing.hpp"
#include "reconf/confgen.hpp"
#include "reconf/emit.hpp"
#include "reconf/experiment_config.hpp"
#include "reconf/experiments.hpp"
#include "reconf/text_io.hpp"
#include "reconf/weight_lp.hpp"

namespace {

using namespace reconf;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitConfigError = 2;
constexpr int kExitNoImprovingCandidate = 3;
constexpr int kExitSynthesisFailed = 4;

struct GlobalOptions {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out_dir;
    std::optional<int> trials;
    std::optional<int> bins;
};

ExperimentConfig resolve_config(const GlobalOptions& options) {
    ExperimentConfig config = options.config_path.empty()
                                  ? ExperimentConfig{}
                                  : load_experiment_config(options.config_path);
    if (options.seed) config.seed = *options.seed;
    if (options.out_dir) config.out_dir = *options.out_dir;
    if (options.bins) config.bins = *options.bins;
    if (options.trials) {
        config.compare_trials = *options.trials;
        config.hindsight_trials = *options.trials;
    }
    config.validate();
    return config;
}

Topology read_topology_file(const std::string& path, int robots) {
    std::istringstream in(read_text_file(path));
    return read_edge_list(in, robots);
}

std::string out_subdir(const ExperimentConfig& config,
                       const std::string& name) {
    return (std::filesystem::path(config.out_dir) / name).string();
}

void write_in_dir(const std::string& dir, const std::string& name,
                  const std::string& contents) {
    std::filesystem::create_directories(dir);
    write_text_file((std::filesystem::path(dir) / name).string(), contents);
}

json edges_to_json(const std::vector<EdgePair>& edges) {
    json out = json::array();
    for (const EdgePair& e : edges) out.push_back({e.first + 1, e.second + 1});
    return out;
}

int run_reconfigure(const GlobalOptions& options, const std::string& edges_path,
                    int robots, const std::string& resources_path,
                    const std::string& distances_path) {
    const ExperimentConfig config = resolve_config(options);
    const GeometryParams& g = config.geometry;

    const Topology topology = read_topology_file(edges_path, robots);
    Eigen::MatrixXi gamma;
    {
        std::istringstream in(read_text_file(resources_path));
        gamma = read_int_matrix(in);
    }
    const ResourceMatrix new_resources{gamma, config.threshold};

    NeighborDistanceMatrix distances = [&] {
        if (!distances_path.empty()) {
            std::istringstream in(read_text_file(distances_path));
            return read_distance_matrix(in);
        }
        const auto lp = optimize_edge_weights(topology, g);
        if (!lp) {
            throw ConfigError(
                "reconfigure: cannot derive distances for a single-robot "
                "topology; pass an explicit distance matrix");
        }
        return distance_from_laplacian(laplacian_from_weights(topology, lp->weights),
                                       g);
    }();
    const Configuration prev{topology, std::move(distances), new_resources};

    GeometryParams attempt = g;
    int escalations = 0;
    std::optional<ConfigGenResult> result;
    while (true) {
        result = generate_configuration(prev, new_resources, attempt);
        if (result || escalations >= config.escalation_cap) break;
        attempt.ne += 2;
        ++escalations;
    }

    const std::string dir = out_subdir(config, "reconfigure");
    if (!result) {
        std::cerr << "no topology change within budget " << attempt.ne
                  << " (after " << escalations
                  << " escalations) strictly reduces task inefficacy\n";
        return kExitNoImprovingCandidate;
    }

    {
        std::ostringstream out;
        write_edge_list(out, result->configuration.topology);
        write_in_dir(dir, "edges_out.txt", out.str());
    }
    {
        std::ostringstream out;
        write_distance_matrix(out, result->configuration.distances);
        write_in_dir(dir, "distances_out.txt", out.str());
    }
    {
        std::ostringstream out;
        write_matrix(out, result->laplacian.matrix());
        write_in_dir(dir, "laplacian.txt", out.str());
    }
    const ConstraintReport report =
        verify_misdp_constraints(*result, prev, attempt);
    json violations = json::array();
    for (const std::string& name : report.violations()) {
        violations.push_back(name);
    }
    write_in_dir(dir, "result.json",
                 json{{"toggled_edges", edges_to_json(result->toggled_edges)},
                      {"laplacian_trace", result->trace},
                      {"inefficacy_before", result->inefficacy_before},
                      {"inefficacy_after", result->inefficacy_after},
                      {"candidate_count", result->candidate_count},
                      {"budget_used", attempt.ne},
                      {"escalations", escalations},
                      {"constraint_violations", violations}}
                         .dump(2) +
                     "\n");
    return kExitOk;
}

int run_synthesize(const GlobalOptions& options, const std::string& edges_path,
                   int robots, const std::string& distances_path,
                   const std::string& initial_path) {
    const ExperimentConfig config = resolve_config(options);
    const GeometryParams& g = config.geometry;

    const Topology topology = read_topology_file(edges_path, robots);
    NeighborDistanceMatrix distances = [&] {
        std::istringstream in(read_text_file(distances_path));
        return read_distance_matrix(in);
    }();
    const Configuration target{topology, std::move(distances),
                               ResourceMatrix::ones(robots, 1)};
    target.validate();

    Formation initial = initial_path.empty() ? grid_formation(robots, g) : [&] {
        std::istringstream in(read_text_file(initial_path));
        return read_formation(in);
    }();

    AnnealParams anneal = config.anneal;
    anneal.seed = derive_seed(config.seed, "cli/synthesize");
    const SynthesisResult result = synthesize(initial, target, g, anneal);

    const std::string dir = out_subdir(config, "synthesize");
    {
        std::ostringstream out;
        write_formation(out, result.formation);
        write_in_dir(dir, "formation_out.txt", out.str());
    }
    write_in_dir(dir, "synthesis.json",
                 json{{"feasible", result.feasible},
                      {"stress", result.stress},
                      {"final_energy", result.final_energy},
                      {"attempt", result.attempt},
                      {"edge_min_margin", result.report.edge_min_margin},
                      {"edge_max_margin", result.report.edge_max_margin},
                      {"non_edge_margin", result.report.non_edge_margin},
                      {"box_margin", result.report.box_margin}}
                         .dump(2) +
                     "\n");
    if (!result.feasible) {
        std::cerr << "synthesis failed after " << result.attempt
                  << " restarts (worst margin "
                  << result.report.worst_margin() << ")\n";
        return kExitSynthesisFailed;
    }
    return kExitOk;
}

int run_scenario_cmd(const GlobalOptions& options) {
    const ExperimentConfig config = resolve_config(options);
    const ScenarioResult result = run_scenario(config);
    write_scenario_outputs(result, config, out_subdir(config, "scenario"));
    if (!result.all_synthesized) {
        std::cerr << "one or more formation syntheses failed; see "
                     "transitions.csv\n";
        return kExitSynthesisFailed;
    }
    return kExitOk;
}

int run_compare_random_cmd(const GlobalOptions& options) {
    const ExperimentConfig config = resolve_config(options);
    const RandomComparisonResult result = run_random_edge_comparison(config);
    write_random_comparison_outputs(result, config,
                                    out_subdir(config, "compare_random"));
    return kExitOk;
}

int run_compare_hindsight_cmd(const GlobalOptions& options) {
    const ExperimentConfig config = resolve_config(options);
    const HindsightComparisonResult result = run_hindsight_comparison(config);
    write_hindsight_outputs(result, config,
                            out_subdir(config, "compare_hindsight"));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Multi-robot network reconfiguration toolkit: topology repair after "
        "resource failures, formation synthesis, and comparison studies"};
    app.require_subcommand(1);
    // Global flags may appear after the subcommand name
    // (e.g. `scenario --seed 42`).
    app.fallthrough();

    GlobalOptions options;
    app.add_option("--config", options.config_path,
                   "Experiment configuration file (key = value lines)");
    app.add_option("--seed", options.seed, "Master random seed override");
    app.add_option("--out", options.out_dir, "Output directory override");
    app.add_option("--trials", options.trials, "Trial count override");
    app.add_option("--bins", options.bins,
                   "Density bin count override (default 50)");

    std::string edges_path;
    std::string resources_path;
    std::string distances_path;
    std::string initial_path;
    int robots = 0;

    CLI::App* reconfigure = app.add_subcommand(
        "reconfigure",
        "One-shot topology repair from an edge list and a resource matrix");
    reconfigure->add_option("--edges", edges_path, "Edge list file (1-indexed)")
        ->required();
    reconfigure->add_option("--robots", robots, "Robot count")->required();
    reconfigure
        ->add_option("--resources", resources_path,
                     "Resource matrix file (rows cols header)")
        ->required();
    reconfigure->add_option(
        "--distances", distances_path,
        "Current distance matrix file; derived from optimized weights if "
        "omitted");

    CLI::App* synthesize_cmd = app.add_subcommand(
        "synthesize", "One-shot formation synthesis for a distance matrix");
    synthesize_cmd
        ->add_option("--edges", edges_path, "Edge list file (1-indexed)")
        ->required();
    synthesize_cmd->add_option("--robots", robots, "Robot count")->required();
    synthesize_cmd
        ->add_option("--distances", distances_path, "Distance matrix file")
        ->required();
    synthesize_cmd->add_option("--initial", initial_path,
                               "Initial formation file (x y z per robot)");

    CLI::App* scenario = app.add_subcommand(
        "scenario",
        "Full failure sequence on the default line-graph team, with "
        "formation synthesis per reconfiguration");
    CLI::App* compare_random = app.add_subcommand(
        "compare-random",
        "Paired comparison against the random-edge baseline");
    CLI::App* compare_hindsight = app.add_subcommand(
        "compare-hindsight",
        "Paired comparison against the clairvoyant strategy");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfigError;
    }

    try {
        if (reconfigure->parsed()) {
            return run_reconfigure(options, edges_path, robots, resources_path,
                                   distances_path);
        }
        if (synthesize_cmd->parsed()) {
            return run_synthesize(options, edges_path, robots, distances_path,
                                  initial_path);
        }
        if (scenario->parsed()) return run_scenario_cmd(options);
        if (compare_random->parsed()) return run_compare_random_cmd(options);
        if (compare_hindsight->parsed()) {
            return run_compare_hindsight_cmd(options);
        }
    } catch (const ConfigError& e) {
        std::cerr << e.what() << "\n";
        return kExitConfigError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitOk;
}
