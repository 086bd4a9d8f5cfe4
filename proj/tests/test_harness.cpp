#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <atomic>
#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "reconf/emit.hpp"
#include "reconf/experiment_config.hpp"
#include "reconf/experiments.hpp"
#include "reconf/parallel.hpp"
#include "reconf/text_io.hpp"
#include "reconf/trace_json.hpp"

using namespace reconf;

namespace {

void expect_config_error(const std::string& text,
                         const std::string& fragment) {
    try {
        parse_experiment_config(text);
        FAIL("expected ConfigError for: " << text);
    } catch (const ConfigError& e) {
        const std::string what = e.what();
        INFO("message: " << what);
        CHECK(what.find(fragment) != std::string::npos);
    }
}

bool formations_identical(const Formation& a, const Formation& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if ((a[i].array() != b[i].array()).any()) return false;
    }
    return true;
}

/// Unique scratch directory under the system temp root, removed on scope
/// exit.
struct TempDir {
    std::filesystem::path path;
    explicit TempDir(const std::string& tag) {
        path = std::filesystem::temp_directory_path() /
               ("reconf_test_" + tag + "_" + std::to_string(::getpid()));
        std::filesystem::remove_all(path);
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
};

ExperimentConfig small_scenario_config() {
    ExperimentConfig config;
    config.scenario_robots = 4;
    config.scenario_resources = 2;
    config.anneal.steps = 3000;
    config.anneal.max_restarts = 3;
    config.seed = 5;
    return config;
}

}  // namespace

TEST_CASE("an empty config file yields the documented defaults") {
    const ExperimentConfig config = parse_experiment_config("");
    CHECK(config.geometry.d_s == 1.0);
    CHECK(config.geometry.d_mc == 3.0);
    CHECK(config.geometry.c_min == 1.0);
    CHECK(config.geometry.c_max == 3.0);
    CHECK(config.geometry.ne == 2);
    CHECK(config.anneal.steps == 20000);
    CHECK(config.anneal.delta_max == 0.1);  // d_s / 10
    CHECK(config.threshold == 1);
    CHECK(config.escalation_cap == 3);
    CHECK(config.scenario_robots == 7);
    CHECK(config.scenario_resources == 3);
    CHECK(config.compare_p_r == std::vector<double>{20.0, 50.0, 80.0});
    CHECK(config.compare_trials == 200);
    CHECK(config.hindsight_team_sizes == std::vector<int>{5, 10, 20});
    CHECK(config.bins == 50);
    CHECK(config.seed == 0);
    CHECK(config.out_dir == "out");
}

TEST_CASE("every config key is parsed") {
    const ExperimentConfig config = parse_experiment_config(R"(
# full sweep of the key table
geometry.d_s = 2.0
geometry.d_mc = 5.0
geometry.c_min = 0.5
geometry.c_max = 4.0
geometry.ne = 4
geometry.box_min = -20, -21, -22
geometry.box_max = 20, 21, 22
anneal.steps = 1234
anneal.t_start = 2.5
anneal.t_end = 1e-6
anneal.h_start = 0.5
anneal.h_end = 500
anneal.delta_max = 0.375
anneal.max_restarts = 7
anneal.printed_acceptance = true
threshold = 2
escalation_cap = 1
scenario.robots = 9
scenario.resources = 4
compare.p_r = 25, 75
compare.trials = 12
compare.n_min = 4
compare.n_max = 6
compare.r_min = 2
compare.r_max = 3
hindsight.team_sizes = 4, 6
hindsight.trials = 5
hindsight.resources = 2
bins = 10
seed = 987654321
out_dir = results  # trailing comment
)");
    CHECK(config.geometry.d_s == 2.0);
    CHECK(config.geometry.d_mc == 5.0);
    CHECK(config.geometry.c_min == 0.5);
    CHECK(config.geometry.c_max == 4.0);
    CHECK(config.geometry.ne == 4);
    CHECK(config.geometry.box_min == Eigen::Vector3d(-20, -21, -22));
    CHECK(config.geometry.box_max == Eigen::Vector3d(20, 21, 22));
    CHECK(config.anneal.steps == 1234);
    CHECK(config.anneal.t_start == 2.5);
    CHECK(config.anneal.t_end == 1e-6);
    CHECK(config.anneal.h_start == 0.5);
    CHECK(config.anneal.h_end == 500.0);
    CHECK(config.anneal.delta_max == 0.375);
    CHECK(config.anneal.max_restarts == 7);
    CHECK(config.anneal.printed_acceptance);
    CHECK(config.threshold == 2);
    CHECK(config.escalation_cap == 1);
    CHECK(config.scenario_robots == 9);
    CHECK(config.scenario_resources == 4);
    CHECK(config.compare_p_r == std::vector<double>{25.0, 75.0});
    CHECK(config.compare_trials == 12);
    CHECK(config.compare_n_min == 4);
    CHECK(config.compare_n_max == 6);
    CHECK(config.compare_r_min == 2);
    CHECK(config.compare_r_max == 3);
    CHECK(config.hindsight_team_sizes == std::vector<int>{4, 6});
    CHECK(config.hindsight_trials == 5);
    CHECK(config.hindsight_resources == 2);
    CHECK(config.bins == 10);
    CHECK(config.seed == 987654321u);
    CHECK(config.out_dir == "results");
}

TEST_CASE("delta_max tracks d_s only when not given explicitly") {
    CHECK(parse_experiment_config("geometry.d_s = 2\n").anneal.delta_max ==
          0.2);
    const ExperimentConfig explicit_config = parse_experiment_config(
        "geometry.d_s = 2\nanneal.delta_max = 0.05\n");
    CHECK(explicit_config.anneal.delta_max == 0.05);
}

TEST_CASE("config parse errors carry the line number and key") {
    expect_config_error("geometry.d_s = 1\nbogus.key = 3\n",
                        "line 2: unknown key 'bogus.key'");
    expect_config_error("seed = 1\n\nseed = 2\n", "line 3: duplicate key");
    expect_config_error("just some words\n", "line 1: expected key = value");
    expect_config_error("geometry.ne = three\n", "bad integer");
    expect_config_error("geometry.d_s = fast\n", "bad number");
    expect_config_error("anneal.printed_acceptance = yes\n", "bad boolean");
    expect_config_error("seed = -1\n", "bad unsigned integer");
    expect_config_error("geometry.box_min = 1, 2\n", "three comma-separated");
    expect_config_error("compare.p_r = 20,,80\n", "empty element");
}

TEST_CASE("config invariants are enforced after parsing") {
    expect_config_error("threshold = 0\n", "threshold");
    expect_config_error("geometry.ne = 3\n", "config: ");  // geometry check
    expect_config_error("geometry.d_s = 4\n", "config: ");  // d_s >= d_mc
    expect_config_error("compare.p_r = 120\n", "(0, 100]");
    expect_config_error("bins = 0\n", "bins");
    expect_config_error("compare.n_min = 1\n", "compare.n_min");
    expect_config_error("compare.n_min = 8\ncompare.n_max = 6\n",
                        "compare.n_min");
    expect_config_error("hindsight.team_sizes = 5, 1\n",
                        "hindsight.team_sizes");
    expect_config_error("scenario.robots = 1\n", "scenario.robots");
    expect_config_error("out_dir =\n", "out_dir");
    expect_config_error("anneal.steps = 0\n", "config: ");
}

TEST_CASE("config serialization round-trips") {
    ExperimentConfig config = parse_experiment_config("");
    config.geometry.d_s = 1.5;
    config.anneal.delta_max = 0.15;
    config.compare_p_r = {10.0, 30.5};
    config.hindsight_team_sizes = {3, 7, 9};
    config.seed = 424242;
    config.out_dir = "artifacts";

    const std::string text = experiment_config_to_text(config);
    const ExperimentConfig reparsed = parse_experiment_config(text);
    CHECK(experiment_config_to_text(reparsed) == text);
    CHECK(reparsed.geometry.d_s == 1.5);
    CHECK(reparsed.anneal.delta_max == 0.15);
    CHECK(reparsed.compare_p_r == config.compare_p_r);
    CHECK(reparsed.hindsight_team_sizes == config.hindsight_team_sizes);
    CHECK(reparsed.seed == 424242u);
    CHECK(reparsed.out_dir == "artifacts");
}

TEST_CASE("loading a missing config file reports a config error") {
    CHECK_THROWS_AS(load_experiment_config("/nonexistent/reconf.conf"),
                    ConfigError);
}

TEST_CASE("topology JSON uses 1-indexed endpoints") {
    const nlohmann::json j = topology_to_json(Topology::line(3));
    CHECK(j.at("n") == 3);
    CHECK(j.at("edges") == nlohmann::json::parse("[[1,2],[2,3]]"));
    CHECK(topology_from_json(j) == Topology::line(3));
}

TEST_CASE("distance JSON round-trips and rejects asymmetry") {
    NeighborDistanceMatrix d(3);
    d.set(0, 1, 1.5);
    d.set(1, 2, 2.25);
    const nlohmann::json j = distances_to_json(d);
    CHECK(j[0][0].is_null());
    CHECK(j[0][1] == 1.5);
    CHECK(j[1][0] == 1.5);
    CHECK(j[0][2].is_null());
    CHECK(distances_from_json(j) == d);

    nlohmann::json asym = j;
    asym[1][0] = 9.0;
    CHECK_THROWS(distances_from_json(asym));
    nlohmann::json half = j;
    half[1][0] = nullptr;  // lower triangle missing
    CHECK_THROWS(distances_from_json(half));
    nlohmann::json ragged = j;
    ragged[2].erase(2);
    CHECK_THROWS(distances_from_json(ragged));
}

TEST_CASE("resource JSON validates entries on parse") {
    const ResourceMatrix r = ResourceMatrix::ones(2, 3);
    CHECK(resources_from_json(resources_to_json(r)) == r);
    nlohmann::json bad = resources_to_json(r);
    bad["matrix"][0][1] = 2;
    CHECK_THROWS(resources_from_json(bad));
    bad = resources_to_json(r);
    bad["threshold"] = 0;
    CHECK_THROWS(resources_from_json(bad));
}

TEST_CASE("a real failure trace survives the JSON round-trip") {
    const GeometryParams g;
    const Configuration initial = make_line_team(4, 2, 1, g);
    const FailureTrace trace = run_failure_sequence(
        initial, StrategyKind::Ours, g, SequenceOptions{}, 7);
    const std::string text = emit_trace_json(trace);
    CHECK(text.back() == '\n');
    const FailureTrace parsed = parse_trace_json(text);
    CHECK(parsed == trace);
    // Wire format is 1-indexed: no zero endpoint anywhere.
    const nlohmann::json j = nlohmann::json::parse(text);
    for (const nlohmann::json& step : j.at("steps")) {
        CHECK(step.at("robot").get<int>() >= 1);
        CHECK(step.at("resource").get<int>() >= 1);
        for (const nlohmann::json& e : step.at("toggled_edges")) {
            CHECK(e.at(0).get<int>() >= 1);
        }
    }
}

TEST_CASE("density bins are left-open with a boundary snap") {
    CHECK(density_bin_index(1.0, 50) == 49);
    CHECK(density_bin_index(0.02, 50) == 0);    // exactly on 1/50
    CHECK(density_bin_index(0.0201, 50) == 1);  // just over the boundary
    CHECK(density_bin_index(0.5, 2) == 0);
    CHECK(density_bin_index(0.500001, 2) == 1);
    CHECK(density_bin_index(1e-12, 50) == 0);  // clamped up
    CHECK(density_bin_index(0.7, 1) == 0);
    // A boundary reached through inexact arithmetic still lands on its
    // closed side: 7 * (0.1) is slightly above 0.7.
    CHECK(density_bin_index(7 * 0.1, 10) == 6);
    CHECK_THROWS(density_bin_index(0.0, 50));
    CHECK_THROWS(density_bin_index(-0.5, 50));
    CHECK_THROWS(density_bin_index(1.1, 50));
    CHECK_THROWS(density_bin_index(0.5, 0));
}

TEST_CASE("bin_delta_v averages per bin and leaves empty bins at zero") {
    std::vector<DeltaVRecord> records(3);
    records[0].edge_density = 0.1;
    records[0].delta_v = 1.0;
    records[1].edge_density = 0.12;
    records[1].delta_v = 3.0;
    records[2].edge_density = 0.9;
    records[2].delta_v = -2.0;
    const BinnedSeries series = bin_delta_v(records, 5);
    CHECK(series.bins == 5);
    CHECK(series.count == std::vector<int>{2, 0, 0, 0, 1});
    CHECK(series.mean[0] == 2.0);
    CHECK(series.mean[1] == 0.0);
    CHECK(series.mean[4] == -2.0);
}

TEST_CASE("csv_line joins fields with a trailing newline") {
    CHECK(csv_line({"a", "b", "c"}) == "a,b,c\n");
    CHECK(csv_line({"x"}) == "x\n");
    CHECK(csv_line({}) == "\n");
}

TEST_CASE("delta-v CSV emitters produce exact rows") {
    RandomComparisonResult result;
    result.p_r_values = {20.0};
    DeltaVRecord rec;
    rec.p_r = 20.0;
    rec.trial = 0;
    rec.n = 5;
    rec.r = 3;
    rec.edge_density = 0.5;
    rec.delta_v = 0.25;
    rec.sub_seed = 7;
    result.records_per_pr = {{rec}};
    result.bins_per_pr = {bin_delta_v(result.records_per_pr[0], 2)};

    CHECK(delta_v_records_csv(result) ==
          "p_r,trial,n,r,edge_density,delta_v,sub_seed\n"
          "20,0,5,3,0.5,0.25,7\n");
    CHECK(delta_v_bins_csv(result) ==
          "p_r,bin_index,bin_low,bin_high,mean_delta_v,sample_count\n"
          "20,0,0,0.5,0.25,1\n");
}

TEST_CASE("hindsight CSV emitters produce exact rows") {
    HindsightComparisonResult result;
    HindsightStepRecord rec;
    rec.n = 5;
    rec.trial = 2;
    rec.step = 1;
    rec.ours_hindsight = 12.5;
    rec.hindsight_chain = 11.25;
    rec.same_parent_hindsight = 12.0;
    rec.dominance_ok = true;
    result.records = {rec};
    HindsightSeries series;
    series.n = 5;
    series.max_ours = {12.5};
    series.min_hindsight = {11.25};
    series.trials_at_step = {1};
    result.series = {series};

    CHECK(hindsight_steps_csv(result) ==
          "n,trial,step,ours_hindsight,hindsight_chain,"
          "same_parent_hindsight,dominance_ok\n"
          "5,2,1,12.5,11.25,12,1\n");
    CHECK(hindsight_series_csv(result) ==
          "n,step,max_ours,min_hindsight,trials_at_step\n"
          "5,1,12.5,11.25,1\n");
}

TEST_CASE("transition CSV emitter produces exact rows") {
    ScenarioResult result{
        FailureTrace{StrategyKind::Ours,
                     Configuration{Topology::empty(1),
                                   NeighborDistanceMatrix(1),
                                   ResourceMatrix::ones(1, 1)},
                     {}},
        SynthesisResult{},
        {},
        true};
    ScenarioStepArtifacts artifact;
    artifact.step = 2;
    artifact.synthesis.attempt = 1;
    artifact.synthesis.feasible = true;
    artifact.synthesis.stress = 0.5;
    artifact.transition.min_separation = 2.0;
    artifact.transition.clear = true;
    result.artifacts = {artifact};
    CHECK(transitions_csv(result) ==
          "step,attempt,feasible,stress,min_separation,clear\n"
          "2,1,1,0.5,2,1\n");
}

TEST_CASE("parallel_for_indexed runs every index exactly once") {
    constexpr std::size_t kCount = 200;
    std::vector<int> slots(kCount, 0);
    parallel_for_indexed(kCount, [&](std::size_t i) {
        slots[i] += static_cast<int>(i) + 1;
    }, 4);
    for (std::size_t i = 0; i < kCount; ++i) {
        CHECK(slots[i] == static_cast<int>(i) + 1);
    }

    parallel_for_indexed(0, [&](std::size_t) { FAIL("must not run"); }, 4);

    std::atomic<int> ran{0};
    CHECK_THROWS_AS(
        parallel_for_indexed(
            100,
            [&](std::size_t i) {
                ran.fetch_add(1);
                if (i == 10) throw std::runtime_error("boom");
            },
            3),
        std::runtime_error);
    CHECK(ran.load() >= 1);
}

TEST_CASE("make_line_team builds the canonical starting state") {
    const GeometryParams g;
    const Configuration team = make_line_team(5, 2, 1, g);
    CHECK(team.topology == Topology::line(5));
    CHECK(team.resources == ResourceMatrix::ones(5, 2));
    CHECK_NOTHROW(team.validate());
    for (const EdgePair& e : team.topology.edges()) {
        const double d = team.distances.edge_distance(e.first, e.second);
        CHECK(d >= g.d_s - 1e-12);
        CHECK(d <= g.d_mc + 1e-12);
    }
}

TEST_CASE("scenario runs are deterministic end to end") {
    const ExperimentConfig config = small_scenario_config();
    const ScenarioResult a = run_scenario(config);
    const ScenarioResult b = run_scenario(config);

    CHECK(a.trace == b.trace);
    CHECK(a.all_synthesized == b.all_synthesized);
    CHECK(formations_identical(a.initial_synthesis.formation,
                               b.initial_synthesis.formation));
    REQUIRE(a.artifacts.size() == b.artifacts.size());
    for (std::size_t k = 0; k < a.artifacts.size(); ++k) {
        CHECK(a.artifacts[k].step == b.artifacts[k].step);
        CHECK(formations_identical(a.artifacts[k].synthesis.formation,
                                   b.artifacts[k].synthesis.formation));
        CHECK(a.artifacts[k].transition.min_separation ==
              b.artifacts[k].transition.min_separation);
    }

    // Structure: one artifact per reconfigured step, in step order.
    std::vector<int> reconfigured_steps;
    for (const TraceStep& step : a.trace.steps) {
        if (step.reconfigured) reconfigured_steps.push_back(step.step);
    }
    REQUIRE(a.artifacts.size() == reconfigured_steps.size());
    for (std::size_t k = 0; k < a.artifacts.size(); ++k) {
        CHECK(a.artifacts[k].step == reconfigured_steps[k]);
    }
    CHECK(a.initial_synthesis.formation.size() == 4);
    CHECK(a.trace.steps.back().event.kind == FailureKind::Catastrophic);
}

TEST_CASE("scenario outputs are written and parse back") {
    const ExperimentConfig config = small_scenario_config();
    const ScenarioResult result = run_scenario(config);
    TempDir dir("scenario");
    write_scenario_outputs(result, config, dir.path.string());

    const FailureTrace parsed = parse_trace_json(
        read_text_file((dir.path / "trace.json").string()));
    CHECK(parsed == result.trace);

    const std::string transitions =
        read_text_file((dir.path / "transitions.csv").string());
    CHECK(transitions.rfind("step,attempt,feasible,stress,min_separation,"
                            "clear\n", 0) == 0);

    const nlohmann::json summary = nlohmann::json::parse(
        read_text_file((dir.path / "summary.json").string()));
    CHECK(summary.at("experiment") == "scenario");
    CHECK(summary.at("events") == result.trace.steps.size());
    CHECK(summary.at("config").at("seed") == config.seed);
    const ExperimentConfig echoed = parse_experiment_config(
        summary.at("config").at("normalized").get<std::string>());
    CHECK(echoed.scenario_robots == config.scenario_robots);

    CHECK(std::filesystem::exists(dir.path / "formation_initial.txt"));
    for (const ScenarioStepArtifacts& artifact : result.artifacts) {
        CHECK(std::filesystem::exists(
            dir.path /
            ("formation_step_" + std::to_string(artifact.step) + ".txt")));
    }
}

TEST_CASE("random-edge comparison: deterministic records with exact seeds") {
    ExperimentConfig config;
    config.compare_p_r = {60.0};
    config.compare_trials = 4;
    config.compare_n_min = 4;
    config.compare_n_max = 6;
    config.compare_r_min = 2;
    config.compare_r_max = 3;
    config.bins = 10;
    config.seed = 3;

    const RandomComparisonResult a = run_random_edge_comparison(config);
    const RandomComparisonResult b = run_random_edge_comparison(config);
    REQUIRE(a.records_per_pr.size() == 1);
    REQUIRE(a.records_per_pr[0].size() == 4);
    for (std::size_t t = 0; t < 4; ++t) {
        const DeltaVRecord& ra = a.records_per_pr[0][t];
        const DeltaVRecord& rb = b.records_per_pr[0][t];
        CHECK(ra.p_r == 60.0);
        CHECK(ra.trial == static_cast<int>(t));
        CHECK(ra.n >= 4);
        CHECK(ra.n <= 6);
        CHECK(ra.r >= 2);
        CHECK(ra.r <= 3);
        CHECK(ra.edge_density > 0.0);
        CHECK(ra.edge_density <= 1.0);
        CHECK(ra.sub_seed ==
              derive_seed(config.seed, "cmp-rand/60/" + std::to_string(t)));
        CHECK(ra.delta_v == rb.delta_v);
        CHECK(ra.n == rb.n);
        CHECK(ra.edge_density == rb.edge_density);
    }
    // Bins are the aggregation of the records.
    const BinnedSeries expected = bin_delta_v(a.records_per_pr[0], 10);
    CHECK(a.bins_per_pr[0].count == expected.count);
    CHECK(a.bins_per_pr[0].mean == expected.mean);

    TempDir dir("cmp_rand");
    write_random_comparison_outputs(a, config, dir.path.string());
    const std::string records =
        read_text_file((dir.path / "delta_v_records.csv").string());
    CHECK(std::count(records.begin(), records.end(), '\n') == 5);  // header+4
    const nlohmann::json summary = nlohmann::json::parse(
        read_text_file((dir.path / "summary.json").string()));
    CHECK(summary.at("experiment") == "compare-random");
    CHECK(summary.at("per_p_r")[0].at("records") == 4);
}

TEST_CASE("hindsight comparison: the same-parent response always dominates") {
    ExperimentConfig config;
    config.hindsight_team_sizes = {4};
    config.hindsight_trials = 2;
    config.hindsight_resources = 3;
    config.seed = 9;

    const HindsightComparisonResult result =
        run_hindsight_comparison(config);
    REQUIRE_FALSE(result.records.empty());
    for (const HindsightStepRecord& rec : result.records) {
        CHECK(rec.dominance_ok);
        CHECK(rec.same_parent_hindsight <= rec.ours_hindsight);
        CHECK(rec.n == 4);
        CHECK(rec.step >= 1);
    }

    REQUIRE(result.series.size() == 1);
    const HindsightSeries& series = result.series[0];
    // The series is the per-step envelope of the records.
    std::size_t total = 0;
    for (std::size_t k = 0; k < series.max_ours.size(); ++k) {
        double expect_max = -1.0;
        double expect_min = -1.0;
        int count = 0;
        for (const HindsightStepRecord& rec : result.records) {
            if (static_cast<std::size_t>(rec.step - 1) != k) continue;
            ++count;
            if (count == 1 || rec.ours_hindsight > expect_max) {
                expect_max = rec.ours_hindsight;
            }
            if (count == 1 || rec.hindsight_chain < expect_min) {
                expect_min = rec.hindsight_chain;
            }
        }
        CHECK(series.trials_at_step[k] == count);
        CHECK(series.max_ours[k] == expect_max);
        CHECK(series.min_hindsight[k] == expect_min);
        total += static_cast<std::size_t>(count);
    }
    CHECK(total == result.records.size());

    const HindsightComparisonResult again =
        run_hindsight_comparison(config);
    REQUIRE(again.records.size() == result.records.size());
    for (std::size_t i = 0; i < result.records.size(); ++i) {
        CHECK(again.records[i].ours_hindsight ==
              result.records[i].ours_hindsight);
        CHECK(again.records[i].hindsight_chain ==
              result.records[i].hindsight_chain);
    }

    TempDir dir("cmp_hind");
    write_hindsight_outputs(result, config, dir.path.string());
    const std::string steps =
        read_text_file((dir.path / "hindsight_steps.csv").string());
    CHECK(std::count(steps.begin(), steps.end(), '\n') ==
          static_cast<long>(result.records.size()) + 1);
    const nlohmann::json summary = nlohmann::json::parse(
        read_text_file((dir.path / "summary.json").string()));
    CHECK(summary.at("dominance_ok") == result.records.size());
}
