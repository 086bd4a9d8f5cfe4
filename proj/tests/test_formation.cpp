#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "reconf/annealing.hpp"
#include "reconf/formation.hpp"
#include "reconf/laplacian.hpp"
#include "reconf/transition.hpp"
#include "reconf/weight_lp.hpp"

using namespace reconf;

namespace {

Configuration two_robot_config(double desired) {
    NeighborDistanceMatrix d(2);
    d.set(0, 1, desired);
    return Configuration{Topology(2, {{0, 1}}), std::move(d),
                         ResourceMatrix::ones(2, 1)};
}

Configuration line_config(int n, double desired) {
    NeighborDistanceMatrix d(n);
    for (int i = 0; i + 1 < n; ++i) d.set(i, i + 1, desired);
    return Configuration{Topology::line(n), std::move(d),
                         ResourceMatrix::ones(n, 1)};
}

}  // namespace

TEST_CASE("stress objective is the squared distance mismatch over edges") {
    const Configuration config = two_robot_config(2.0);
    const Formation exact{{0, 0, 0}, {2, 0, 0}};
    CHECK(stress_objective(exact, config) == doctest::Approx(0.0));
    const Formation off{{0, 0, 0}, {3, 0, 0}};
    CHECK(stress_objective(off, config) == doctest::Approx(1.0));
    const Formation wrong_size{{0, 0, 0}};
    CHECK_THROWS(stress_objective(wrong_size, config));
}

TEST_CASE("penalty is exponential with a hard saturation clamp") {
    CHECK(penalty(0.0, 5.0) == doctest::Approx(1.0));
    CHECK(penalty(1.0, 2.0) == doctest::Approx(std::exp(2.0)));
    CHECK(penalty(-1.0, 2.0) == doctest::Approx(std::exp(-2.0)));
    CHECK(penalty(1000.0, 10.0) == std::exp(700.0));
    CHECK(penalty_saturated(70.0, 10.0));
    CHECK_FALSE(penalty_saturated(69.9, 10.0));
    CHECK_THROWS(penalty(1.0, 0.0));
    CHECK_THROWS(penalty(1.0, -1.0));
}

TEST_CASE("energy breakdown matches independent arithmetic on two robots") {
    GeometryParams g;
    const Configuration config = two_robot_config(2.0);
    const Formation x{{0, 0, 0}, {2, 0, 0}};
    const double h = 3.0;
    const EnergyBreakdown b = energy_breakdown(x, config, g, h);

    CHECK(b.stress == doctest::Approx(0.0));
    // One edge at distance 2: min-side violation d_s - 2 = -1, max-side
    // violation 2 - d_mc = -1.
    CHECK(b.edge_min_penalty == doctest::Approx(std::exp(-h)));
    CHECK(b.edge_max_penalty == doctest::Approx(std::exp(-h)));
    CHECK(b.non_edge_penalty == doctest::Approx(0.0));
    // Box terms: 2 robots x 3 axes x 2 faces. Coordinates 0 contribute
    // exp(-10h) twice per axis; coordinate x=2 contributes exp(-12h) and
    // exp(-8h).
    double expected_box = 0.0;
    for (const Eigen::Vector3d& p : x) {
        for (int axis = 0; axis < 3; ++axis) {
            expected_box += std::exp(h * (g.box_min(axis) - p(axis)));
            expected_box += std::exp(h * (p(axis) - g.box_max(axis)));
        }
    }
    CHECK(b.box_penalty == doctest::Approx(expected_box));
    CHECK(b.saturated_terms == 0);
    CHECK(energy(x, config, g, h) == doctest::Approx(b.total()));
}

TEST_CASE("energy counts saturated terms at extreme hardness") {
    GeometryParams g;
    const Configuration config = two_robot_config(2.0);
    // Robots stacked on one point: edge-min violation is d_s - 0 = 1.
    const Formation stacked{{0, 0, 0}, {0, 0, 0}};
    const EnergyBreakdown b = energy_breakdown(stacked, config, g, 1000.0);
    CHECK(b.saturated_terms == 1);
    CHECK(b.edge_min_penalty == std::exp(700.0));
}

TEST_CASE("feasibility margins and the tolerance boundary") {
    GeometryParams g;
    const Configuration config = line_config(3, 2.0);
    SUBCASE("comfortably feasible line") {
        const Formation x{{-2.0, 0, 0}, {0.0, 0, 0}, {2.0, 0, 0}};
        const FeasibilityReport report = check_feasibility(x, config, g);
        CHECK(report.feasible);
        CHECK(report.edge_min_margin == doctest::Approx(1.0));
        CHECK(report.edge_max_margin == doctest::Approx(1.0));
        // Non-edge (0,2) at distance 4: margin 4 - 3 = 1.
        CHECK(report.non_edge_margin == doctest::Approx(1.0));
        CHECK(report.box_margin == doctest::Approx(8.0));
        CHECK(report.worst_margin() == doctest::Approx(1.0));
    }
    SUBCASE("non-edge too close") {
        const Formation x{{-1.2, 0, 0}, {0.0, 0, 0}, {1.2, 0, 0}};
        const FeasibilityReport report = check_feasibility(x, config, g);
        CHECK_FALSE(report.feasible);
        CHECK(report.non_edge_margin == doctest::Approx(2.4 - 3.0));
    }
    SUBCASE("violations inside the tolerance still count as feasible") {
        // Edge (0,1) sits at d_s - 0.5e-6 and non-edge (0,2) at d_mc -
        // 0.5e-6: both margins are -0.5e-6, inside the 1e-6 band.
        const double eps = 0.5e-6;
        Formation x{{0, 0, 0},
                    {g.d_s - eps, 0, 0},
                    {g.d_s - eps + 2.0, 0, 0}};
        const FeasibilityReport report = check_feasibility(x, config, g);
        CHECK(report.edge_min_margin == doctest::Approx(-eps));
        CHECK(report.non_edge_margin == doctest::Approx(-eps));
        CHECK(report.feasible);
    }
    SUBCASE("empty groups report infinite margins") {
        const Configuration complete{Topology::complete(2),
                                     [&] {
                                         NeighborDistanceMatrix d(2);
                                         d.set(0, 1, 2.0);
                                         return d;
                                     }(),
                                     ResourceMatrix::ones(2, 1)};
        const Formation x{{0, 0, 0}, {2, 0, 0}};
        const FeasibilityReport report = check_feasibility(x, complete, g);
        CHECK(report.non_edge_margin ==
              std::numeric_limits<double>::infinity());
    }
}

TEST_CASE("grid formation is spaced, centered and boxed") {
    GeometryParams g;
    const Formation grid = grid_formation(7, g);
    REQUIRE(grid.size() == 7);
    for (const Eigen::Vector3d& p : grid) {
        CHECK((p.array() >= g.box_min.array()).all());
        CHECK((p.array() <= g.box_max.array()).all());
    }
    // Any two grid points are at least one lattice spacing apart.
    for (std::size_t i = 0; i < grid.size(); ++i) {
        for (std::size_t j = i + 1; j < grid.size(); ++j) {
            CHECK((grid[i] - grid[j]).norm() >= g.d_mc - 1e-9);
        }
    }
    CHECK(grid_formation(1, g).size() == 1);
    CHECK_THROWS(grid_formation(0, g));
}

TEST_CASE("clamp into box") {
    GeometryParams g;
    const Formation clamped =
        clamp_into_box({{-100, 0, 100}, {5, -11, 3}}, g);
    CHECK(clamped[0] == Eigen::Vector3d{-10, 0, 10});
    CHECK(clamped[1] == Eigen::Vector3d{5, -10, 3});
}

TEST_CASE("schedules hit both endpoints exactly and interpolate between") {
    AnnealParams a;
    a.steps = 1000;
    CHECK(temperature_at(0, a) == a.t_start);
    CHECK(temperature_at(a.steps - 1, a) == a.t_end);
    CHECK(hardness_at(0, a) == a.h_start);
    CHECK(hardness_at(a.steps - 1, a) == a.h_end);
    for (int step = 1; step < a.steps; ++step) {
        CHECK(temperature_at(step, a) < temperature_at(step - 1, a));
        CHECK(hardness_at(step, a) >= hardness_at(step - 1, a));
    }
    // Geometric midpoint of a 3-step schedule is the geometric mean.
    AnnealParams three = a;
    three.steps = 3;
    CHECK(temperature_at(1, three) ==
          doctest::Approx(std::sqrt(three.t_start * three.t_end)));
    AnnealParams one = a;
    one.steps = 1;
    CHECK(temperature_at(0, one) == one.t_end);
}

TEST_CASE("anneal parameter validation") {
    AnnealParams a;
    CHECK_NOTHROW(a.validate());
    AnnealParams bad = a;
    bad.steps = 0;
    CHECK_THROWS(bad.validate());
    bad = a;
    bad.t_end = bad.t_start;
    CHECK_THROWS(bad.validate());
    bad = a;
    bad.t_end = 0.0;
    CHECK_THROWS(bad.validate());
    bad = a;
    bad.h_start = 2.0;
    bad.h_end = 1.0;
    CHECK_THROWS(bad.validate());
    bad = a;
    bad.delta_max = 0.0;
    CHECK_THROWS(bad.validate());
    bad = a;
    bad.max_restarts = -1;
    CHECK_THROWS(bad.validate());
}

TEST_CASE("propose draws robot, axis, offset in that order") {
    const Formation x{{0, 0, 0}, {5, 5, 5}, {9, 9, 9}};
    RngStream rng(777);
    RngStream replica(777);
    const Formation moved = propose(x, 0.25, rng);

    const int robot = replica.uniform_int(0, 2);
    const int axis = replica.uniform_int(0, 2);
    const double delta = replica.uniform(-0.25, 0.25);
    int changed = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (int a = 0; a < 3; ++a) {
            if (moved[i](a) != x[i](a)) {
                ++changed;
                CHECK(static_cast<int>(i) == robot);
                CHECK(a == axis);
                CHECK(moved[i](a) - x[i](a) == doctest::Approx(delta));
            }
        }
    }
    CHECK(changed == 1);
    CHECK_THROWS(propose(x, 0.0, rng));
    CHECK_THROWS(propose(Formation{}, 0.1, rng));
}

TEST_CASE("anneal is deterministic and lands near the desired distance") {
    GeometryParams g;
    const Configuration config = two_robot_config(2.0);
    AnnealParams a;
    a.steps = 4000;
    a.delta_max = 0.1;
    const Formation start{{-0.2, 0.1, 0.0}, {0.6, -0.3, 0.2}};

    RngStream rng1(12);
    const AnnealResult r1 = anneal(start, config, g, a, rng1);
    RngStream rng2(12);
    const AnnealResult r2 = anneal(start, config, g, a, rng2);
    REQUIRE(r1.formation.size() == r2.formation.size());
    for (std::size_t i = 0; i < r1.formation.size(); ++i) {
        CHECK(r1.formation[i] == r2.formation[i]);
    }
    CHECK(r1.final_energy == r2.final_energy);
    CHECK(r1.accepted_moves == r2.accepted_moves);
    CHECK(r1.accepted_moves > 0);

    const double dist = (r1.formation[0] - r1.formation[1]).norm();
    CHECK(dist == doctest::Approx(2.0).epsilon(0.05));
    CHECK(r1.final_energy <= energy(start, config, g, a.h_end));
}

TEST_CASE("printed acceptance variant runs and differs from the standard") {
    GeometryParams g;
    const Configuration config = two_robot_config(2.0);
    AnnealParams standard;
    standard.steps = 800;
    AnnealParams printed = standard;
    printed.printed_acceptance = true;
    const Formation start{{0, 0, 0}, {0.5, 0, 0}};
    RngStream rng1(5);
    const AnnealResult a = anneal(start, config, g, standard, rng1);
    RngStream rng2(5);
    const AnnealResult b = anneal(start, config, g, printed, rng2);
    // Same draws, different uphill rule: the accept counts should diverge.
    CHECK(a.accepted_moves != b.accepted_moves);
}

TEST_CASE("synthesize solves a small line and reports the attempt") {
    GeometryParams g;
    const Configuration config = line_config(3, 2.0);
    AnnealParams a;
    a.steps = 6000;
    a.max_restarts = 3;
    a.seed = 99;
    const SynthesisResult result =
        synthesize(grid_formation(3, g), config, g, a);
    CHECK(result.feasible);
    CHECK(result.report.worst_margin() >= -kFeasibilityTolerance);
    CHECK(result.attempt >= 0);
    CHECK(result.stress < 0.5);
}

TEST_CASE("synthesize reports failure honestly on an impossible instance") {
    GeometryParams g;
    // The box diagonal is 0.3 * sqrt(3) ~ 0.52 m, so two robots inside it
    // can never reach the 1 m separation their edge demands.
    g.box_min = {0.0, 0.0, 0.0};
    g.box_max = {0.3, 0.3, 0.3};
    const Configuration config = two_robot_config(g.d_s);
    AnnealParams a;
    a.steps = 400;
    a.max_restarts = 2;
    a.seed = 7;
    const SynthesisResult result =
        synthesize(grid_formation(2, g), config, g, a);
    CHECK_FALSE(result.feasible);
    // On failure, `attempt` names the best-kept attempt, any of them.
    CHECK(result.attempt >= 0);
    CHECK(result.attempt <= a.max_restarts);
    CHECK(result.report.worst_margin() < -kFeasibilityTolerance);
    // Trading the shortfall between the box and the separation cannot beat
    // m = (1 - 0.3*sqrt(3)) / (1 + 2*sqrt(3)) ~ 0.108 of violation.
    CHECK(result.report.worst_margin() < -0.1);
}

TEST_CASE("synthesize size mismatch throws") {
    GeometryParams g;
    const Configuration config = line_config(3, 2.0);
    AnnealParams a;
    CHECK_THROWS(synthesize(Formation{{0, 0, 0}}, config, g, a));
}

TEST_CASE("transition check: crossing robots violate, translations do not") {
    SUBCASE("head-on swap") {
        const Formation from{{0, 0, 0}, {4, 0, 0}};
        const Formation to{{4, 0, 0}, {0, 0, 0}};
        const TransitionReport report =
            straight_line_transition_check(from, to, 1.0);
        CHECK_FALSE(report.clear);
        CHECK(report.min_separation == doctest::Approx(0.0));
        REQUIRE(report.pairs.size() == 1);
        CHECK(report.pairs[0].t_at_min == doctest::Approx(0.5));
        CHECK(report.violating_pairs ==
              std::vector<EdgePair>{{0, 1}});
    }
    SUBCASE("rigid translation preserves separation") {
        const Formation from{{0, 0, 0}, {0, 2, 0}, {0, 0, 2}};
        Formation to = from;
        for (Eigen::Vector3d& p : to) p += Eigen::Vector3d{5, 5, 5};
        const TransitionReport report =
            straight_line_transition_check(from, to, 1.0);
        CHECK(report.clear);
        CHECK(report.min_separation == doctest::Approx(2.0));
        CHECK(report.pairs.size() == 3);
    }
    SUBCASE("near miss is resolved analytically between samples") {
        // Robot 0 passes a static robot 1 with closest approach 0.9 at
        // t = 0.4, strictly between the coarse sample instants {0, 1/3,
        // 2/3, 1} (whose best separation is ~0.96). The reported minimum
        // must be the parabola's, not the samples'.
        const Formation from{{-2, 0.9, 0}, {0, 0, 0}};
        const Formation to{{3, 0.9, 0}, {0, 0, 0}};
        const TransitionReport report =
            straight_line_transition_check(from, to, 1.0, 3);
        CHECK_FALSE(report.clear);
        CHECK(report.min_separation == doctest::Approx(0.9));
        CHECK(report.pairs[0].t_at_min == doctest::Approx(0.4));
    }
    SUBCASE("single robot is trivially clear") {
        const TransitionReport report = straight_line_transition_check(
            {{0, 0, 0}}, {{1, 1, 1}}, 1.0);
        CHECK(report.clear);
        CHECK(report.min_separation ==
              std::numeric_limits<double>::infinity());
    }
    SUBCASE("input validation") {
        CHECK_THROWS(straight_line_transition_check({{0, 0, 0}}, {}, 1.0));
        CHECK_THROWS(straight_line_transition_check({{0, 0, 0}}, {{0, 0, 0}},
                                                    1.0, 0));
    }
}
