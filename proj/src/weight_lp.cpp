#include "reconf/weight_lp.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace reconf {

namespace {

constexpr double kCostTol = 1e-9;  // reduced-cost optimality tolerance
constexpr double kPivotTol = 1e-9; // smallest usable pivot magnitude

enum class VarStatus { Basic, AtLower, AtUpper };

// Bounded-variable primal simplex state for
//   min c'x  s.t.  [G | -I] x = b,  l <= x <= u,
// where G is the vertex/edge incidence matrix of the topology and the
// trailing n columns are surplus variables for the degree constraints.
struct SimplexProblem {
    int n_rows = 0;        // one row per vertex
    int n_struct = 0;      // structural variables (edges)
    int n_total = 0;       // edges + surplus
    std::vector<EdgePair> edges;
    std::vector<double> cost;
    std::vector<double> lower;
    std::vector<double> upper;
    Eigen::VectorXd rhs;

    Eigen::VectorXd column(int j) const {
        Eigen::VectorXd col = Eigen::VectorXd::Zero(n_rows);
        if (j < n_struct) {
            col(edges[j].first) = 1.0;
            col(edges[j].second) = 1.0;
        } else {
            col(j - n_struct) = -1.0;
        }
        return col;
    }

    double reduced_cost(int j, const Eigen::VectorXd& dual) const {
        if (j < n_struct) {
            return cost[j] - dual(edges[j].first) - dual(edges[j].second);
        }
        return dual(j - n_struct);
    }
};

}  // namespace

std::optional<WeightLpSolution> optimize_edge_weights(
    const Topology& topology, const GeometryParams& params) {
    params.validate();
    const int n = topology.n();
    if (n >= 2 && !is_connected(topology)) {
        throw std::invalid_argument(
            "optimize_edge_weights: topology must be connected");
    }
    for (int i = 0; i < n; ++i) {
        if (topology.degree(i) == 0) return std::nullopt;  // only n = 1 here
    }

    SimplexProblem p;
    p.n_rows = n;
    p.edges = topology.edges();
    p.n_struct = static_cast<int>(p.edges.size());
    p.n_total = p.n_struct + n;
    p.cost.assign(static_cast<std::size_t>(p.n_total), 0.0);
    p.lower.assign(static_cast<std::size_t>(p.n_total), 0.0);
    p.upper.assign(static_cast<std::size_t>(p.n_total),
                   std::numeric_limits<double>::infinity());
    for (int j = 0; j < p.n_struct; ++j) {
        p.cost[static_cast<std::size_t>(j)] = 2.0;  // diagonal contribution of one edge
        p.lower[static_cast<std::size_t>(j)] = params.c_min;
        p.upper[static_cast<std::size_t>(j)] = params.c_max;
    }
    p.rhs = Eigen::VectorXd::Constant(n, params.c_max);

    // Start from the feasible point with every edge at c_max and the surplus
    // variables basic; the basis matrix is then -I.
    std::vector<VarStatus> status(static_cast<std::size_t>(p.n_total),
                                  VarStatus::AtUpper);
    std::vector<int> basis(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        basis[static_cast<std::size_t>(i)] = p.n_struct + i;
        status[static_cast<std::size_t>(p.n_struct + i)] = VarStatus::Basic;
    }

    const long bland_after = 50 + 10L * (p.n_total + n);
    const long iteration_cap = 2000 + 200L * (p.n_total + n);

    Eigen::VectorXd basic_values = Eigen::VectorXd::Zero(n);
    for (long iter = 0;; ++iter) {
        if (iter > iteration_cap) {
            throw std::runtime_error(
                "optimize_edge_weights: simplex iteration cap exceeded");
        }
        const bool use_bland = iter >= bland_after;

        Eigen::MatrixXd basis_matrix(n, n);
        for (int i = 0; i < n; ++i) {
            basis_matrix.col(i) = p.column(basis[static_cast<std::size_t>(i)]);
        }
        Eigen::FullPivLU<Eigen::MatrixXd> lu(basis_matrix);
        if (!lu.isInvertible()) {
            throw std::runtime_error(
                "optimize_edge_weights: singular simplex basis");
        }

        // Recompute the basic values from scratch each iteration; the bases
        // here are tiny, so exactness beats incremental updates.
        Eigen::VectorXd residual = p.rhs;
        for (int j = 0; j < p.n_total; ++j) {
            const VarStatus s = status[static_cast<std::size_t>(j)];
            if (s == VarStatus::AtLower) {
                const double v = p.lower[static_cast<std::size_t>(j)];
                if (v != 0.0) residual -= v * p.column(j);
            } else if (s == VarStatus::AtUpper) {
                const double v = p.upper[static_cast<std::size_t>(j)];
                if (v != 0.0) residual -= v * p.column(j);
            }
        }
        basic_values = lu.solve(residual);

        Eigen::VectorXd cost_basic(n);
        for (int i = 0; i < n; ++i) {
            cost_basic(i) = p.cost[static_cast<std::size_t>(
                basis[static_cast<std::size_t>(i)])];
        }
        const Eigen::VectorXd dual = lu.transpose().solve(cost_basic);

        // Pricing: Dantzig's rule with lowest-index ties, switching to
        // Bland's rule once the iteration count suggests cycling.
        int entering = -1;
        double best_violation = kCostTol;
        for (int j = 0; j < p.n_total; ++j) {
            const VarStatus s = status[static_cast<std::size_t>(j)];
            if (s == VarStatus::Basic) continue;
            const double r = p.reduced_cost(j, dual);
            double violation = 0.0;
            if (s == VarStatus::AtLower && r < -kCostTol) violation = -r;
            if (s == VarStatus::AtUpper && r > kCostTol) violation = r;
            if (violation <= 0.0) continue;
            if (use_bland) {
                entering = j;
                break;
            }
            if (violation > best_violation) {
                best_violation = violation;
                entering = j;
            }
        }
        if (entering < 0) break;  // optimal

        const bool from_lower =
            status[static_cast<std::size_t>(entering)] == VarStatus::AtLower;
        const double sigma = from_lower ? 1.0 : -1.0;
        const Eigen::VectorXd direction = lu.solve(p.column(entering));

        // Ratio test: the entering variable moves by t in direction sigma,
        // each basic value p moves by -sigma * direction(p) * t.
        double step_limit =
            p.upper[static_cast<std::size_t>(entering)] -
            p.lower[static_cast<std::size_t>(entering)];
        int leaving_pos = -1;
        bool leaving_at_upper = false;
        double basic_step = std::numeric_limits<double>::infinity();
        for (int pos = 0; pos < n; ++pos) {
            const double delta = sigma * direction(pos);
            const int var = basis[static_cast<std::size_t>(pos)];
            const double lo = p.lower[static_cast<std::size_t>(var)];
            const double hi = p.upper[static_cast<std::size_t>(var)];
            double t = std::numeric_limits<double>::infinity();
            bool hits_upper = false;
            if (delta > kPivotTol) {
                t = (basic_values(pos) - lo) / delta;
            } else if (delta < -kPivotTol && std::isfinite(hi)) {
                t = (hi - basic_values(pos)) / (-delta);
                hits_upper = true;
            } else {
                continue;
            }
            t = std::max(t, 0.0);
            const bool better =
                t < basic_step - kPivotTol ||
                (t < basic_step + kPivotTol &&
                 (leaving_pos < 0 ||
                  var < basis[static_cast<std::size_t>(leaving_pos)]));
            if (better) {
                basic_step = std::min(t, basic_step);
                leaving_pos = pos;
                leaving_at_upper = hits_upper;
            }
        }

        if (basic_step >= step_limit &&
            std::isfinite(step_limit)) {
            // Bound flip: the entering variable crosses to its other bound
            // before any basic variable blocks.
            status[static_cast<std::size_t>(entering)] =
                from_lower ? VarStatus::AtUpper : VarStatus::AtLower;
            continue;
        }
        if (leaving_pos < 0) {
            throw std::runtime_error(
                "optimize_edge_weights: unbounded simplex step");
        }

        const int leaving_var = basis[static_cast<std::size_t>(leaving_pos)];
        status[static_cast<std::size_t>(leaving_var)] =
            leaving_at_upper ? VarStatus::AtUpper : VarStatus::AtLower;
        status[static_cast<std::size_t>(entering)] = VarStatus::Basic;
        basis[static_cast<std::size_t>(leaving_pos)] = entering;
    }

    // Read the solution back out, snapping tiny numerical drift onto the
    // variable bounds but refusing anything materially infeasible.
    std::vector<double> value(static_cast<std::size_t>(p.n_total), 0.0);
    for (int j = 0; j < p.n_total; ++j) {
        const VarStatus s = status[static_cast<std::size_t>(j)];
        if (s == VarStatus::AtLower) value[static_cast<std::size_t>(j)] = p.lower[static_cast<std::size_t>(j)];
        if (s == VarStatus::AtUpper) value[static_cast<std::size_t>(j)] = p.upper[static_cast<std::size_t>(j)];
    }
    for (int i = 0; i < n; ++i) {
        value[static_cast<std::size_t>(basis[static_cast<std::size_t>(i)])] =
            basic_values(i);
    }

    WeightLpSolution solution;
    double weight_sum = 0.0;
    for (int j = 0; j < p.n_struct; ++j) {
        double w = value[static_cast<std::size_t>(j)];
        if (w < params.c_min - 1e-7 || w > params.c_max + 1e-7) {
            throw std::runtime_error(
                "optimize_edge_weights: solution violates weight bounds");
        }
        w = std::clamp(w, params.c_min, params.c_max);
        solution.weights[p.edges[static_cast<std::size_t>(j)]] = w;
        weight_sum += w;
    }
    solution.trace = 2.0 * weight_sum;
    return solution;
}

}  // namespace reconf
