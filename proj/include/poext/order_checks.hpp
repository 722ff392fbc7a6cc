#pragma once

#include <optional>
#include <string>
#include <vector>

#include "poext/distribution.hpp"
#include "poext/extremes.hpp"
#include "poext/grid.hpp"
#include "poext/parallel.hpp"
#include "poext/scenario.hpp"
#include "poext/verdicts.hpp"

namespace poext {

enum class OrderRelation { dispersive, star };
enum class OrderCriterion { density, quantile_spread, ratio_monotonicity };
enum class Direction { a_le_b, a_ge_b };

const char* to_string(OrderRelation r);
const char* to_string(OrderCriterion c);
const char* to_string(Direction d);

struct OrderCheckReport {
  OrderRelation order = OrderRelation::dispersive;
  OrderCriterion criterion = OrderCriterion::density;
  Direction direction = Direction::a_le_b;
  Verdict verdict = Verdict::inconclusive;
  std::vector<Witness> witnesses;
  double max_violation = 0.0;
  std::string grid_descriptor;
};

// Both directions, evaluated from one series sweep.
struct OrderCheckPair {
  OrderCheckReport forward;  // A <= B
  OrderCheckReport reverse;  // A >= B

  Outcome outcome() const;
};

// Pointwise series behind the dispersive density criterion:
//   lhs = g_B(G_B^{-1}(F_A(x))), rhs = f_A(x), diff = lhs - rhs.
// Uses the closed-form composed density when A and B are compatible extreme
// distributions, otherwise the numeric quantile path.
struct DispersiveSeries {
  std::vector<double> t, x, lhs, rhs, diff;
  std::string grid_descriptor;
  bool closed_form = false;
};

DispersiveSeries dispersive_series(const Distribution& a, const Distribution& b, const Grid& grid,
                                   ExecPolicy policy = default_policy());

// Pointwise series behind the star criterion:
//   lhs = G_B^{-1}(F_A(x)), rhs = x, ratio = lhs/x.
struct StarSeries {
  std::vector<double> t, x, lhs, rhs, ratio;
  std::string grid_descriptor;
  bool closed_form = false;
};

StarSeries star_series(const Distribution& a, const Distribution& b, const Grid& grid,
                       ExecPolicy policy = default_policy());

// Dispersive order through the density criterion: A <=disp B holds when
// diff <= tol everywhere with tol = tol_scale*(1 + |f_A(x)|); A >=disp B when
// diff >= -tol. Sign changes need two consecutive offending points.
OrderCheckPair check_dispersive(const Distribution& a, const Distribution& b, const Grid& grid,
                                double tol_scale = 1e-8, ExecPolicy policy = default_policy());

// Same verdict semantics through quantile spreads on a probability grid:
// A <=disp B when Fa^{-1}(v)-Fa^{-1}(u) <= Fb^{-1}(v)-Fb^{-1}(u) over ordered
// pairs at fixed strides.
OrderCheckPair check_dispersive_quantile(const Distribution& a, const Distribution& b,
                                         const Grid& ugrid, double tol_scale = 1e-8,
                                         ExecPolicy policy = default_policy());

// Star order: monotonicity of G_B^{-1}(F_A(x))/x. Increasing => A <=* B,
// decreasing => A >=* B, constant => both.
OrderCheckPair check_star(const Distribution& a, const Distribution& b, const Grid& grid,
                          double tol_scale = 1e-8, ExecPolicy policy = default_policy());

// Hypothesis checking for the theorem catalog. Structural premises (shared
// generator, homogeneity) are reported as hypotheses so a misapplied theorem
// fails visibly instead of throwing.
ConditionReport verify_hypotheses(TheoremId id, const Scenario& scenario);

struct CheckOutcome {
  CheckKind kind = CheckKind::dispersive;
  OrderCheckPair pair;
  Outcome outcome = Outcome::neither;
};

struct ScenarioReport {
  std::string scenario_id;
  std::vector<ConditionReport> hypothesis_reports;
  bool hypotheses_all_pass = true;           // over the requested theorems
  std::vector<CheckOutcome> order_outcomes;
  std::optional<Outcome> overall;            // of the first order check
  std::optional<bool> matches_expectation;   // set when the scenario declares one
  std::optional<DispersiveSeries> dispersive;
  std::optional<StarSeries> star;
};

ScenarioReport run_scenario(const Scenario& scenario, std::size_t grid_points_override = 0,
                            double tol_scale = 1e-8, ExecPolicy policy = default_policy());

}  // namespace poext
