#include <doctest.h>

#include <cmath>
#include <vector>

#include "poext/errors.hpp"
#include "poext/grid.hpp"
#include "poext/order_checks.hpp"
#include "poext/verdicts.hpp"

using namespace poext;

TEST_CASE("grid maps and trimming") {
  const Grid g = Grid::mapped(GridMap::half_line, 100);
  CHECK(g.size() == 100);
  CHECK(g.t.front() == doctest::Approx(1e-3));
  CHECK(g.t.back() == doctest::Approx(1.0 - 1e-3));
  CHECK(g.x.front() == doctest::Approx(1e-3 / (1.0 - 1e-3)));
  CHECK(g.x.back() == doctest::Approx((1.0 - 1e-3) / 1e-3));

  const Grid neg = Grid::mapped(GridMap::negative_half_line, 50);
  CHECK(neg.t.front() == doctest::Approx(-1.0 + 1e-3));
  CHECK(neg.x.front() < -900.0);
  CHECK(neg.x.back() == doctest::Approx(-1e-3 / (1.0 - 1e-3)));

  const Grid inv = Grid::mapped(GridMap::inverse_unit, 50);
  CHECK(inv.x.front() == doctest::Approx(1000.0));
  CHECK(inv.x.back() == doctest::Approx(1.0 / (1.0 - 1e-3)));

  CHECK_THROWS_AS(Grid::mapped(GridMap::unit, 1), ArgumentError);
  CHECK_THROWS_AS(Grid::mapped(GridMap::unit, 10, 0.7), ArgumentError);
  CHECK_THROWS_AS(Grid::linear(2.0, 1.0, 10), ArgumentError);
  CHECK_THROWS_AS(Grid::log_spaced(-1.0, 1.0, 10), ArgumentError);
}

TEST_CASE("default grid map follows the support") {
  CHECK(default_grid_map({0.0, 1.0}) == GridMap::unit);
  CHECK(default_grid_map({0.0, std::numeric_limits<double>::infinity()}) == GridMap::half_line);
  CHECK(default_grid_map({1.0, std::numeric_limits<double>::infinity()}) ==
        GridMap::inverse_unit);
  CHECK(default_grid_map({-std::numeric_limits<double>::infinity(), 0.0}) ==
        GridMap::negative_half_line);
  CHECK(grid_map_from_string("half-line") == GridMap::half_line);
  CHECK_THROWS_AS(grid_map_from_string("circle"), ArgumentError);
}

TEST_CASE("monotonicity classification") {
  std::vector<double> xs(100), up(100), down(100), flat(100), wiggle(100);
  for (int i = 0; i < 100; ++i) {
    xs[i] = i;
    up[i] = 0.1 * i;
    down[i] = -0.1 * i;
    flat[i] = 3.0;
    wiggle[i] = std::sin(0.3 * i);
  }
  CHECK(classify_monotonicity(xs, up).kind == Monotonicity::increasing);
  CHECK(classify_monotonicity(xs, down).kind == Monotonicity::decreasing);
  CHECK(classify_monotonicity(xs, flat).kind == Monotonicity::constant);
  CHECK(classify_monotonicity(xs, wiggle).kind == Monotonicity::neither);
  CHECK_FALSE(classify_monotonicity(xs, wiggle).up_witnesses.empty());

  // a single offending point is float noise, not a direction change
  std::vector<double> noisy = up;
  noisy[50] = up[50] - 1e-3;  // one dip, recovered at 51
  CHECK(classify_monotonicity(xs, noisy).kind == Monotonicity::increasing);

  // descending x orientation flips the sign convention
  std::vector<double> xs_desc(100);
  for (int i = 0; i < 100; ++i) xs_desc[i] = 100 - i;
  CHECK(classify_monotonicity(xs_desc, up).kind == Monotonicity::decreasing);

  CHECK_THROWS_AS(classify_monotonicity(std::vector<double>{1.0}, std::vector<double>{1.0}),
                  ArgumentError);
}

TEST_CASE("midpoint shape test") {
  std::vector<double> ts(60);
  for (int i = 0; i < 60; ++i) ts[i] = 0.1 + i * 0.05;
  const auto sq = [](double t) { return t * t; };
  CHECK(check_midpoint_shape(sq, ts, true).verdict == Verdict::holds);
  CHECK(check_midpoint_shape(sq, ts, false).verdict == Verdict::violated);
  CHECK_FALSE(check_midpoint_shape(sq, ts, false).witnesses.empty());
  const auto affine = [](double t) { return 3.0 - 2.0 * t; };
  CHECK(check_midpoint_shape(affine, ts, true).verdict == Verdict::inconclusive);
  CHECK(check_midpoint_shape(affine, ts, false).verdict == Verdict::inconclusive);
  CHECK(passes(check_midpoint_shape(affine, ts, true).verdict));
}

TEST_CASE("condition report aggregation") {
  ConditionReport rep = make_condition_report(
      "demo", {{"a", Verdict::holds, ""}, {"b", Verdict::inconclusive, ""}});
  CHECK(rep.all_pass);  // inconclusive passes weak hypotheses
  CHECK(rep.find("a") != nullptr);
  CHECK(rep.find("zzz") == nullptr);
  rep = make_condition_report("demo", {{"a", Verdict::holds, ""}, {"b", Verdict::violated, ""}});
  CHECK_FALSE(rep.all_pass);
}

TEST_CASE("star series on a sign-consistent negative support") {
  const auto& sc = registry_scenario("ex-5.3");
  const ExtremeDistribution X = sc.build_x();
  const ExtremeDistribution Y = sc.build_y();
  const auto s = star_series(X, Y, sc.make_grid(200));
  for (std::size_t i = 0; i < s.x.size(); ++i) {
    CHECK(s.x[i] < 0.0);
    CHECK(std::isfinite(s.ratio[i]));
    CHECK(s.ratio[i] >= 0.0);  // y and x share the sign
  }
}
