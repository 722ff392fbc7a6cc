#include <doctest.h>

#include <cmath>
#include <sstream>

#include "poext/errors.hpp"
#include "poext/order_checks.hpp"
#include "poext/scenario.hpp"
#include "poext/series.hpp"

using namespace poext;

TEST_CASE("registry completeness") {
  const auto& reg = scenario_registry();
  CHECK(reg.size() == 10);
  int counterexamples = 0, examples = 0;
  for (const auto& sc : reg) {
    if (sc.id.rfind("ce-", 0) == 0) ++counterexamples;
    if (sc.id.rfind("ex-", 0) == 0) ++examples;
    CHECK(sc.expectation.has_value());
  }
  CHECK(counterexamples == 6);
  CHECK(examples == 4);

  // the published parameters, verbatim
  CHECK(registry_scenario("ce-3.1a").sample_x.alphas == std::vector<double>{7.0, 25.0, 100.0});
  CHECK(registry_scenario("ce-3.1a").sample_y.alphas.front() == 44.0);
  CHECK(registry_scenario("ce-3.2a").sample_x.alphas ==
        std::vector<double>{0.75, 0.95, 23.0, 43.0});
  CHECK(registry_scenario("ce-3.2b").sample_y.alphas.front() == 70.25);
  CHECK(registry_scenario("ce-4.1").sample_x.alphas ==
        std::vector<double>{0.9, 0.95, 27.0, 37.0});
  CHECK(registry_scenario("ce-4.1").sample_y.alphas.front() == 16.4625);
  CHECK(registry_scenario("ce-4.2").sample_x.alphas == std::vector<double>{5.0, 15.0, 25.0, 45.0});
  CHECK(registry_scenario("ex-5.1").sample_x.alphas == std::vector<double>{0.34, 0.65, 1.23});
  CHECK(registry_scenario("ex-5.1").sample_y.alphas.front() == 0.88);
  CHECK(registry_scenario("ex-5.1").sample_x.generator_params == std::vector<double>{5.0});
  CHECK(registry_scenario("ex-5.2").sample_x.generator_params == std::vector<double>{7.0});
  CHECK(registry_scenario("ex-5.3").sample_x.alphas ==
        std::vector<double>{0.95, 0.32, 1.54, 0.76});
  CHECK(registry_scenario("ex-5.3").sample_y.alphas.front() == 0.8925);
  CHECK(registry_scenario("ex-5.3").sample_x.generator_params == std::vector<double>{1.5});
  CHECK(registry_scenario("ex-5.4").sample_x.alphas == std::vector<double>{0.5, 0.8, 1.7});
  CHECK(registry_scenario("ex-5.4").sample_y.alphas.front() == 1.6);
  CHECK_THROWS_AS(registry_scenario("nope"), ArgumentError);

  CHECK(figure_bindings().size() == 8);
}

TEST_CASE("scenario files round-trip through the parser") {
  for (const auto& sc : scenario_registry()) {
    std::istringstream in(to_text(sc));
    const Scenario parsed = parse_scenario(in);
    CHECK(parsed.id == sc.id);
    CHECK(parsed.kind == sc.kind);
    CHECK(parsed.baseline_family == sc.baseline_family);
    CHECK(parsed.baseline_params == sc.baseline_params);
    CHECK(parsed.sample_x.alphas == sc.sample_x.alphas);
    CHECK(parsed.sample_y.alphas == sc.sample_y.alphas);
    CHECK(parsed.checks == sc.checks);
    CHECK(parsed.theorems == sc.theorems);
    CHECK(parsed.grid.map == sc.grid.map);
    CHECK(parsed.expectation == sc.expectation);
  }
}

TEST_CASE("parser diagnostics") {
  const auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return parse_scenario(in);
  };
  const std::string good =
      "id: t\nkind: min\nbaseline: exponential 1\ngenerator: independence\n"
      "alphas: 1 2\nalpha: 1.5\nchecks: dispersive\n";
  CHECK(parse(good).sample_y.alphas == std::vector<double>{1.5, 1.5});

  // negative alpha names the field
  try {
    parse("id: t\nkind: min\nbaseline: exponential 1\ngenerator: independence\n"
          "alphas: 1 -2\nalpha: 1.5\nchecks: dispersive\n");
    FAIL("expected ArgumentError");
  } catch (const ArgumentError& e) {
    CHECK(std::string(e.what()).find("alphas") != std::string::npos);
  }

  CHECK_THROWS_AS(parse("kind: min\n"), ArgumentError);                      // missing id
  CHECK_THROWS_AS(parse(good + "mystery: 1\n"), ArgumentError);              // unknown key
  CHECK_THROWS_AS(parse(good + "grid: 4\n"), ArgumentError);                 // too few points
  CHECK_THROWS_AS(parse(good + "expect: maybe\n"), ArgumentError);           // bad token
  CHECK_THROWS_AS(parse(good + "baseline: nope 1\n"), ArgumentError);        // unknown family
  CHECK_THROWS_AS(parse(good + "alphas: 1 two\n"), ArgumentError);           // bad number
  // comments and blank lines are fine
  CHECK(parse("# c\n\n" + good).id == "t");
}

TEST_CASE("series output: csv shape and determinism") {
  const auto& sc = registry_scenario("ex-5.1");
  const auto rep1 = run_scenario(sc, 64);
  const auto rep2 = run_scenario(sc, 64);
  REQUIRE(rep1.dispersive.has_value());
  const std::string csv1 = to_csv(series_output(*rep1.dispersive, sc.id));
  const std::string csv2 = to_csv(series_output(*rep2.dispersive, sc.id));
  CHECK(csv1 == csv2);  // bit-identical rendering

  std::istringstream is(csv1);
  std::string line;
  int header = 0, rows = 0;
  bool saw_columns = false;
  double prev_t = -1e300;
  while (std::getline(is, line)) {
    if (line.rfind("# ", 0) == 0) {
      ++header;
      continue;
    }
    if (!saw_columns) {
      CHECK(line == "t,x,lhs,rhs,diff");
      saw_columns = true;
      continue;
    }
    ++rows;
    CHECK(line.find("nan") == std::string::npos);
    CHECK(line.find("inf") == std::string::npos);
    const double t = std::stod(line.substr(0, line.find(',')));
    CHECK(t > prev_t);  // monotone t column
    prev_t = t;
  }
  CHECK(header >= 4);
  CHECK(rows == 64);
}

TEST_CASE("all registry series are NaN-free") {
  for (const auto& sc : scenario_registry()) {
    const auto rep = run_scenario(sc, 256);
    const auto scan = [](const auto& series) {
      for (double v : series.lhs) CHECK(std::isfinite(v));
      for (double v : series.rhs) CHECK(std::isfinite(v));
    };
    if (rep.dispersive) {
      scan(*rep.dispersive);
      for (double v : rep.dispersive->diff) CHECK(std::isfinite(v));
    }
    if (rep.star) {
      scan(*rep.star);
      for (double v : rep.star->ratio) CHECK(std::isfinite(v));
    }
  }
}

TEST_CASE("svg export emits a polyline") {
  const auto& sc = registry_scenario("ex-5.4");
  const auto rep = run_scenario(sc, 64);
  REQUIRE(rep.star.has_value());
  const auto out = series_output(*rep.star, sc.id);
  std::ostringstream os;
  write_svg(os, out, 4);
  const std::string svg = os.str();
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("<polyline") != std::string::npos);
  CHECK_THROWS_AS(write_svg(os, out, 9), ArgumentError);
}
