#include <doctest.h>

#include <vector>

#include "poext/order_checks.hpp"
#include "poext/parallel.hpp"
#include "poext/scenario.hpp"

using namespace poext;

// The OpenMP kernels must be bit-identical to the serial reference: every
// grid point / sample row is computed independently and written to its own
// slot.

TEST_CASE("for_each_index covers every slot exactly once") {
  std::vector<int> hits(1000, 0);
  for_each_index(hits.size(), ExecPolicy::openmp, [&](std::size_t i) { hits[i] += 1; });
  for (int h : hits) CHECK(h == 1);
}

TEST_CASE("serial and openmp series sweeps are bit-identical") {
  for (const char* id : {"ex-5.1", "ex-5.3"}) {
    const auto& sc = registry_scenario(id);
    const ExtremeDistribution X = sc.build_x();
    const ExtremeDistribution Y = sc.build_y();
    const Grid grid = sc.make_grid(512);
    const auto serial = dispersive_series(X, Y, grid, ExecPolicy::serial);
    const auto parallel = dispersive_series(X, Y, grid, ExecPolicy::openmp);
    CHECK(serial.lhs == parallel.lhs);
    CHECK(serial.rhs == parallel.rhs);
    CHECK(serial.diff == parallel.diff);
  }
  for (const char* id : {"ex-5.2", "ex-5.4"}) {
    const auto& sc = registry_scenario(id);
    const ExtremeDistribution X = sc.build_x();
    const ExtremeDistribution Y = sc.build_y();
    const Grid grid = sc.make_grid(512);
    const auto serial = star_series(X, Y, grid, ExecPolicy::serial);
    const auto parallel = star_series(X, Y, grid, ExecPolicy::openmp);
    CHECK(serial.lhs == parallel.lhs);
    CHECK(serial.ratio == parallel.ratio);
  }
}

TEST_CASE("serial and openmp scenario verdicts agree") {
  for (const auto& sc : scenario_registry()) {
    const auto a = run_scenario(sc, 300, 1e-8, ExecPolicy::serial);
    const auto b = run_scenario(sc, 300, 1e-8, ExecPolicy::openmp);
    REQUIRE(a.overall.has_value());
    REQUIRE(b.overall.has_value());
    CHECK(*a.overall == *b.overall);
  }
}
