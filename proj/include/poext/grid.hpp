#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

namespace poext {

// Closed support interval; lo/hi may be -inf/+inf.
struct Interval {
  double lo = 0.0;
  double hi = std::numeric_limits<double>::infinity();

  bool contains(double x) const { return x >= lo && x <= hi; }
  bool contains_interior(double x) const { return x > lo && x < hi; }
  bool bounded() const { return std::isfinite(lo) && std::isfinite(hi); }
};

// Reparameterizations used for evaluation grids on the supports that occur
// in practice. The parameter t always lives on a bounded interval.
//
//   unit:               x = t,         t in (0,1)        support [0,1]
//   half_line:          x = t/(1-t),   t in (0,1)        support [0,inf)
//   inverse_unit:       x = 1/t,       t in (0,1)        support [1,inf)
//   negative_half_line: x = t/(1+t),   t in (-1,0)       support (-inf,0]
enum class GridMap { unit, half_line, inverse_unit, negative_half_line };

const char* to_string(GridMap map);
GridMap grid_map_from_string(const std::string& s);

// Pick the paper's reparameterization for a support interval.
GridMap default_grid_map(const Interval& support);

// An evaluation grid: monotone parameter column t plus the mapped
// coordinate column x. For plain (unmapped) grids t == x.
struct Grid {
  std::vector<double> t;
  std::vector<double> x;
  std::string descriptor;

  std::size_t size() const { return x.size(); }

  // t in [trim, 1-trim] (or the negative analogue), mapped through `map`.
  static Grid mapped(GridMap map, std::size_t points = 2000, double trim = 1e-3);
  // plain linear grid on [lo, hi]
  static Grid linear(double lo, double hi, std::size_t points);
  // log-spaced grid on [lo, hi], lo > 0
  static Grid log_spaced(double lo, double hi, std::size_t points);
};

}  // namespace poext
