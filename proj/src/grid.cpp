#include "poext/grid.hpp"

#include <cmath>

#include "poext/errors.hpp"

namespace poext {

const char* to_string(GridMap map) {
  switch (map) {
    case GridMap::unit: return "unit";
    case GridMap::half_line: return "half-line";
    case GridMap::inverse_unit: return "inverse-unit";
    case GridMap::negative_half_line: return "negative-half-line";
  }
  return "?";
}

GridMap grid_map_from_string(const std::string& s) {
  if (s == "unit") return GridMap::unit;
  if (s == "half-line") return GridMap::half_line;
  if (s == "inverse-unit") return GridMap::inverse_unit;
  if (s == "negative-half-line") return GridMap::negative_half_line;
  throw ArgumentError("unknown grid map '" + s + "'");
}

GridMap default_grid_map(const Interval& support) {
  const bool lo_finite = std::isfinite(support.lo);
  const bool hi_finite = std::isfinite(support.hi);
  if (lo_finite && hi_finite) return GridMap::unit;
  if (!lo_finite && hi_finite) return GridMap::negative_half_line;
  if (support.lo >= 1.0) return GridMap::inverse_unit;
  return GridMap::half_line;
}

Grid Grid::mapped(GridMap map, std::size_t points, double trim) {
  if (points < 2) throw ArgumentError("grid needs at least 2 points");
  if (!(trim > 0.0 && trim < 0.5)) throw ArgumentError("grid trim must lie in (0, 0.5)");
  Grid g;
  g.t.resize(points);
  g.x.resize(points);
  const double lo = (map == GridMap::negative_half_line) ? -1.0 + trim : trim;
  const double hi = (map == GridMap::negative_half_line) ? -trim : 1.0 - trim;
  const double step = (hi - lo) / static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) {
    const double t = (i + 1 == points) ? hi : lo + step * static_cast<double>(i);
    g.t[i] = t;
    switch (map) {
      case GridMap::unit: g.x[i] = t; break;
      case GridMap::half_line: g.x[i] = t / (1.0 - t); break;
      case GridMap::inverse_unit: g.x[i] = 1.0 / t; break;
      case GridMap::negative_half_line: g.x[i] = t / (1.0 + t); break;
    }
  }
  g.descriptor = std::string(to_string(map)) + " n=" + std::to_string(points);
  return g;
}

Grid Grid::linear(double lo, double hi, std::size_t points) {
  if (points < 2) throw ArgumentError("grid needs at least 2 points");
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw ArgumentError("linear grid needs finite lo < hi");
  }
  Grid g;
  g.t.resize(points);
  const double step = (hi - lo) / static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) {
    g.t[i] = (i + 1 == points) ? hi : lo + step * static_cast<double>(i);
  }
  g.x = g.t;
  g.descriptor = "linear n=" + std::to_string(points);
  return g;
}

Grid Grid::log_spaced(double lo, double hi, std::size_t points) {
  if (points < 2) throw ArgumentError("grid needs at least 2 points");
  if (!(lo > 0.0 && lo < hi) || !std::isfinite(hi)) {
    throw ArgumentError("log grid needs 0 < lo < hi < inf");
  }
  Grid g;
  g.t.resize(points);
  const double llo = std::log(lo);
  const double lhi = std::log(hi);
  const double step = (lhi - llo) / static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) {
    g.t[i] = (i + 1 == points) ? hi : std::exp(llo + step * static_cast<double>(i));
  }
  g.x = g.t;
  g.descriptor = "log n=" + std::to_string(points);
  return g;
}

}  // namespace poext
