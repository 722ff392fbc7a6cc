#include "poext/series.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "poext/errors.hpp"
#include "poext/version.hpp"

namespace poext {

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

template <typename S>
SeriesOutput base_output(const S& s, const std::string& scenario_id, const char* kind) {
  SeriesOutput out;
  out.metadata = {
      {"scenario", scenario_id},
      {"series", kind},
      {"grid", s.grid_descriptor},
      {"path", s.closed_form ? "closed-form" : "numeric"},
      {"tool-version", version},
  };
  return out;
}

}  // namespace

SeriesOutput series_output(const DispersiveSeries& s, const std::string& scenario_id) {
  SeriesOutput out = base_output(s, scenario_id, "dispersive");
  out.columns = {"t", "x", "lhs", "rhs", "diff"};
  out.rows.reserve(s.t.size());
  for (std::size_t i = 0; i < s.t.size(); ++i) {
    out.rows.push_back({s.t[i], s.x[i], s.lhs[i], s.rhs[i], s.diff[i]});
  }
  return out;
}

SeriesOutput series_output(const StarSeries& s, const std::string& scenario_id) {
  SeriesOutput out = base_output(s, scenario_id, "star");
  out.columns = {"t", "x", "lhs", "rhs", "ratio"};
  out.rows.reserve(s.t.size());
  for (std::size_t i = 0; i < s.t.size(); ++i) {
    out.rows.push_back({s.t[i], s.x[i], s.lhs[i], s.rhs[i], s.ratio[i]});
  }
  return out;
}

void write_csv(std::ostream& os, const SeriesOutput& series) {
  for (const auto& [key, value] : series.metadata) {
    os << "# " << key << ": " << value << "\n";
  }
  for (std::size_t c = 0; c < series.columns.size(); ++c) {
    os << (c ? "," : "") << series.columns[c];
  }
  os << "\n";
  for (const auto& row : series.rows) {
    if (row.size() != series.columns.size()) throw ArgumentError("ragged series row");
    for (std::size_t c = 0; c < row.size(); ++c) {
      os << (c ? "," : "") << fmt17(row[c]);
    }
    os << "\n";
  }
}

std::string to_csv(const SeriesOutput& series) {
  std::ostringstream os;
  write_csv(os, series);
  return os.str();
}

void write_svg(std::ostream& os, const SeriesOutput& series, std::size_t value_column) {
  if (series.rows.empty() || value_column >= series.columns.size()) {
    throw ArgumentError("svg export needs rows and a valid value column");
  }
  const int w = 720, h = 420, pad = 50;
  double xmin = series.rows.front()[0], xmax = xmin;
  double ymin = series.rows.front()[value_column], ymax = ymin;
  for (const auto& row : series.rows) {
    xmin = std::min(xmin, row[0]);
    xmax = std::max(xmax, row[0]);
    ymin = std::min(ymin, row[value_column]);
    ymax = std::max(ymax, row[value_column]);
  }
  if (xmax == xmin) xmax = xmin + 1.0;
  if (ymax == ymin) ymax = ymin + 1.0;
  const auto sx = [&](double x) { return pad + (x - xmin) / (xmax - xmin) * (w - 2 * pad); };
  const auto sy = [&](double y) { return h - pad - (y - ymin) / (ymax - ymin) * (h - 2 * pad); };

  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
     << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<line x1=\"" << pad << "\" y1=\"" << h - pad << "\" x2=\"" << w - pad << "\" y2=\""
     << h - pad << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << pad << "\" y1=\"" << pad << "\" x2=\"" << pad << "\" y2=\"" << h - pad
     << "\" stroke=\"black\"/>\n";
  if (ymin < 0.0 && ymax > 0.0) {
    os << "<line x1=\"" << pad << "\" y1=\"" << sy(0.0) << "\" x2=\"" << w - pad << "\" y2=\""
       << sy(0.0) << "\" stroke=\"#bbbbbb\" stroke-dasharray=\"4 3\"/>\n";
  }
  os << "<text x=\"" << pad << "\" y=\"" << pad - 16 << "\" font-size=\"13\">"
     << series.columns[value_column] << " vs " << series.columns[0] << "</text>\n";
  os << "<polyline fill=\"none\" stroke=\"#1f6fb2\" stroke-width=\"1.2\" points=\"";
  for (const auto& row : series.rows) {
    os << sx(row[0]) << "," << sy(row[value_column]) << " ";
  }
  os << "\"/>\n</svg>\n";
}

}  // namespace poext
