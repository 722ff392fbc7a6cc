#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "poext/order_checks.hpp"

namespace poext {

// Column-oriented numeric series plus '#'-prefixed metadata, rendered as CSV
// with 17 significant digits so the values round-trip exactly.
struct SeriesOutput {
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;  // row-major, rows[i].size() == columns.size()
};

SeriesOutput series_output(const DispersiveSeries& s, const std::string& scenario_id);
SeriesOutput series_output(const StarSeries& s, const std::string& scenario_id);

void write_csv(std::ostream& os, const SeriesOutput& series);
std::string to_csv(const SeriesOutput& series);

// Minimal self-contained SVG polyline of column `value_column` against the
// first column; a plotting convenience, not an output contract.
void write_svg(std::ostream& os, const SeriesOutput& series, std::size_t value_column);

}  // namespace poext
