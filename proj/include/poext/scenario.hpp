#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "poext/extremes.hpp"
#include "poext/grid.hpp"

namespace poext {

enum class CheckKind { dispersive, dispersive_quantile, star };

const char* to_string(CheckKind k);

enum class TheoremId {
  t3_1, t3_2, t3_3, t3_4, c3_1, c3_2,
  t4_1, t4_2, t4_3, t4_4, c4_1, c4_2,
};

const char* to_string(TheoremId id);
TheoremId theorem_from_string(const std::string& s);

// Verdict summary of an order comparison between X-extreme and Y-extreme.
enum class Outcome { le, ge, neither, equal };

const char* to_string(Outcome o);
Outcome outcome_from_string(const std::string& s);

struct SampleDesc {
  std::string generator_family;
  std::vector<double> generator_params;
  std::vector<double> alphas;
};

struct GridSpec {
  std::optional<GridMap> map;  // defaults from the baseline support
  std::size_t points = 2000;
  double trim = 1e-3;
};

// A comparison scenario: two PO samples over one baseline, the extreme kind,
// and the checks to run. Registry entries carry the published parameters and
// the expected verdict.
struct Scenario {
  std::string id;
  ExtremeKind kind = ExtremeKind::min;
  std::string baseline_family;
  std::vector<double> baseline_params;
  std::optional<Interval> support_override;
  SampleDesc sample_x;
  SampleDesc sample_y;
  std::vector<CheckKind> checks;
  std::vector<TheoremId> theorems;
  GridSpec grid;
  std::optional<Outcome> expectation;
  std::string note;

  BaselinePtr make_shared_baseline() const;
  ExtremeDistribution build_x() const;
  ExtremeDistribution build_y() const;
  Grid make_grid(std::size_t points_override = 0) const;
};

// The published examples and counterexamples, with their exact parameters.
const std::vector<Scenario>& scenario_registry();

const Scenario& registry_scenario(const std::string& id);

// Figure panels of the reproduce subcommand -> registry scenario ids.
struct FigureBinding {
  std::string figure_id;
  std::string scenario_id;
  std::string claim;  // the published observation, as a verdict line
};
const std::vector<FigureBinding>& figure_bindings();

// Parse the scenario file format (see README): one "key: value" per line,
// '#' comments. Throws ArgumentError with a line-numbered diagnostic.
Scenario parse_scenario(std::istream& in);
Scenario parse_scenario_file(const std::string& path);

// Serialize in the same format (registry files are generated through this).
std::string to_text(const Scenario& s);

}  // namespace poext
