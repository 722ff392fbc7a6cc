#include "poext/scenario.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "poext/errors.hpp"

namespace poext {

const char* to_string(CheckKind k) {
  switch (k) {
    case CheckKind::dispersive: return "dispersive";
    case CheckKind::dispersive_quantile: return "dispersive-quantile";
    case CheckKind::star: return "star";
  }
  return "?";
}

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::le: return "le";
    case Outcome::ge: return "ge";
    case Outcome::neither: return "neither";
    case Outcome::equal: return "equal";
  }
  return "?";
}

Outcome outcome_from_string(const std::string& s) {
  if (s == "le") return Outcome::le;
  if (s == "ge") return Outcome::ge;
  if (s == "neither") return Outcome::neither;
  if (s == "equal") return Outcome::equal;
  throw ArgumentError("unknown expectation '" + s + "' (want le|ge|neither|equal)");
}

BaselinePtr Scenario::make_shared_baseline() const {
  return make_baseline(baseline_family, baseline_params, support_override);
}

ExtremeDistribution Scenario::build_x() const {
  return ExtremeDistribution(
      kind, POSampleSpec(make_shared_baseline(), sample_x.alphas,
                         make_generator(sample_x.generator_family, sample_x.generator_params)));
}

ExtremeDistribution Scenario::build_y() const {
  return ExtremeDistribution(
      kind, POSampleSpec(make_shared_baseline(), sample_y.alphas,
                         make_generator(sample_y.generator_family, sample_y.generator_params)));
}

Grid Scenario::make_grid(std::size_t points_override) const {
  const GridMap map = grid.map ? *grid.map : default_grid_map(make_shared_baseline()->support());
  return Grid::mapped(map, points_override ? points_override : grid.points, grid.trim);
}

// ---------------------------------------------------------------------------
// registry

namespace {

Scenario make_entry(std::string id, ExtremeKind kind, std::string base_family,
                    std::vector<double> base_params, std::string gen_family,
                    std::vector<double> gen_params, std::vector<double> alphas, double alpha,
                    std::vector<CheckKind> checks, std::vector<TheoremId> theorems, GridMap map,
                    Outcome expect, std::string note = {}) {
  Scenario s;
  s.id = std::move(id);
  s.kind = kind;
  s.baseline_family = std::move(base_family);
  s.baseline_params = std::move(base_params);
  s.sample_x.generator_family = gen_family;
  s.sample_x.generator_params = gen_params;
  s.sample_x.alphas = std::move(alphas);
  s.sample_y.generator_family = std::move(gen_family);
  s.sample_y.generator_params = std::move(gen_params);
  s.sample_y.alphas.assign(s.sample_x.alphas.size(), alpha);
  s.checks = std::move(checks);
  s.theorems = std::move(theorems);
  s.grid.map = map;
  s.expectation = expect;
  s.note = std::move(note);
  return s;
}

std::vector<Scenario> build_registry() {
  using CK = CheckKind;
  std::vector<Scenario> r;

  r.push_back(make_entry("ce-3.1a", ExtremeKind::min, "weibull-survival", {9.0, 0.9},
                         "independence", {}, {7.0, 25.0, 100.0}, 44.0,
                         {CK::dispersive, CK::dispersive_quantile}, {TheoremId::t3_1},
                         GridMap::half_line, Outcome::neither,
                         "DFR baseline; mean alpha 44 breaks the 0<=alpha<=1 clause"));
  r.push_back(make_entry("ce-3.1b", ExtremeKind::min, "weibull-survival", {1.0, 3.0},
                         "independence", {}, {0.78, 0.97, 67.0}, 68.75 / 3.0,
                         {CK::dispersive, CK::dispersive_quantile}, {TheoremId::t3_1},
                         GridMap::half_line, Outcome::neither, "IFR variant"));
  r.push_back(make_entry("ce-3.2a", ExtremeKind::min, "pareto-lomax", {13.0, 0.9},
                         "independence", {}, {0.75, 0.95, 23.0, 43.0}, 16.925, {CK::star},
                         {TheoremId::t3_3}, GridMap::half_line, Outcome::neither,
                         "x*r(x) increasing variant"));
  r.push_back(make_entry("ce-3.2b", ExtremeKind::min, "power-pareto", {2.0}, "independence", {},
                         {2.0, 33.0, 63.0, 183.0}, 70.25, {CK::star}, {TheoremId::t3_3},
                         GridMap::inverse_unit, Outcome::neither, "x*r(x) constant variant"));
  r.push_back(make_entry("ce-4.1", ExtremeKind::max, "exp-root", {5.0, 0.5}, "independence", {},
                         {0.9, 0.95, 27.0, 37.0}, 16.4625,
                         {CK::dispersive, CK::dispersive_quantile}, {TheoremId::t4_1},
                         GridMap::half_line, Outcome::neither, "DRHR baseline"));
  r.push_back(make_entry("ce-4.2", ExtremeKind::max, "pareto-lomax", {1.0, 0.6}, "independence",
                         {}, {5.0, 15.0, 25.0, 45.0}, 22.5, {CK::star}, {TheoremId::t4_3},
                         GridMap::half_line, Outcome::neither, "x*r~(x) decreasing"));
  r.push_back(make_entry("ex-5.1", ExtremeKind::min, "weibull-survival", {1.0, 0.3},
                         "nelsen-4-2-19", {5.0}, {0.34, 0.65, 1.23}, 0.88,
                         {CK::dispersive, CK::dispersive_quantile}, {TheoremId::t3_1},
                         GridMap::half_line, Outcome::le));
  r.push_back(make_entry("ex-5.2", ExtremeKind::min, "power-pareto", {0.5}, "nelsen-4-2-19",
                         {7.0}, {0.24, 0.45, 0.57, 1.23}, 0.73, {CK::star}, {TheoremId::t3_3},
                         GridMap::inverse_unit, Outcome::le, "x*r(x) constant"));
  r.push_back(make_entry("ex-5.3", ExtremeKind::max, "negative-weibull", {3.0, 0.3},
                         "nelsen-4-2-8", {1.5}, {0.95, 0.32, 1.54, 0.76}, 0.8925,
                         {CK::dispersive, CK::dispersive_quantile}, {TheoremId::t4_1},
                         GridMap::negative_half_line, Outcome::ge,
                         "n=4 per the four ratios and their mean 0.8925; the published "
                         "displays write a 3-term sum"));
  r.push_back(make_entry("ex-5.4", ExtremeKind::max, "truncated-exp-growth", {}, "nelsen-4-2-8",
                         {1.5}, {0.5, 0.8, 1.7}, 1.6, {CK::star}, {TheoremId::t4_3},
                         GridMap::unit, Outcome::ge));
  return r;
}

}  // namespace

const std::vector<Scenario>& scenario_registry() {
  static const std::vector<Scenario> registry = build_registry();
  return registry;
}

const Scenario& registry_scenario(const std::string& id) {
  for (const auto& s : scenario_registry()) {
    if (s.id == id) return s;
  }
  throw ArgumentError("unknown registry scenario '" + id + "'");
}

const std::vector<FigureBinding>& figure_bindings() {
  static const std::vector<FigureBinding> bindings = {
      {"fig1a", "ce-3.1a", "neither direction of the dispersive order holds"},
      {"fig1b", "ce-3.1b", "neither direction of the dispersive order holds"},
      {"fig2a", "ce-3.2a", "ratio neither increasing nor decreasing"},
      {"fig2b", "ce-3.2b", "ratio neither increasing nor decreasing"},
      {"fig3", "ex-5.1", "X(1:3) <=disp Y(1:3)"},
      {"fig4", "ex-5.2", "X(1:4) <=* Y(1:4)"},
      {"fig5", "ex-5.3", "X(4:4) >=disp Y(4:4)"},
      {"fig6", "ex-5.4", "X(3:3) >=* Y(3:3)"},
  };
  return bindings;
}

// ---------------------------------------------------------------------------
// scenario file format

namespace {

// shortest decimal that round-trips to the same double
std::string format_double(double v) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

double parse_number(const std::string& tok, int line, const std::string& field) {
  if (tok == "inf" || tok == "+inf") return std::numeric_limits<double>::infinity();
  if (tok == "-inf") return -std::numeric_limits<double>::infinity();
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(tok, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != tok.size()) {
    throw ArgumentError("line " + std::to_string(line) + ": field '" + field +
                        "': bad number '" + tok + "'");
  }
  return v;
}

std::vector<double> parse_numbers(const std::vector<std::string>& toks, int line,
                                  const std::string& field) {
  std::vector<double> out;
  out.reserve(toks.size());
  for (const auto& t : toks) out.push_back(parse_number(t, line, field));
  return out;
}

void require_positive(const std::vector<double>& vs, int line, const std::string& field) {
  for (double v : vs) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw ArgumentError("line " + std::to_string(line) + ": field '" + field +
                          "': proportional odds ratios must be positive, got " +
                          format_double(v));
    }
  }
}

}  // namespace

Scenario parse_scenario(std::istream& in) {
  Scenario s;
  bool saw_id = false, saw_kind = false, saw_baseline = false, saw_generator = false,
       saw_alphas = false, saw_alpha_y = false;
  std::optional<std::vector<std::string>> gen_y_tokens;
  std::optional<double> alpha_scalar;

  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) {
      throw ArgumentError("line " + std::to_string(lineno) + ": expected 'key: value'");
    }
    std::string key = line.substr(first, colon - first);
    while (!key.empty() && (key.back() == ' ' || key.back() == '\t')) key.pop_back();
    const std::string value = line.substr(colon + 1);
    const auto toks = split_ws(value);

    const auto require_tokens = [&](std::size_t lo, std::size_t hi) {
      if (toks.size() < lo || toks.size() > hi) {
        throw ArgumentError("line " + std::to_string(lineno) + ": field '" + key +
                            "': expected between " + std::to_string(lo) + " and " +
                            std::to_string(hi) + " value(s)");
      }
    };

    if (key == "id") {
      require_tokens(1, 1);
      s.id = toks[0];
      saw_id = true;
    } else if (key == "kind") {
      require_tokens(1, 1);
      if (toks[0] == "min") s.kind = ExtremeKind::min;
      else if (toks[0] == "max") s.kind = ExtremeKind::max;
      else throw ArgumentError("line " + std::to_string(lineno) + ": field 'kind': want min|max");
      saw_kind = true;
    } else if (key == "baseline") {
      require_tokens(1, 8);
      s.baseline_family = toks[0];
      s.baseline_params = parse_numbers({toks.begin() + 1, toks.end()}, lineno, key);
      saw_baseline = true;
    } else if (key == "support") {
      require_tokens(2, 2);
      s.support_override = Interval{parse_number(toks[0], lineno, key),
                                    parse_number(toks[1], lineno, key)};
    } else if (key == "generator") {
      require_tokens(1, 8);
      s.sample_x.generator_family = toks[0];
      s.sample_x.generator_params = parse_numbers({toks.begin() + 1, toks.end()}, lineno, key);
      saw_generator = true;
    } else if (key == "generator-y") {
      require_tokens(1, 8);
      gen_y_tokens = toks;
    } else if (key == "alphas") {
      require_tokens(2, 64);
      s.sample_x.alphas = parse_numbers(toks, lineno, key);
      require_positive(s.sample_x.alphas, lineno, key);
      saw_alphas = true;
    } else if (key == "alpha") {
      require_tokens(1, 1);
      alpha_scalar = parse_number(toks[0], lineno, key);
      require_positive({*alpha_scalar}, lineno, key);
      saw_alpha_y = true;
    } else if (key == "alphas-y") {
      require_tokens(2, 64);
      s.sample_y.alphas = parse_numbers(toks, lineno, key);
      require_positive(s.sample_y.alphas, lineno, key);
      saw_alpha_y = true;
    } else if (key == "checks") {
      require_tokens(1, 16);
      for (const auto& t : toks) {
        if (t == "dispersive") s.checks.push_back(CheckKind::dispersive);
        else if (t == "dispersive-quantile") s.checks.push_back(CheckKind::dispersive_quantile);
        else if (t == "star") s.checks.push_back(CheckKind::star);
        else s.theorems.push_back(theorem_from_string(t));  // throws with its own message
      }
    } else if (key == "grid") {
      require_tokens(1, 2);
      if (toks.size() == 2) {
        s.grid.map = grid_map_from_string(toks[0]);
        s.grid.points = static_cast<std::size_t>(parse_number(toks[1], lineno, key));
      } else {
        s.grid.points = static_cast<std::size_t>(parse_number(toks[0], lineno, key));
      }
      if (s.grid.points < 8) {
        throw ArgumentError("line " + std::to_string(lineno) + ": field 'grid': need >= 8 points");
      }
    } else if (key == "expect") {
      require_tokens(1, 1);
      s.expectation = outcome_from_string(toks[0]);
    } else if (key == "note") {
      s.note = value.substr(value.find_first_not_of(" \t"));
    } else {
      throw ArgumentError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }

  if (!saw_id) throw ArgumentError("scenario file missing 'id'");
  if (!saw_kind) throw ArgumentError("scenario file missing 'kind'");
  if (!saw_baseline) throw ArgumentError("scenario file missing 'baseline'");
  if (!saw_generator) throw ArgumentError("scenario file missing 'generator'");
  if (!saw_alphas) throw ArgumentError("scenario file missing 'alphas'");
  if (!saw_alpha_y) throw ArgumentError("scenario file missing 'alpha' (or 'alphas-y')");
  if (s.checks.empty() && s.theorems.empty()) {
    throw ArgumentError("scenario file missing 'checks'");
  }

  if (gen_y_tokens) {
    s.sample_y.generator_family = (*gen_y_tokens)[0];
    s.sample_y.generator_params =
        parse_numbers({gen_y_tokens->begin() + 1, gen_y_tokens->end()}, 0, "generator-y");
  } else {
    s.sample_y.generator_family = s.sample_x.generator_family;
    s.sample_y.generator_params = s.sample_x.generator_params;
  }
  if (alpha_scalar) {
    s.sample_y.alphas.assign(s.sample_x.alphas.size(), *alpha_scalar);
  }
  if (s.sample_y.alphas.size() != s.sample_x.alphas.size()) {
    throw ArgumentError("field 'alphas-y': size must match 'alphas'");
  }

  // construction-time validation of families/parameters
  s.make_shared_baseline();
  make_generator(s.sample_x.generator_family, s.sample_x.generator_params);
  make_generator(s.sample_y.generator_family, s.sample_y.generator_params);
  return s;
}

Scenario parse_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open scenario file '" + path + "'");
  try {
    return parse_scenario(in);
  } catch (const ArgumentError& e) {
    throw ArgumentError(path + ": " + e.what());
  }
}

std::string to_text(const Scenario& s) {
  std::ostringstream os;
  const auto numbers = [&](const std::vector<double>& vs) {
    std::string out;
    for (double v : vs) {
      out += ' ';
      out += format_double(v);
    }
    return out;
  };
  os << "id: " << s.id << "\n";
  os << "kind: " << to_string(s.kind) << "\n";
  os << "baseline: " << s.baseline_family << numbers(s.baseline_params) << "\n";
  if (s.support_override) {
    os << "support:" << numbers({s.support_override->lo, s.support_override->hi}) << "\n";
  }
  os << "generator: " << s.sample_x.generator_family << numbers(s.sample_x.generator_params)
     << "\n";
  if (s.sample_y.generator_family != s.sample_x.generator_family ||
      s.sample_y.generator_params != s.sample_x.generator_params) {
    os << "generator-y: " << s.sample_y.generator_family << numbers(s.sample_y.generator_params)
       << "\n";
  }
  os << "alphas:" << numbers(s.sample_x.alphas) << "\n";
  const bool homog_y = std::all_of(s.sample_y.alphas.begin(), s.sample_y.alphas.end(),
                                   [&](double a) { return a == s.sample_y.alphas.front(); });
  if (homog_y) {
    os << "alpha: " << format_double(s.sample_y.alphas.front()) << "\n";
  } else {
    os << "alphas-y:" << numbers(s.sample_y.alphas) << "\n";
  }
  os << "checks:";
  for (auto c : s.checks) os << ' ' << to_string(c);
  for (auto t : s.theorems) {
    const std::string tid = to_string(t);
    os << ' ' << (tid[0] == 'C' ? "corollary-" + tid.substr(1) : "theorem-" + tid);
  }
  os << "\n";
  if (s.grid.map) {
    os << "grid: " << to_string(*s.grid.map) << ' ' << s.grid.points << "\n";
  } else {
    os << "grid: " << s.grid.points << "\n";
  }
  if (s.expectation) os << "expect: " << to_string(*s.expectation) << "\n";
  if (!s.note.empty()) os << "note: " << s.note << "\n";
  return os.str();
}

}  // namespace poext
