#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "poext/errors.hpp"
#include "poext/oracle_mc.hpp"
#include "poext/order_checks.hpp"
#include "poext/scenario.hpp"
#include "poext/series.hpp"
#include "poext/version.hpp"

namespace {

using namespace poext;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInput = 2;

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

struct OutputOptions {
  std::string out_path;
  std::string format;  // "csv" or "structured"
  bool plot = false;
  std::size_t grid_points = 0;  // 0 = scenario default
  double tol = 1e-8;
};

void write_to(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream os(path);
  if (!os) throw ArgumentError("cannot open output file '" + path + "'");
  os << content;
}

std::string verdict_phrase(const Scenario& sc, Outcome outcome) {
  const std::string n = std::to_string(sc.sample_x.alphas.size());
  const std::string xs = sc.kind == ExtremeKind::min ? "X(1:" + n + ")" : "X(" + n + ":" + n + ")";
  const std::string ys = sc.kind == ExtremeKind::min ? "Y(1:" + n + ")" : "Y(" + n + ":" + n + ")";
  const bool star = !sc.checks.empty() && sc.checks.front() == CheckKind::star;
  const std::string rel = star ? "*" : "disp";
  switch (outcome) {
    case Outcome::le: return xs + " <=" + rel + " " + ys;
    case Outcome::ge: return xs + " >=" + rel + " " + ys;
    case Outcome::equal: return xs + " =" + rel + " " + ys + " (within tolerance)";
    case Outcome::neither: return "neither direction of the " +
                                  std::string(star ? "star" : "dispersive") + " order holds";
  }
  return "?";
}

SeriesOutput primary_series(const ScenarioReport& rep, const Scenario& sc, Outcome outcome) {
  SeriesOutput out;
  if (rep.dispersive) {
    out = series_output(*rep.dispersive, sc.id);
  } else if (rep.star) {
    out = series_output(*rep.star, sc.id);
  } else {
    throw ArgumentError("scenario '" + sc.id + "' produced no series (no order checks)");
  }
  out.metadata.emplace_back("verdict", verdict_phrase(sc, outcome));
  return out;
}

void maybe_plot(const OutputOptions& opt, const Scenario& sc, const SeriesOutput& series) {
  if (!opt.plot) return;
  const std::string path = (opt.out_path.empty() ? sc.id : opt.out_path) + ".svg";
  std::ofstream os(path);
  if (!os) throw ArgumentError("cannot open plot file '" + path + "'");
  write_svg(os, series, series.columns.size() - 1);
  std::cerr << "wrote " << path << "\n";
}

std::string render_structured(const Scenario& sc, const ScenarioReport& rep) {
  std::ostringstream os;
  os << "scenario " << sc.id << ": " << to_string(sc.kind) << " of n="
     << sc.sample_x.alphas.size() << "\n";
  os << "  baseline: " << sc.baseline_family;
  for (double p : sc.baseline_params) os << ' ' << p;
  os << "\n  generator X: " << sc.sample_x.generator_family;
  for (double p : sc.sample_x.generator_params) os << ' ' << p;
  os << "\n  generator Y: " << sc.sample_y.generator_family;
  for (double p : sc.sample_y.generator_params) os << ' ' << p;
  os << "\n  alphas X:";
  for (double a : sc.sample_x.alphas) os << ' ' << a;
  os << "\n  alphas Y:";
  for (double a : sc.sample_y.alphas) os << ' ' << a;
  os << "\n";
  if (!sc.note.empty()) os << "  note: " << sc.note << "\n";

  for (const auto& cond : rep.hypothesis_reports) {
    os << "\n" << cond.subject << " hypotheses\n";
    for (const auto& h : cond.hypotheses) {
      os << "  [" << (passes(h.verdict) ? "PASS" : "FAIL") << "] " << h.name << "  (" << h.evidence
         << ")\n";
    }
    os << "  => " << (cond.all_pass ? "all hypotheses hold" : "hypotheses violated") << "\n";
  }

  for (const auto& oc : rep.order_outcomes) {
    os << "\n" << to_string(oc.pair.forward.order) << " order, "
       << to_string(oc.pair.forward.criterion) << " criterion\n";
    const auto line = [&](const OrderCheckReport& r) {
      os << "  " << to_string(r.direction) << ": " << to_string(r.verdict);
      if (r.verdict == Verdict::violated && !r.witnesses.empty()) {
        os << "  (max violation " << r.max_violation << "; first witness x="
           << r.witnesses.front().location << ")";
      }
      os << "\n";
    };
    line(oc.pair.forward);
    line(oc.pair.reverse);
    os << "  => " << verdict_phrase(sc, oc.outcome) << "\n";
  }

  if (rep.overall) {
    os << "\nverdict: " << to_string(*rep.overall);
    if (sc.expectation) {
      os << " (expected " << to_string(*sc.expectation) << ") -> "
         << (rep.matches_expectation.value_or(false) ? "MATCH" : "MISMATCH");
    }
    os << "\n";
  }
  return os.str();
}

int cmd_reproduce(const std::string& figure_id, const OutputOptions& opt) {
  const FigureBinding* binding = nullptr;
  for (const auto& b : figure_bindings()) {
    if (b.figure_id == figure_id) binding = &b;
  }
  if (!binding) {
    std::ostringstream os;
    os << "unknown figure id '" << figure_id << "'; available:";
    for (const auto& b : figure_bindings()) os << ' ' << b.figure_id;
    throw ArgumentError(os.str());
  }
  const Scenario& sc = registry_scenario(binding->scenario_id);
  const ScenarioReport rep = run_scenario(sc, opt.grid_points, opt.tol);
  const Outcome outcome = rep.overall.value_or(Outcome::neither);

  SeriesOutput series = primary_series(rep, sc, outcome);
  series.metadata.emplace_back("figure", figure_id);
  write_to(opt.out_path, to_csv(series));
  maybe_plot(opt, sc, series);
  std::cerr << figure_id << " (" << sc.id << "): " << verdict_phrase(sc, outcome) << "\n";
  return rep.matches_expectation.value_or(true) ? kExitOk : kExitMismatch;
}

int cmd_check(const std::string& path, const OutputOptions& opt) {
  const Scenario sc = parse_scenario_file(path);
  const ScenarioReport rep = run_scenario(sc, opt.grid_points, opt.tol);

  if (opt.format == "csv") {
    const SeriesOutput series = primary_series(rep, sc, rep.overall.value_or(Outcome::neither));
    write_to(opt.out_path, to_csv(series));
    maybe_plot(opt, sc, series);
  } else {
    write_to(opt.out_path, render_structured(sc, rep));
    if (opt.plot) {
      const SeriesOutput series =
          primary_series(rep, sc, rep.overall.value_or(Outcome::neither));
      maybe_plot(opt, sc, series);
    }
  }
  return rep.matches_expectation.value_or(true) ? kExitOk : kExitMismatch;
}

int cmd_sample(const std::string& path, std::size_t N, std::uint64_t seed,
               const OutputOptions& opt) {
  const Scenario sc = parse_scenario_file(path);
  const ExtremeDistribution dist = sc.build_x();
  const POSampleSpec& spec = dist.sample();

  SampleBatch batch;
  if (spec.generator->family() == "independence") {
    batch = sample_independent(spec, N, seed);
  } else if (spec.n() == 2) {
    const CopulaCoupling coupling = sc.kind == ExtremeKind::min ? CopulaCoupling::survival
                                                                : CopulaCoupling::distributional;
    batch = sample_bivariate_archimedean(spec, N, seed, coupling);
  } else {
    throw UnsupportedError(
        "dependent sampling beyond n=2 is not available; use the independence generator or n=2");
  }

  std::vector<double> extremes = extreme_of_rows(batch, sc.kind);
  std::sort(extremes.begin(), extremes.end());
  const double ks = ks_distance(extremes, dist);
  const double crit = ks_critical_value(N);

  SeriesOutput series;
  series.metadata = {{"scenario", sc.id},
                     {"series", "empirical-vs-analytic"},
                     {"rows", std::to_string(N)},
                     {"seed", std::to_string(seed)},
                     {"ks-distance", fmt17(ks)},
                     {"ks-critical-0.01", fmt17(crit)},
                     {"ks-test", ks < crit ? "pass" : "fail"},
                     {"tool-version", version}};
  series.columns = {"x", "ecdf", "cdf"};
  series.rows.reserve(N);
  for (std::size_t i = 0; i < extremes.size(); ++i) {
    series.rows.push_back(
        {extremes[i], static_cast<double>(i + 1) / static_cast<double>(N), dist.cdf(extremes[i])});
  }
  write_to(opt.out_path, to_csv(series));
  std::cerr << "ks " << ks << (ks < crit ? " < " : " >= ") << crit << " at level 0.01 -> "
            << (ks < crit ? "pass" : "fail") << "\n";
  return ks < crit ? kExitOk : kExitMismatch;
}

int cmd_list() {
  std::printf("%-9s %-4s %-22s %-18s %-2s %-28s %s\n", "id", "kind", "baseline", "generator", "n",
              "checks", "expect");
  for (const auto& sc : scenario_registry()) {
    std::string base = sc.baseline_family;
    for (double p : sc.baseline_params) base += ' ' + std::to_string(p).substr(0, 4);
    std::string gen = sc.sample_x.generator_family;
    for (double p : sc.sample_x.generator_params) gen += ' ' + std::to_string(p).substr(0, 3);
    std::string checks;
    for (auto c : sc.checks) checks += std::string(checks.empty() ? "" : ",") + to_string(c);
    for (auto t : sc.theorems) checks += std::string(",") + to_string(t);
    std::string fig;
    for (const auto& b : figure_bindings()) {
      if (b.scenario_id == sc.id) fig = " [" + b.figure_id + "]";
    }
    std::printf("%-9s %-4s %-22s %-18s %-2d %-28s %s%s\n", sc.id.c_str(), to_string(sc.kind),
                base.c_str(), gen.c_str(), static_cast<int>(sc.sample_x.alphas.size()),
                checks.c_str(), to_string(*sc.expectation), fig.c_str());
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"proportional-odds sample extremes: order checks and published-figure data"};
  app.set_version_flag("--version", poext::version);
  app.require_subcommand(1);

  OutputOptions opt;
  std::string figure_id, scenario_path;
  std::size_t mc_n = 100000;
  std::uint64_t mc_seed = 20240917;

  auto add_common = [&](CLI::App* sub, bool with_format = true) {
    sub->add_option("--grid-points", opt.grid_points, "grid points (default: scenario setting)");
    sub->add_option("--tol", opt.tol, "verdict tolerance scale")->default_val(1e-8);
    sub->add_option("--out", opt.out_path, "write output to a file instead of stdout");
    if (with_format) {
      sub->add_option("--format", opt.format, "csv|structured")
          ->check(CLI::IsMember({"csv", "structured"}));
    }
    sub->add_flag("--plot", opt.plot, "also write a minimal SVG of the series");
  };

  auto* reproduce = app.add_subcommand("reproduce", "emit the data series of a published figure");
  reproduce->add_option("figure-id", figure_id, "fig1a|fig1b|fig2a|fig2b|fig3|fig4|fig5|fig6")
      ->required();
  add_common(reproduce, false);

  auto* check = app.add_subcommand("check", "run a scenario file's hypothesis and order checks");
  check->add_option("file", scenario_path, "scenario file")->required();
  add_common(check);

  auto* sample = app.add_subcommand("sample", "simulate the sample and compare empirical vs analytic cdf");
  sample->add_option("file", scenario_path, "scenario file")->required();
  sample->add_option("--n", mc_n, "number of simulated rows")->default_val(100000);
  sample->add_option("--seed", mc_seed, "rng seed")->default_val(20240917);
  sample->add_option("--out", opt.out_path, "write output to a file instead of stdout");

  auto* list = app.add_subcommand("list-scenarios", "list the built-in scenario registry");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? kExitInput : kExitOk;
  }

  try {
    if (reproduce->parsed()) return cmd_reproduce(figure_id, opt);
    if (check->parsed()) return cmd_check(scenario_path, opt);
    if (sample->parsed()) return cmd_sample(scenario_path, mc_n, mc_seed, opt);
    if (list->parsed()) return cmd_list();
  } catch (const poext::ArgumentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const poext::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const poext::UnsupportedError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
