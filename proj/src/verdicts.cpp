#include "poext/verdicts.hpp"

#include <algorithm>
#include <cmath>

#include "poext/errors.hpp"

namespace poext {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "HOLDS";
    case Verdict::violated: return "VIOLATED";
    case Verdict::inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

const char* to_string(Monotonicity m) {
  switch (m) {
    case Monotonicity::increasing: return "increasing";
    case Monotonicity::decreasing: return "decreasing";
    case Monotonicity::constant: return "constant";
    case Monotonicity::neither: return "neither";
  }
  return "?";
}

const HypothesisResult* ConditionReport::find(const std::string& name) const {
  for (const auto& h : hypotheses) {
    if (h.name == name) return &h;
  }
  return nullptr;
}

ConditionReport make_condition_report(std::string subject, std::vector<HypothesisResult> hypotheses) {
  ConditionReport report;
  report.subject = std::move(subject);
  report.hypotheses = std::move(hypotheses);
  report.all_pass = std::all_of(report.hypotheses.begin(), report.hypotheses.end(),
                                [](const HypothesisResult& h) { return passes(h.verdict); });
  return report;
}

namespace {

// Two consecutive steps beyond tolerance confirm a direction.
struct StepScan {
  double max_step = 0.0;           // largest tolerance excess seen
  std::vector<Witness> witnesses;  // locations of confirmed runs
  bool confirmed = false;
  int run = 0;

  void feed(double location, double excess) {
    if (excess > 0.0) {
      max_step = std::max(max_step, excess);
      if (++run >= 2) {
        confirmed = true;
        if (witnesses.size() < 64) witnesses.push_back({location, excess});
      }
    } else {
      run = 0;
    }
  }
};

}  // namespace

MonotonicityReport classify_monotonicity(std::span<const double> xs, std::span<const double> ys,
                                         double tol_scale) {
  if (xs.size() != ys.size() || xs.size() < 3) {
    throw ArgumentError("monotonicity check needs matching arrays with >= 3 points");
  }
  StepScan up, down;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    const double dy = ys[i + 1] - ys[i];
    const double dir = xs[i + 1] >= xs[i] ? 1.0 : -1.0;  // orient by increasing x
    const double step = dy * dir;
    const double tol = tol_scale * (1.0 + std::max(std::abs(ys[i]), std::abs(ys[i + 1])));
    up.feed(xs[i + 1], step - tol);
    down.feed(xs[i + 1], -step - tol);
  }

  MonotonicityReport rep;
  rep.max_rise = up.max_step;
  rep.max_drop = down.max_step;
  rep.up_witnesses = std::move(up.witnesses);
  rep.down_witnesses = std::move(down.witnesses);
  if (up.confirmed && down.confirmed) {
    rep.kind = Monotonicity::neither;
  } else if (up.confirmed) {
    rep.kind = Monotonicity::increasing;
  } else if (down.confirmed) {
    rep.kind = Monotonicity::decreasing;
  } else {
    rep.kind = Monotonicity::constant;
  }
  return rep;
}

ShapeReport check_midpoint_shape(const std::function<double(double)>& f, std::span<const double> ts,
                                 bool want_convex, double tol_scale) {
  if (ts.size() < 3) throw ArgumentError("shape check needs >= 3 grid points");
  ShapeReport rep;
  StepScan against;
  for (std::size_t i = 0; i + 2 < ts.size(); ++i) {
    const double s = ts[i];
    const double t = ts[i + 2];
    const double mid = f(0.5 * (s + t));
    const double lin = 0.5 * (f(s) + f(t));
    // positive slack = convex side
    const double slack = lin - mid;
    const double tol = tol_scale * (1.0 + std::max(std::abs(lin), std::abs(mid)));
    const double support_slack = want_convex ? slack : -slack;
    if (support_slack > tol) {
      rep.max_confirmation = std::max(rep.max_confirmation, support_slack - tol);
      against.feed(0.5 * (s + t), -1.0);
    } else {
      against.feed(0.5 * (s + t), -support_slack - tol);
    }
    rep.max_violation = std::max(rep.max_violation, -support_slack - tol);
  }
  if (against.confirmed) {
    rep.verdict = Verdict::violated;
    rep.witnesses = against.witnesses;
  } else if (rep.max_confirmation > 0.0) {
    rep.verdict = Verdict::holds;
  } else {
    rep.verdict = Verdict::inconclusive;
  }
  return rep;
}

}  // namespace poext
