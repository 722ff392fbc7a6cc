#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace poext {

// Three-valued outcome of a grid-based check. A shape or monotonicity claim
// HOLDS when the weak inequality is satisfied everywhere on the grid and at
// least one point confirms it strictly beyond tolerance; it is VIOLATED when
// the opposite inequality is confirmed (two consecutive grid points beyond
// tolerance); INCONCLUSIVE means the data stayed inside the tolerance band
// everywhere, which is how equality cases (affine log-generator, constant
// ratio) report. Consumers that test weak hypotheses accept INCONCLUSIVE.
enum class Verdict { holds, violated, inconclusive };

const char* to_string(Verdict v);

// Weak reading of a verdict: anything that is not a confirmed violation.
inline bool passes(Verdict v) { return v != Verdict::violated; }

enum class Monotonicity { increasing, decreasing, constant, neither };

const char* to_string(Monotonicity m);

struct Witness {
  double location = 0.0;   // grid coordinate of the violation
  double violation = 0.0;  // signed slack beyond tolerance
};

// Result of a convexity/concavity (midpoint) test.
struct ShapeReport {
  Verdict verdict = Verdict::inconclusive;
  std::vector<Witness> witnesses;    // populated when violated
  double max_violation = 0.0;        // worst slack against the claim
  double max_confirmation = 0.0;     // best slack supporting the claim
};

// Result of a finite-difference monotonicity sweep.
struct MonotonicityReport {
  Monotonicity kind = Monotonicity::constant;
  double max_rise = 0.0;             // largest positive step beyond tol
  double max_drop = 0.0;             // largest negative step beyond tol (as magnitude)
  std::vector<Witness> up_witnesses;
  std::vector<Witness> down_witnesses;

  bool nondecreasing() const { return kind == Monotonicity::increasing || kind == Monotonicity::constant; }
  bool nonincreasing() const { return kind == Monotonicity::decreasing || kind == Monotonicity::constant; }
};

struct HypothesisResult {
  std::string name;
  Verdict verdict = Verdict::inconclusive;
  std::string evidence;
};

// Per-theorem (or per-generator-validity) bundle of named hypothesis verdicts.
struct ConditionReport {
  std::string subject;                     // theorem id or check name
  std::vector<HypothesisResult> hypotheses;
  bool all_pass = false;

  const HypothesisResult* find(const std::string& name) const;
};

ConditionReport make_condition_report(std::string subject, std::vector<HypothesisResult> hypotheses);

// Classify y(x) monotonicity with relative tolerance
// tol = tol_scale * (1 + |level|). A direction counts as confirmed only when
// two consecutive steps exceed tolerance, which suppresses isolated
// float-noise flips.
MonotonicityReport classify_monotonicity(std::span<const double> xs, std::span<const double> ys,
                                         double tol_scale = 1e-9);

// Discrete midpoint convexity test of f on the grid points at fixed stride:
// convex requires f((s+t)/2) <= (f(s)+f(t))/2 + tol for all pairs.
ShapeReport check_midpoint_shape(const std::function<double(double)>& f, std::span<const double> ts,
                                 bool want_convex, double tol_scale = 1e-9);

}  // namespace poext
