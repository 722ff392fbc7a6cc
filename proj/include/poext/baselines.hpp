#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "poext/distribution.hpp"
#include "poext/grid.hpp"
#include "poext/verdicts.hpp"

namespace poext {

// Baseline lifetime distribution with closed-form cdf/survival/density/
// quantile and hazard machinery, on an explicit support interval.
class Baseline : public Distribution {
 public:
  const std::string& family() const { return family_; }
  const std::vector<double>& params() const { return params_; }
  Interval support() const override { return support_; }

  // f/Fbar and f/F on the open support.
  virtual double hazard(double x) const;
  virtual double reversed_hazard(double x) const;

  double quantile(double u, ProbScale scale = ProbScale::cdf) const override;

  // Endpoint-tolerant inverse used by internal composition paths: maps
  // p <= 0 / p >= 1 to the appropriate support endpoint instead of throwing.
  double quantile_ext(double p, ProbScale scale) const;

 protected:
  Baseline(std::string family, std::vector<double> params, Interval support)
      : family_(std::move(family)), params_(std::move(params)), support_(support) {}

  // Closed-form inverse survival on (0,1); cdf scale is derived.
  virtual double survival_inverse(double p) const = 0;
  virtual double cdf_inverse(double p) const { return survival_inverse(1.0 - p); }

  void require_in_support(double x) const;

 private:
  std::string family_;
  std::vector<double> params_;
  Interval support_;
};

using BaselinePtr = std::shared_ptr<const Baseline>;

// Catalog families and parameters:
//   "weibull-survival"     (c, k)      Fbar(x) = exp(-(cx)^k)        on [0,inf)
//   "exp-root"             (c, k)      F(x)    = 1 - exp(-(cx)^k)    on [0,inf)
//   "pareto-lomax"         (sigma, th) Fbar(x) = (1+x/sigma)^-th     on [0,inf)
//   "power-pareto"         (p)         Fbar(x) = x^-p                on [1,inf)
//   "negative-weibull"     (c, k)      F(x)    = exp(-(-cx)^k)       on (-inf,0]
//   "truncated-exp-growth" ()          F(x)    = (e^x-1)/(e-1)       on [0,1]
//   "exponential"          (rate)      Fbar(x) = exp(-rate*x)        on [0,inf)
// A support override restricts evaluation to a subinterval.
BaselinePtr make_baseline(const std::string& family, std::span<const double> params = {},
                          std::optional<Interval> support_override = std::nullopt);

struct EvalRecord {
  double x = 0.0;
  double cdf = 0.0;
  double survival = 0.0;
  double density = 0.0;
  double hazard = 0.0;
  double reversed_hazard = 0.0;
  double odds = 0.0;  // survival/cdf
};

EvalRecord evaluate(const Baseline& dist, double x);

// Monotonicity verdicts for r, r~, x*r and x*r~ over the grid.
struct AgingReport {
  MonotonicityReport hazard;
  MonotonicityReport reversed_hazard;
  MonotonicityReport x_hazard;
  MonotonicityReport x_reversed_hazard;

  bool dfr() const { return hazard.nonincreasing(); }
  bool ifr() const { return hazard.nondecreasing(); }
  bool irhr() const { return reversed_hazard.nondecreasing(); }
  bool drhr() const { return reversed_hazard.nonincreasing(); }
};

AgingReport classify_aging(const Baseline& dist, const Grid& grid);

// Default aging-check grid: the support's reparameterized grid, trimmed.
Grid baseline_check_grid(const Baseline& dist, std::size_t points = 500);

}  // namespace poext
