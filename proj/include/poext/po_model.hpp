#pragma once

#include "poext/baselines.hpp"

namespace poext {

// Proportional-odds transform of a baseline: theta_Y(t) = alpha * theta_X(t),
// i.e. survival(x) = alpha*Fbar(x) / (1 - alpha_bar*Fbar(x)) with
// alpha_bar = 1 - alpha. alpha_bar is carried explicitly so expressions
// mirror the alpha/alpha_bar algebra instead of recomputing 1-alpha.
class POMarginal : public Distribution {
 public:
  POMarginal(BaselinePtr baseline, double alpha);

  double alpha() const { return alpha_; }
  double alpha_bar() const { return alpha_bar_; }
  const Baseline& baseline() const { return *baseline_; }

  Interval support() const override { return baseline_->support(); }
  double survival(double x) const override;
  double cdf(double x) const override;
  double density(double x) const override;
  double quantile(double u, ProbScale scale = ProbScale::cdf) const override;

  // Ratio of the marginal hazard to the baseline hazard: 1/(1 - alpha_bar*Fbar).
  double hazard_ratio(double x) const;

  // Transform between baseline and marginal probabilities (both survival scale):
  //   marginal s = alpha*p/(1 - alpha_bar*p),  baseline p = s/(alpha + alpha_bar*s)
  double survival_from_baseline(double p) const;
  double baseline_from_survival(double s) const;

 private:
  BaselinePtr baseline_;
  double alpha_;
  double alpha_bar_;
};

}  // namespace poext
