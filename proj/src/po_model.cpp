#include "poext/po_model.hpp"

#include <cmath>

#include "poext/errors.hpp"

namespace poext {

POMarginal::POMarginal(BaselinePtr baseline, double alpha)
    : baseline_(std::move(baseline)), alpha_(alpha), alpha_bar_(1.0 - alpha) {
  if (!baseline_) throw ArgumentError("PO marginal needs a baseline");
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw ArgumentError("PO ratio alpha must be positive");
}

double POMarginal::survival(double x) const {
  const double sf = baseline_->survival(x);
  return alpha_ * sf / (1.0 - alpha_bar_ * sf);
}

double POMarginal::cdf(double x) const {
  // F/(1 - alpha_bar*Fbar): the direct form keeps the left tail exact
  const double sf = baseline_->survival(x);
  return baseline_->cdf(x) / (1.0 - alpha_bar_ * sf);
}

double POMarginal::density(double x) const {
  const double sf = baseline_->survival(x);
  const double d = 1.0 - alpha_bar_ * sf;
  return alpha_ * baseline_->density(x) / (d * d);
}

double POMarginal::hazard_ratio(double x) const {
  return 1.0 / (1.0 - alpha_bar_ * baseline_->survival(x));
}

double POMarginal::survival_from_baseline(double p) const {
  return alpha_ * p / (1.0 - alpha_bar_ * p);
}

double POMarginal::baseline_from_survival(double s) const {
  return s / (alpha_ + alpha_bar_ * s);
}

double POMarginal::quantile(double u, ProbScale scale) const {
  if (!(u > 0.0 && u < 1.0)) throw DomainError("quantile argument must lie in (0,1)");
  if (scale == ProbScale::survival) {
    return baseline_->quantile(baseline_from_survival(u), ProbScale::survival);
  }
  // marginal cdf u corresponds to baseline cdf alpha*u/(1 - alpha_bar*u)
  return baseline_->quantile(alpha_ * u / (1.0 - alpha_bar_ * u), ProbScale::cdf);
}

}  // namespace poext
