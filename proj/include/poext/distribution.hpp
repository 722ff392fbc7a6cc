#pragma once

#include "poext/grid.hpp"

namespace poext {

enum class ProbScale { cdf, survival };

// Minimal continuous-distribution interface the order checks operate on.
// Baselines, PO marginals and extreme-order-statistic distributions all
// model it, so a plain lifetime distribution can stand in as a degenerate
// one-component "extreme" where useful.
class Distribution {
 public:
  virtual ~Distribution() = default;

  virtual Interval support() const = 0;
  virtual double cdf(double x) const = 0;
  virtual double survival(double x) const { return 1.0 - cdf(x); }
  virtual double density(double x) const = 0;

  // Inverse of the cdf (or survival function). u must lie in (0,1).
  virtual double quantile(double u, ProbScale scale = ProbScale::cdf) const = 0;
};

}  // namespace poext
