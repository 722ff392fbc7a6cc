#pragma once

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "poext/grid.hpp"
#include "poext/verdicts.hpp"

namespace poext {

// Archimedean copula generator phi: [0, t_max] -> [0,1], strictly decreasing
// and convex with phi(0) = 1. Non-strict generators have a finite t_max with
// phi(t_max) = 0 and are extended by the usual pseudo-inverse convention:
// phi(t) = 0 and phi'(t) = 0 for t > t_max.
//
// inverse() is the right-continuous inverse on (0,1]; inverse(u) for u -> 0
// tends to t_max.
//
// The two composite operations exist because tail grids overflow the plain
// ops long before the math degenerates: for the a/log(t+e^a) family,
// inverse(u) = e^{a/u} - e^a already exceeds double range for u < a/709.
// Families override them with log-domain implementations; the ratios they
// produce are always representable.
class Generator {
 public:
  virtual ~Generator() = default;

  const std::string& family() const { return family_; }
  const std::vector<double>& params() const { return params_; }
  double t_max() const { return t_max_; }

  // phi(t); 0 for t >= t_max. t must be nonnegative and not NaN.
  virtual double value(double t) const = 0;

  // phi^{-1}(u) for u in (0,1].
  virtual double inverse(double u) const = 0;

  // phi'(t) (order 1) or phi''(t) (order 2); both 0 beyond t_max.
  virtual double derivative(double t, int order) const = 0;

  // phi(scale * sum_i inverse(u_i)), evaluated stably.
  virtual double scaled_sum_value(std::span<const double> us, double scale) const;

  // phi'(scale * sum_i inverse(u_i)) / phi'(inverse(u_point)), evaluated
  // stably. Every density formula consumes phi' only through this ratio.
  virtual double scaled_sum_derivative_ratio(std::span<const double> us, double scale,
                                             double u_point) const;

  // Probe point and bound for the decay-to-zero check. Strict generators
  // that reach ~0 within double range use (t, 1e-9); log-decay families
  // report the smallest value reachable before t overflows.
  virtual double decay_probe() const;
  virtual double decay_bound() const { return 1e-9; }

 protected:
  Generator(std::string family, std::vector<double> params, double t_max)
      : family_(std::move(family)), params_(std::move(params)), t_max_(t_max) {}

  void require_valid_t(double t) const;
  void require_valid_u(double u) const;

 private:
  std::string family_;
  std::vector<double> params_;
  double t_max_;
};

using GeneratorPtr = std::shared_ptr<const Generator>;

// Catalog: "independence" (no params), "nelsen-4-2-19" (a > 0),
// "nelsen-4-2-8" (lambda >= 1, t_max = 1).
GeneratorPtr make_generator(const std::string& family, std::span<const double> params = {});

// Extension slot: wrap an arbitrary phi with numerically inverted inverse()
// and central-difference derivatives. Used for experiments and for feeding
// deliberately invalid "generators" to the validity checker.
GeneratorPtr make_custom_generator(std::string name, std::function<double(double)> phi,
                                   double t_max);

// Default evaluation grid on the generator's domain (linear head plus a
// log-spaced tail for strict generators).
Grid generator_check_grid(const Generator& gen, std::size_t points = 400);

// Verdicts for phi(0)=1, decay to 0, strict decrease and convexity.
ConditionReport check_generator_validity(const Generator& gen, int n, const Grid& grid);

enum class Shape { convex, concave };

// Midpoint test on log(phi) over the grid.
ShapeReport check_log_shape(const Generator& gen, const Grid& grid, Shape target);

// Midpoint test on phi/phi' over the grid.
ShapeReport check_ratio_shape(const Generator& gen, const Grid& grid, Shape target);

enum class CrossDirection { g2_over_g1, g1_over_g2 };

// Monotonicity verdict (increasing required) for the cross-generator ratio
//   phi_b(inverse_b(t)/n) / phi_a(inverse_a(t)/n),  t in (0,1),
// with (a,b) = (g1,g2) for g2_over_g1 and (g2,g1) for g1_over_g2.
ShapeReport check_cross_generator(const Generator& g1, const Generator& g2, int n,
                                  const Grid& tgrid, CrossDirection direction);

}  // namespace poext
