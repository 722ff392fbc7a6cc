#include "poext/baselines.hpp"

#include <cmath>
#include <limits>
#include <utility>

#include "poext/errors.hpp"

namespace poext {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

void Baseline::require_in_support(double x) const {
  if (std::isnan(x) || !support_.contains(x)) {
    throw DomainError("x=" + std::to_string(x) + " outside support of " + family_);
  }
}

double Baseline::hazard(double x) const {
  const double sf = survival(x);
  return density(x) / sf;
}

double Baseline::reversed_hazard(double x) const {
  const double F = cdf(x);
  return density(x) / F;
}

double Baseline::quantile(double u, ProbScale scale) const {
  if (!(u > 0.0 && u < 1.0)) throw DomainError("quantile argument must lie in (0,1)");
  return scale == ProbScale::survival ? survival_inverse(u) : cdf_inverse(u);
}

double Baseline::quantile_ext(double p, ProbScale scale) const {
  if (scale == ProbScale::survival) {
    if (p <= 0.0) return support_.hi;
    if (p >= 1.0) return support_.lo;
    return survival_inverse(p);
  }
  if (p <= 0.0) return support_.lo;
  if (p >= 1.0) return support_.hi;
  return cdf_inverse(p);
}

EvalRecord evaluate(const Baseline& dist, double x) {
  const Interval s = dist.support();
  if (std::isnan(x) || !s.contains(x)) {
    throw DomainError("x=" + std::to_string(x) + " outside support of " + dist.family());
  }
  EvalRecord rec;
  rec.x = x;
  rec.cdf = dist.cdf(x);
  rec.survival = dist.survival(x);
  rec.density = dist.density(x);
  // endpoint divisions yield IEEE infinities rather than errors here
  rec.hazard = rec.survival > 0.0 ? rec.density / rec.survival : kInf;
  rec.reversed_hazard = rec.cdf > 0.0 ? rec.density / rec.cdf : kInf;
  rec.odds = rec.cdf > 0.0 ? rec.survival / rec.cdf : kInf;
  return rec;
}

// ---------------------------------------------------------------------------
// catalog families

namespace {

// Fbar(x) = exp(-(cx)^k) on [0,inf). Also registered as "exp-root"
// (F(x) = 1-exp(-(cx)^k)) and, with k = 1, as "exponential".
class WeibullSurvival final : public Baseline {
 public:
  WeibullSurvival(std::string family, double c, double k, Interval support)
      : Baseline(std::move(family), {c, k}, support), c_(c), k_(k) {
    if (!(c > 0.0) || !(k > 0.0)) throw ArgumentError(this->family() + " needs c > 0, k > 0");
  }

  double cdf(double x) const override {
    require_in_support(x);
    return -std::expm1(-std::pow(c_ * x, k_));
  }
  double survival(double x) const override {
    require_in_support(x);
    return std::exp(-std::pow(c_ * x, k_));
  }
  double density(double x) const override {
    require_in_support(x);
    const double cx = c_ * x;
    return std::exp(-std::pow(cx, k_)) * k_ * c_ * std::pow(cx, k_ - 1.0);
  }
  double hazard(double x) const override {
    require_in_support(x);
    return k_ * c_ * std::pow(c_ * x, k_ - 1.0);
  }

 protected:
  double survival_inverse(double p) const override {
    return std::pow(-std::log(p), 1.0 / k_) / c_;
  }
  double cdf_inverse(double u) const override {
    return std::pow(-std::log1p(-u), 1.0 / k_) / c_;
  }

 private:
  double c_;
  double k_;
};

// Fbar(x) = (1 + x/sigma)^-theta on [0,inf)
class ParetoLomax final : public Baseline {
 public:
  ParetoLomax(double sigma, double theta, Interval support)
      : Baseline("pareto-lomax", {sigma, theta}, support), s_(sigma), th_(theta) {
    if (!(sigma > 0.0) || !(theta > 0.0)) throw ArgumentError("pareto-lomax needs sigma > 0, theta > 0");
  }

  double cdf(double x) const override {
    require_in_support(x);
    return -std::expm1(-th_ * std::log1p(x / s_));
  }
  double survival(double x) const override {
    require_in_support(x);
    return std::exp(-th_ * std::log1p(x / s_));
  }
  double density(double x) const override {
    require_in_support(x);
    return (th_ / s_) * std::exp(-(th_ + 1.0) * std::log1p(x / s_));
  }
  double hazard(double x) const override {
    require_in_support(x);
    return (th_ / s_) / (1.0 + x / s_);
  }

 protected:
  double survival_inverse(double p) const override {
    return s_ * std::expm1(-std::log(p) / th_);
  }
  double cdf_inverse(double u) const override {
    return s_ * std::expm1(-std::log1p(-u) / th_);
  }

 private:
  double s_;
  double th_;
};

// Fbar(x) = x^-p on [1,inf)
class PowerPareto final : public Baseline {
 public:
  PowerPareto(double p, Interval support) : Baseline("power-pareto", {p}, support), p_(p) {
    if (!(p > 0.0)) throw ArgumentError("power-pareto needs p > 0");
  }

  double cdf(double x) const override {
    require_in_support(x);
    return -std::expm1(-p_ * std::log(x));
  }
  double survival(double x) const override {
    require_in_support(x);
    return std::pow(x, -p_);
  }
  double density(double x) const override {
    require_in_support(x);
    return p_ * std::pow(x, -p_ - 1.0);
  }
  double hazard(double x) const override {
    require_in_support(x);
    return p_ / x;
  }

 protected:
  double survival_inverse(double p) const override { return std::pow(p, -1.0 / p_); }
  double cdf_inverse(double u) const override { return std::exp(-std::log1p(-u) / p_); }

 private:
  double p_;
};

// F(x) = exp(-(-cx)^k) on (-inf, 0]
class NegativeWeibull final : public Baseline {
 public:
  NegativeWeibull(double c, double k, Interval support)
      : Baseline("negative-weibull", {c, k}, support), c_(c), k_(k) {
    if (!(c > 0.0) || !(k > 0.0)) throw ArgumentError("negative-weibull needs c > 0, k > 0");
  }

  double cdf(double x) const override {
    require_in_support(x);
    return std::exp(-std::pow(-c_ * x, k_));
  }
  double survival(double x) const override {
    require_in_support(x);
    return -std::expm1(-std::pow(-c_ * x, k_));
  }
  double density(double x) const override {
    require_in_support(x);
    const double y = -c_ * x;
    return std::exp(-std::pow(y, k_)) * k_ * c_ * std::pow(y, k_ - 1.0);
  }
  double reversed_hazard(double x) const override {
    require_in_support(x);
    return k_ * c_ * std::pow(-c_ * x, k_ - 1.0);
  }

 protected:
  double cdf_inverse(double u) const override {
    return -std::pow(-std::log(u), 1.0 / k_) / c_;
  }
  double survival_inverse(double p) const override {
    return -std::pow(-std::log1p(-p), 1.0 / k_) / c_;
  }

 private:
  double c_;
  double k_;
};

// F(x) = (e^x - 1)/(e - 1) on [0,1]
class TruncatedExpGrowth final : public Baseline {
 public:
  explicit TruncatedExpGrowth(Interval support)
      : Baseline("truncated-exp-growth", {}, support) {}

  double cdf(double x) const override {
    require_in_support(x);
    return std::expm1(x) / (std::exp(1.0) - 1.0);
  }
  double survival(double x) const override {
    require_in_support(x);
    return (std::exp(1.0) - std::exp(x)) / (std::exp(1.0) - 1.0);
  }
  double density(double x) const override {
    require_in_support(x);
    return std::exp(x) / (std::exp(1.0) - 1.0);
  }
  double reversed_hazard(double x) const override {
    require_in_support(x);
    return std::exp(x) / std::expm1(x);
  }

 protected:
  double cdf_inverse(double u) const override { return std::log1p(u * (std::exp(1.0) - 1.0)); }
  double survival_inverse(double p) const override {
    return std::log(std::exp(1.0) - p * (std::exp(1.0) - 1.0));
  }
};

Interval clip(Interval natural, const std::optional<Interval>& override_support,
              const std::string& family) {
  if (!override_support) return natural;
  const Interval o = *override_support;
  if (!(o.lo < o.hi) || o.lo < natural.lo || o.hi > natural.hi) {
    throw ArgumentError("support override outside natural support of " + family);
  }
  return o;
}

}  // namespace

BaselinePtr make_baseline(const std::string& family, std::span<const double> params,
                          std::optional<Interval> support_override) {
  const auto need = [&](std::size_t k) {
    if (params.size() != k) {
      throw ArgumentError("baseline '" + family + "' expects " + std::to_string(k) +
                          " parameter(s), got " + std::to_string(params.size()));
    }
  };
  if (family == "weibull-survival" || family == "exp-root") {
    need(2);
    return std::make_shared<WeibullSurvival>(family, params[0], params[1],
                                             clip({0.0, kInf}, support_override, family));
  }
  if (family == "exponential") {
    need(1);
    return std::make_shared<WeibullSurvival>(family, params[0], 1.0,
                                             clip({0.0, kInf}, support_override, family));
  }
  if (family == "pareto-lomax") {
    need(2);
    return std::make_shared<ParetoLomax>(params[0], params[1],
                                         clip({0.0, kInf}, support_override, family));
  }
  if (family == "power-pareto") {
    need(1);
    return std::make_shared<PowerPareto>(params[0], clip({1.0, kInf}, support_override, family));
  }
  if (family == "negative-weibull") {
    need(2);
    return std::make_shared<NegativeWeibull>(params[0], params[1],
                                             clip({-kInf, 0.0}, support_override, family));
  }
  if (family == "truncated-exp-growth") {
    need(0);
    return std::make_shared<TruncatedExpGrowth>(clip({0.0, 1.0}, support_override, family));
  }
  throw ArgumentError("unknown baseline family '" + family + "'");
}

Grid baseline_check_grid(const Baseline& dist, std::size_t points) {
  const Interval s = dist.support();
  const bool lo_finite = std::isfinite(s.lo);
  const bool hi_finite = std::isfinite(s.hi);
  const double trim = 1e-3;
  if (lo_finite && hi_finite) {
    const double pad = trim * (s.hi - s.lo);
    return Grid::linear(s.lo + pad, s.hi - pad, points);
  }
  Grid g = Grid::mapped(lo_finite ? (s.lo >= 1.0 ? GridMap::inverse_unit : GridMap::half_line)
                                  : GridMap::negative_half_line,
                        points, trim);
  // shift the canonical map onto a translated support
  if (lo_finite && s.lo != 0.0 && s.lo < 1.0) {
    for (auto& x : g.x) x += s.lo;
  } else if (!lo_finite && s.hi != 0.0) {
    for (auto& x : g.x) x += s.hi;
  }
  return g;
}

AgingReport classify_aging(const Baseline& dist, const Grid& grid) {
  if (grid.size() < 3) throw ArgumentError("aging check needs >= 3 grid points");
  const Interval s = dist.support();
  for (double x : grid.x) {
    if (!s.contains_interior(x)) {
      throw DomainError("aging grid point outside open support");
    }
  }
  const std::size_t m = grid.size();
  std::vector<double> r(m), rt(m), xr(m), xrt(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double x = grid.x[i];
    r[i] = dist.hazard(x);
    rt[i] = dist.reversed_hazard(x);
    xr[i] = x * r[i];
    xrt[i] = x * rt[i];
  }
  AgingReport rep;
  rep.hazard = classify_monotonicity(grid.x, r);
  rep.reversed_hazard = classify_monotonicity(grid.x, rt);
  rep.x_hazard = classify_monotonicity(grid.x, xr);
  rep.x_reversed_hazard = classify_monotonicity(grid.x, xrt);
  return rep;
}

}  // namespace poext
