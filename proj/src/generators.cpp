#include "poext/generators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "poext/errors.hpp"

namespace poext {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_order(int order) {
  if (order != 1 && order != 2) throw ArgumentError("derivative order must be 1 or 2");
}

}  // namespace

void Generator::require_valid_t(double t) const {
  if (std::isnan(t) || t < 0.0) throw DomainError("generator argument t must be >= 0");
}

void Generator::require_valid_u(double u) const {
  if (!(u > 0.0) || u > 1.0) throw DomainError("generator inverse argument must lie in (0,1]");
}

double Generator::scaled_sum_value(std::span<const double> us, double scale) const {
  double sum = 0.0;
  for (double u : us) sum += inverse(u);
  return value(scale * sum);
}

double Generator::scaled_sum_derivative_ratio(std::span<const double> us, double scale,
                                              double u_point) const {
  double sum = 0.0;
  for (double u : us) sum += inverse(u);
  const double den = derivative(inverse(u_point), 1);
  if (den == 0.0) throw SingularityError("phi' vanishes", inverse(u_point));
  return derivative(scale * sum, 1) / den;
}

double Generator::decay_probe() const {
  if (std::isfinite(t_max())) return t_max();
  return 1e12;
}

// ---------------------------------------------------------------------------
// independence: phi(t) = exp(-t)

class IndependenceGenerator final : public Generator {
 public:
  IndependenceGenerator() : Generator("independence", {}, kInf) {}

  double value(double t) const override {
    require_valid_t(t);
    return std::exp(-t);
  }

  double inverse(double u) const override {
    require_valid_u(u);
    return -std::log(u);
  }

  double derivative(double t, int order) const override {
    require_valid_t(t);
    require_order(order);
    return order == 1 ? -std::exp(-t) : std::exp(-t);
  }

  double scaled_sum_value(std::span<const double> us, double scale) const override {
    double logsum = 0.0;
    for (double u : us) logsum += std::log(u);
    return std::exp(scale * logsum);
  }

  double scaled_sum_derivative_ratio(std::span<const double> us, double scale,
                                     double u_point) const override {
    // exp(-(scale*S - inverse(u_point))) with S = -sum log u_i
    double logsum = 0.0;
    for (double u : us) logsum += std::log(u);
    return std::exp(scale * logsum - std::log(u_point));
  }

  double decay_probe() const override { return 30.0; }
};

// ---------------------------------------------------------------------------
// Nelsen 4.2.19: phi(t) = a / log(t + e^a), a > 0, strict.
//
// inverse(u) = e^{a/u} - e^a overflows for u < a/709, so the composite
// operations work with the shifted logs L_i = log(inverse(u_i) + e^a) = a/u_i,
// which stay representable for any u in (0,1]. With
//   M = log(scale * sum_i e^{L_i} + (1 - scale*n) * e^a)
// we get phi(scale*S) = a/M and
//   phi'(scale*S)/phi'(inverse(p)) = e^{L_p - M} * (L_p/M)^2,  L_p = a/p,
// where L_p <= M in every composition the densities use.

class Nelsen4219Generator final : public Generator {
 public:
  explicit Nelsen4219Generator(double a) : Generator("nelsen-4-2-19", {a}, kInf), a_(a) {
    if (!(a > 0.0) || !std::isfinite(a)) throw ArgumentError("nelsen-4-2-19 needs a > 0");
    exp_a_ = std::exp(a_);
  }

  double value(double t) const override {
    require_valid_t(t);
    if (std::isinf(t)) return 0.0;
    return a_ / std::log(t + exp_a_);
  }

  double inverse(double u) const override {
    require_valid_u(u);
    // e^a * expm1(a/u - a) keeps precision near u = 1
    const double e = a_ / u - a_;
    if (e >= 710.0) return kInf;  // beyond double range; composites use logs
    return exp_a_ * std::expm1(e);
  }

  double derivative(double t, int order) const override {
    require_valid_t(t);
    require_order(order);
    if (std::isinf(t)) return 0.0;
    const double s = t + exp_a_;
    const double L = std::log(s);
    if (order == 1) return -a_ / (s * L * L);
    return a_ * (L + 2.0) / (s * s * L * L * L);
  }

  double scaled_sum_value(std::span<const double> us, double scale) const override {
    return a_ / shifted_log(us, scale);
  }

  double scaled_sum_derivative_ratio(std::span<const double> us, double scale,
                                     double u_point) const override {
    const double M = shifted_log(us, scale);
    const double Lp = a_ / u_point;
    const double e = Lp - M;
    if (e >= 710.0) throw SingularityError("derivative ratio overflow", u_point);
    return std::exp(e) * (Lp / M) * (Lp / M);
  }

  double decay_probe() const override { return 1e300; }
  // a/log(t+e^a) decays only logarithmically; a/600 is the tightest bound a
  // double-range probe can certify.
  double decay_bound() const override { return a_ / 600.0; }

 private:
  // log(scale * sum_i e^{a/u_i} + (1 - scale*n) * e^a)
  double shifted_log(std::span<const double> us, double scale) const {
    double m = -kInf;
    for (double u : us) m = std::max(m, a_ / u);
    double s = 0.0;
    for (double u : us) s += std::exp(a_ / u - m);
    const double c = (1.0 - scale * static_cast<double>(us.size())) * exp_a_;
    double inner = scale * s + c * std::exp(-m);
    // inner is mathematically >= e^{a-m}; guard against cancellation
    inner = std::max(inner, std::numeric_limits<double>::min());
    return m + std::log(inner);
  }

  double a_;
  double exp_a_;
};

// ---------------------------------------------------------------------------
// Nelsen 4.2.8: phi(t) = (1-t)/(1+(lambda-1)t), lambda >= 1, t_max = 1.
// Non-strict: the pseudo-inverse is 0 (with zero derivative) beyond t_max.

class Nelsen428Generator final : public Generator {
 public:
  explicit Nelsen428Generator(double lambda)
      : Generator("nelsen-4-2-8", {lambda}, 1.0), lam_(lambda) {
    if (!(lambda >= 1.0) || !std::isfinite(lambda)) throw ArgumentError("nelsen-4-2-8 needs lambda >= 1");
  }

  double value(double t) const override {
    require_valid_t(t);
    if (t >= 1.0) return 0.0;
    return (1.0 - t) / (1.0 + (lam_ - 1.0) * t);
  }

  double inverse(double u) const override {
    require_valid_u(u);
    return (1.0 - u) / (1.0 + (lam_ - 1.0) * u);
  }

  double derivative(double t, int order) const override {
    require_valid_t(t);
    require_order(order);
    if (t > 1.0) return 0.0;
    const double d = 1.0 + (lam_ - 1.0) * t;
    if (order == 1) return -lam_ / (d * d);
    return 2.0 * lam_ * (lam_ - 1.0) / (d * d * d);
  }

 private:
  double lam_;
};

// ---------------------------------------------------------------------------
// Extension slot: user-supplied phi with numeric inverse and derivatives.

class CustomGenerator final : public Generator {
 public:
  CustomGenerator(std::string name, std::function<double(double)> phi, double t_max)
      : Generator(std::move(name), {}, t_max), phi_(std::move(phi)) {
    if (!phi_) throw ArgumentError("custom generator needs a callable");
  }

  double value(double t) const override {
    require_valid_t(t);
    if (t >= t_max()) return 0.0;
    return phi_(t);
  }

  double inverse(double u) const override {
    require_valid_u(u);
    if (u == 1.0) return 0.0;
    double lo = 0.0;
    double hi = std::isfinite(t_max()) ? t_max() : 1.0;
    if (!std::isfinite(t_max())) {
      while (value(hi) > u && hi < 1e300) hi *= 2.0;
    }
    for (int i = 0; i < 200 && hi - lo > 1e-15 * (1.0 + hi); ++i) {
      const double mid = 0.5 * (lo + hi);
      (value(mid) > u ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
  }

  double derivative(double t, int order) const override {
    require_valid_t(t);
    require_order(order);
    if (t > t_max()) return 0.0;
    const double h = 1e-6 * (1.0 + std::abs(t));
    const double tl = std::max(t - h, 0.0);
    const double th = t + h;
    if (order == 1) return (value(th) - value(tl)) / (th - tl);
    return (value(th) - 2.0 * value(t) + value(tl)) / (0.25 * (th - tl) * (th - tl));
  }

 private:
  std::function<double(double)> phi_;
};

// ---------------------------------------------------------------------------

GeneratorPtr make_generator(const std::string& family, std::span<const double> params) {
  const auto need = [&](std::size_t k) {
    if (params.size() != k) {
      throw ArgumentError("generator '" + family + "' expects " + std::to_string(k) +
                          " parameter(s), got " + std::to_string(params.size()));
    }
  };
  if (family == "independence") {
    need(0);
    return std::make_shared<IndependenceGenerator>();
  }
  if (family == "nelsen-4-2-19") {
    need(1);
    return std::make_shared<Nelsen4219Generator>(params[0]);
  }
  if (family == "nelsen-4-2-8") {
    need(1);
    return std::make_shared<Nelsen428Generator>(params[0]);
  }
  throw ArgumentError("unknown generator family '" + family + "'");
}

GeneratorPtr make_custom_generator(std::string name, std::function<double(double)> phi,
                                   double t_max) {
  return std::make_shared<CustomGenerator>(std::move(name), std::move(phi), t_max);
}

Grid generator_check_grid(const Generator& gen, std::size_t points) {
  if (points < 16) throw ArgumentError("generator check grid needs >= 16 points");
  if (std::isfinite(gen.t_max())) {
    const double eps = 1e-6 * gen.t_max();
    return Grid::linear(eps, gen.t_max() - eps, points);
  }
  // linear head for the near-zero structure, log tail toward the family's
  // decay probe (phi and phi' must stay representable along the way)
  const double tail_end = std::min(gen.decay_probe(), 1e6);
  Grid head = Grid::linear(1e-6, 2.0, points / 2);
  Grid tail = Grid::log_spaced(2.0 + 1e-3, std::max(tail_end, 4.0), points - points / 2);
  Grid g;
  g.t = head.t;
  g.t.insert(g.t.end(), tail.t.begin(), tail.t.end());
  g.x = g.t;
  g.descriptor = "generator-domain n=" + std::to_string(g.t.size());
  return g;
}

ConditionReport check_generator_validity(const Generator& gen, int n, const Grid& grid) {
  if (grid.size() == 0) throw ArgumentError("empty grid");
  if (n < 2) throw ArgumentError("generator validity check needs n >= 2");

  std::vector<HypothesisResult> hs;

  {
    const double v0 = gen.value(0.0);
    HypothesisResult h{"phi(0)=1", std::abs(v0 - 1.0) <= 1e-12 ? Verdict::holds : Verdict::violated,
                       "phi(0)=" + std::to_string(v0)};
    hs.push_back(std::move(h));
  }
  {
    const double probe = gen.decay_probe();
    const double bound = gen.decay_bound();
    const double tail = std::isfinite(gen.t_max()) ? gen.value(gen.t_max()) : gen.value(probe);
    const double lim_bound = std::isfinite(gen.t_max()) ? 1e-12 : bound;
    HypothesisResult h{"phi decays to 0",
                       tail <= lim_bound ? Verdict::holds : Verdict::violated,
                       "phi(probe)=" + std::to_string(tail)};
    hs.push_back(std::move(h));
  }
  {
    std::vector<double> vals(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) vals[i] = gen.value(grid.t[i]);
    bool nonneg = true;
    double worst = 0.0;
    for (double v : vals) {
      if (v < 0.0) {
        nonneg = false;
        worst = std::min(worst, v);
      }
    }
    hs.push_back({"phi within [0,1]", nonneg ? Verdict::holds : Verdict::violated,
                  nonneg ? "min>=0" : "min=" + std::to_string(worst)});

    const auto mono = classify_monotonicity(grid.t, vals, 1e-12);
    hs.push_back({"phi strictly decreasing",
                  mono.kind == Monotonicity::decreasing ? Verdict::holds : Verdict::violated,
                  std::string("grid sweep: ") + to_string(mono.kind)});
  }
  {
    const auto shape =
        check_midpoint_shape([&](double t) { return gen.value(t); }, grid.t, /*convex=*/true);
    hs.push_back({"phi convex", shape.verdict == Verdict::violated ? Verdict::violated : shape.verdict,
                  "midpoint test, max violation " + std::to_string(shape.max_violation)});
  }

  return make_condition_report(gen.family() + " validity (n=" + std::to_string(n) + ")",
                               std::move(hs));
}

ShapeReport check_log_shape(const Generator& gen, const Grid& grid, Shape target) {
  if (grid.size() < 3) throw ArgumentError("log-shape check needs >= 3 grid points");
  return check_midpoint_shape([&](double t) { return std::log(gen.value(t)); }, grid.t,
                              target == Shape::convex);
}

ShapeReport check_ratio_shape(const Generator& gen, const Grid& grid, Shape target) {
  if (grid.size() < 3) throw ArgumentError("ratio-shape check needs >= 3 grid points");
  const auto ratio = [&](double t) {
    const double d = gen.derivative(t, 1);
    if (d == 0.0) throw SingularityError("phi' vanishes on shape-check grid", t);
    return gen.value(t) / d;
  };
  return check_midpoint_shape(ratio, grid.t, target == Shape::convex);
}

ShapeReport check_cross_generator(const Generator& g1, const Generator& g2, int n,
                                  const Grid& tgrid, CrossDirection direction) {
  if (tgrid.size() < 3) throw ArgumentError("cross-generator check needs >= 3 grid points");
  if (n < 2) throw ArgumentError("cross-generator check needs n >= 2");
  for (double t : tgrid.t) {
    if (!(t > 0.0 && t < 1.0)) throw ArgumentError("cross-generator grid must lie in (0,1)");
  }
  const Generator& num = direction == CrossDirection::g2_over_g1 ? g2 : g1;
  const Generator& den = direction == CrossDirection::g2_over_g1 ? g1 : g2;
  const double inv_n = 1.0 / static_cast<double>(n);
  std::vector<double> ratio(tgrid.size());
  for (std::size_t i = 0; i < tgrid.size(); ++i) {
    const double t = tgrid.t[i];
    const double a = num.scaled_sum_value(std::span<const double>(&t, 1), inv_n);
    const double b = den.scaled_sum_value(std::span<const double>(&t, 1), inv_n);
    ratio[i] = a / b;
  }
  const auto mono = classify_monotonicity(tgrid.t, ratio, 1e-9);

  ShapeReport rep;
  rep.max_violation = mono.max_drop;
  rep.max_confirmation = mono.max_rise;
  // weak monotonicity: a constant ratio satisfies "increasing"
  if (mono.kind == Monotonicity::increasing || mono.kind == Monotonicity::constant) {
    rep.verdict = Verdict::holds;
  } else {
    rep.verdict = Verdict::violated;
    rep.witnesses = mono.down_witnesses;
  }
  return rep;
}

}  // namespace poext
