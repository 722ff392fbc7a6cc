#include "poext/extremes.hpp"

#include <algorithm>
#include <cmath>

#include "poext/errors.hpp"

namespace poext {

namespace {

// Marginal probabilities are clamped away from 0 before generator inversion;
// tail grids hit representation limits long before the math does.
constexpr double kProbFloor = 1e-15;

double clamp_prob(double p) { return std::min(std::max(p, kProbFloor), 1.0); }

bool same_spec(const Baseline& a, const Baseline& b) {
  return a.family() == b.family() && a.params() == b.params() &&
         a.support().lo == b.support().lo && a.support().hi == b.support().hi;
}

bool same_spec(const Generator& a, const Generator& b) {
  return a.family() == b.family() && a.params() == b.params();
}

}  // namespace

POSampleSpec::POSampleSpec(BaselinePtr base, std::vector<double> as, GeneratorPtr gen)
    : baseline(std::move(base)), alphas(std::move(as)), generator(std::move(gen)) {
  if (!baseline) throw ArgumentError("PO sample needs a baseline");
  if (!generator) throw ArgumentError("PO sample needs a generator");
  if (alphas.size() < 2) throw ArgumentError("PO sample needs n >= 2");
  for (double a : alphas) {
    if (!(a > 0.0) || !std::isfinite(a)) throw ArgumentError("PO ratios must be positive reals");
  }
}

bool POSampleSpec::homogeneous() const {
  return std::all_of(alphas.begin(), alphas.end(),
                     [&](double a) { return a == alphas.front(); });
}

const char* to_string(ExtremeKind k) { return k == ExtremeKind::min ? "min" : "max"; }

const char* to_string(InnerFunction f) {
  switch (f) {
    case InnerFunction::gamma: return "gamma";
    case InnerFunction::beta: return "beta";
    case InnerFunction::eta: return "eta";
    case InnerFunction::zeta: return "zeta";
  }
  return "?";
}

double TransformProfile::inner() const {
  switch (active) {
    case InnerFunction::gamma: return *gamma;
    case InnerFunction::beta: return *beta;
    case InnerFunction::eta: return *eta;
    case InnerFunction::zeta: return *zeta;
  }
  return 0.0;
}

ExtremeDistribution::ExtremeDistribution(ExtremeKind kind, POSampleSpec sample)
    : kind_(kind), sample_(std::move(sample)) {}

std::vector<double> ExtremeDistribution::coupled_probabilities(double x) const {
  const double sf = sample_.baseline->survival(x);
  const double F = sample_.baseline->cdf(x);
  std::vector<double> ps(sample_.alphas.size());
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const double ab = 1.0 - sample_.alphas[i];
    const double denom = 1.0 - ab * sf;
    ps[i] = clamp_prob(kind_ == ExtremeKind::min ? sample_.alphas[i] * sf / denom : F / denom);
  }
  return ps;
}

double ExtremeDistribution::cdf(double x) const {
  const auto ps = coupled_probabilities(x);
  const double v = sample_.generator->scaled_sum_value(ps, 1.0);
  return kind_ == ExtremeKind::min ? 1.0 - v : v;
}

double ExtremeDistribution::survival(double x) const {
  const auto ps = coupled_probabilities(x);
  const double v = sample_.generator->scaled_sum_value(ps, 1.0);
  return kind_ == ExtremeKind::min ? v : 1.0 - v;
}

double ExtremeDistribution::density(double x) const {
  const Interval s = support();
  if (!s.contains_interior(x)) throw DomainError("density needs x in the open support");
  const auto ps = coupled_probabilities(x);
  const Generator& gen = *sample_.generator;
  const double sf = sample_.baseline->survival(x);
  const double F = sample_.baseline->cdf(x);
  const double rate = kind_ == ExtremeKind::min ? sample_.baseline->hazard(x)
                                                : sample_.baseline->reversed_hazard(x);
  double total = 0.0;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const double a = sample_.alphas[i];
    const double ab = 1.0 - a;
    const double ratio = gen.scaled_sum_derivative_ratio(ps, 1.0, ps[i]);
    if (ratio == 0.0) continue;
    const double factor = kind_ == ExtremeKind::min ? 1.0 / (1.0 - ab * sf)
                                                    : a / (a + ab * F);
    total += ps[i] * ratio * factor;
  }
  return total == 0.0 ? 0.0 : total * rate;
}

double ExtremeDistribution::quantile(double u, ProbScale scale) const {
  if (!(u > 0.0 && u < 1.0)) throw DomainError("quantile argument must lie in (0,1)");
  const double ucdf = scale == ProbScale::cdf ? u : 1.0 - u;
  if (!sample_.homogeneous()) return quantile_numeric(ucdf);

  const Generator& gen = *sample_.generator;
  const double alpha = sample_.alphas.front();
  const double ab = 1.0 - alpha;
  const double inv_n = 1.0 / static_cast<double>(sample_.n());
  if (kind_ == ExtremeKind::min) {
    const double s = 1.0 - ucdf;  // survival level
    const double w = gen.scaled_sum_value(std::span<const double>(&s, 1), inv_n);
    return sample_.baseline->quantile_ext(w / (alpha + ab * w), ProbScale::survival);
  }
  const double v = gen.scaled_sum_value(std::span<const double>(&ucdf, 1), inv_n);
  return sample_.baseline->quantile_ext(alpha * v / (1.0 - ab * v), ProbScale::cdf);
}

double ExtremeDistribution::quantile_numeric(double u) const {
  // Bisection in a log-magnitude coordinate anchored at a finite support
  // endpoint: heavy tails put quantiles at distances like u^{1/k} from the
  // endpoint, far below what linear bisection can resolve in doubles.
  const Interval s = support();
  const bool lo_finite = std::isfinite(s.lo);
  const bool hi_finite = std::isfinite(s.hi);

  const bool anchor_lo = lo_finite && (!hi_finite || u <= 0.5);
  double zlo = -700.0;
  double zhi = 700.0;
  if (lo_finite && hi_finite) zhi = std::log(s.hi - s.lo);

  const auto x_of = [&](double z) -> double {
    double x;
    if (anchor_lo) {
      x = s.lo + std::exp(z);
    } else if (hi_finite) {
      x = s.hi - std::exp(z);
    } else if (lo_finite) {
      x = s.lo + std::exp(z);
    } else {
      x = std::sinh(z);
    }
    return std::min(std::max(x, s.lo), s.hi);
  };
  // cdf(x(z)) is monotone in z; direction flips for the hi-anchored map
  const bool increasing = anchor_lo || !hi_finite;
  for (int i = 0; i < 80; ++i) {
    const double mid = 0.5 * (zlo + zhi);
    const bool below = cdf(x_of(mid)) < u;
    ((below == increasing) ? zlo : zhi) = mid;
  }
  return x_of(0.5 * (zlo + zhi));
}

Composition compose_quantile_cdf(const ExtremeDistribution& het, const ExtremeDistribution& hom,
                                 double x) {
  if (het.kind() != hom.kind()) throw ArgumentError("composition needs matching extreme kinds");
  if (!same_spec(*het.sample().baseline, *hom.sample().baseline)) {
    throw ArgumentError("composition needs a shared baseline");
  }
  if (!hom.sample().homogeneous()) throw ArgumentError("composition target must be homogeneous");
  if (het.sample().n() != hom.sample().n()) throw ArgumentError("composition needs equal n");

  const int n = hom.sample().n();
  const double inv_n = 1.0 / static_cast<double>(n);
  const Generator& gen_het = *het.sample().generator;
  const Generator& gen_hom = *hom.sample().generator;
  const bool common_gen = same_spec(gen_het, gen_hom);
  const double alpha = hom.sample().alphas.front();
  const double ab = 1.0 - alpha;
  const Baseline& base = *hom.sample().baseline;

  const auto ps = het.coupled_probabilities(x);
  double w;
  if (common_gen) {
    w = gen_het.scaled_sum_value(ps, inv_n);
  } else {
    // chain through the heterogeneous cdf value: phi2(inverse2(q)/n)
    const double q = gen_het.scaled_sum_value(ps, 1.0);
    const double qc = clamp_prob(q);
    w = gen_hom.scaled_sum_value(std::span<const double>(&qc, 1), inv_n);
  }

  Composition out;
  out.profile.x = x;
  out.w_level = w;
  if (het.kind() == ExtremeKind::min) {
    const double inner = w / (alpha + ab * w);
    out.y = base.quantile_ext(inner, ProbScale::survival);
    out.profile.active = common_gen ? InnerFunction::gamma : InnerFunction::eta;
    (common_gen ? out.profile.gamma : out.profile.eta) = inner;
  } else {
    const double inner = alpha * w / (1.0 - ab * w);
    out.y = base.quantile_ext(inner, ProbScale::cdf);
    out.profile.active = common_gen ? InnerFunction::beta : InnerFunction::zeta;
    (common_gen ? out.profile.beta : out.profile.zeta) = inner;
  }
  return out;
}

double composed_density(const ExtremeDistribution& het, const ExtremeDistribution& hom, double x) {
  const Composition comp = compose_quantile_cdf(het, hom, x);
  const double n = static_cast<double>(hom.sample().n());
  const double alpha = hom.sample().alphas.front();
  const double ab = 1.0 - alpha;
  const Generator& gen_hom = *hom.sample().generator;
  const Baseline& base = *hom.sample().baseline;

  const double w = std::min(std::max(comp.w_level, 0.0), 1.0);
  if (w <= 0.0) return 0.0;
  const double ratio = gen_hom.scaled_sum_derivative_ratio(std::span<const double>(&w, 1), n, w);
  if (ratio == 0.0) return 0.0;
  if (het.kind() == ExtremeKind::min) {
    // n * phi'(S) * (alpha + ab*w) * [w / phi'(S/n)] * r(y) / alpha
    return n * w * (alpha + ab * w) / alpha * ratio * base.hazard(comp.y);
  }
  // n * phi'(S) * [v / phi'(S/n)] * (1 - ab*v) * rtilde(y)
  return n * w * (1.0 - ab * w) * ratio * base.reversed_hazard(comp.y);
}

}  // namespace poext
