#pragma once

#include <optional>
#include <vector>

#include "poext/baselines.hpp"
#include "poext/generators.hpp"
#include "poext/po_model.hpp"

namespace poext {

// A dependent sample X = (X_1..X_n): common baseline, proportional-odds
// ratio vector and the Archimedean survival copula generator.
struct POSampleSpec {
  BaselinePtr baseline;
  std::vector<double> alphas;
  GeneratorPtr generator;

  POSampleSpec(BaselinePtr base, std::vector<double> as, GeneratorPtr gen);

  int n() const { return static_cast<int>(alphas.size()); }
  bool homogeneous() const;
  POMarginal marginal(int i) const { return POMarginal(baseline, alphas.at(i)); }
};

enum class ExtremeKind { min, max };

const char* to_string(ExtremeKind k);

// Distribution of X_{1:n} (min) or X_{n:n} (max):
//   min survival: phi(sum_i inverse(marginal survival_i))
//   max cdf:      phi(sum_i inverse(marginal cdf_i))
// Marginal probabilities are clamped to [1e-15, 1] before inversion and the
// pseudo-inverse convention covers sums beyond t_max, so non-strict
// generators yield flat cdf regions with zero density rather than domain
// errors.
class ExtremeDistribution : public Distribution {
 public:
  ExtremeDistribution(ExtremeKind kind, POSampleSpec sample);

  ExtremeKind kind() const { return kind_; }
  const POSampleSpec& sample() const { return sample_; }

  Interval support() const override { return sample_.baseline->support(); }
  double cdf(double x) const override;
  double survival(double x) const override;
  double density(double x) const override;

  // Homogeneous samples invert through the closed form
  //   min: Fbar^{-1}( w/(alpha + alpha_bar*w) ),  w = phi(inverse(1-u)/n)
  //   max: F^{-1}( alpha*v/(1 - alpha_bar*v) ),   v = phi(inverse(u)/n)
  // heterogeneous samples by bisection on the cdf.
  double quantile(double u, ProbScale scale = ProbScale::cdf) const override;

  // Marginal probabilities entering the generator (survival scale for min,
  // cdf scale for max), clamped.
  std::vector<double> coupled_probabilities(double x) const;

 private:
  ExtremeKind kind_;
  POSampleSpec sample_;
  double quantile_numeric(double u) const;
};

// Which inner probability-scale function a quantile composition used.
enum class InnerFunction { gamma, beta, eta, zeta };

const char* to_string(InnerFunction f);

struct TransformProfile {
  double x = 0.0;
  InnerFunction active = InnerFunction::gamma;
  std::optional<double> gamma;  // min, common generator
  std::optional<double> beta;   // max, common generator
  std::optional<double> eta;    // min, cross-generator
  std::optional<double> zeta;   // max, cross-generator

  double inner() const;
};

struct Composition {
  double y = 0.0;
  TransformProfile profile;
  // phi((1/n) * sum inverse(...)) level behind the inner function; the
  // composed density reuses it without re-deriving it from the profile.
  double w_level = 0.0;
};

// y = G_hom^{-1}(F_het(x)) through the closed-form inner function:
//   gamma/beta when the two distributions share a generator,
//   eta/zeta when the generators differ (heterogeneous-vs-homogeneous
//   cross-generator compositions chain the same closed form).
// Requires a shared baseline and kind, and a homogeneous `hom`.
Composition compose_quantile_cdf(const ExtremeDistribution& het, const ExtremeDistribution& hom,
                                 double x);

// The paper-form closed expression for g_hom(G_hom^{-1}(F_het(x))).
double composed_density(const ExtremeDistribution& het, const ExtremeDistribution& hom, double x);

}  // namespace poext
