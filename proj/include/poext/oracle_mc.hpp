#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "poext/extremes.hpp"
#include "poext/parallel.hpp"

namespace poext {

// Counter-based uniform stream: draw c of stream `seed` is
// splitmix64(seed + (c+1)*0x9e3779b97f4a7c15) scaled into (0,1). Draws are
// addressed, not sequential, so rows can be sampled in any order or in
// parallel with identical results.
double uniform_draw(std::uint64_t seed, std::uint64_t counter);

// N rows of the dependent sample (row-major N x n).
struct SampleBatch {
  std::size_t rows = 0;
  int n = 0;
  std::uint64_t seed = 0;
  std::vector<double> draws;

  std::span<const double> row(std::size_t i) const {
    return {draws.data() + i * static_cast<std::size_t>(n), static_cast<std::size_t>(n)};
  }
};

// Independent components: X_i = marginal survival-quantile of one uniform
// draw each. Requires the independence generator.
SampleBatch sample_independent(const POSampleSpec& spec, std::size_t N, std::uint64_t seed,
                               ExecPolicy policy = default_policy());

// Which marginal scale the Archimedean copula couples. The minimum's closed
// form assumes the survival copula, the maximum's assumes the distributional
// copula; they coincide only for independence.
enum class CopulaCoupling { survival, distributional };

// n = 2 with any catalog generator: conditional-distribution method. V1 is
// uniform; V2 solves
//   phi'(inverse(V1) + inverse(V2)) / phi'(inverse(V1)) = p
// by bisection (the left side is the conditional cdf of V2 given V1), then
// X_i is the marginal quantile of V_i on the coupled scale.
SampleBatch sample_bivariate_archimedean(const POSampleSpec& spec, std::size_t N,
                                         std::uint64_t seed,
                                         CopulaCoupling coupling = CopulaCoupling::survival,
                                         ExecPolicy policy = default_policy());

// Row-wise extreme of a batch.
std::vector<double> extreme_of_rows(const SampleBatch& batch, ExtremeKind kind);

// sup |empirical cdf - analytic cdf| over the sample.
double ks_distance(std::vector<double> values, const Distribution& analytic);

// One-sample KS critical value sqrt(-ln(alpha/2)/(2N)); 1.63/sqrt(N) at the
// 0.01 level.
double ks_critical_value(std::size_t N, double alpha = 0.01);

}  // namespace poext
