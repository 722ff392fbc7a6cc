#include "poext/oracle_mc.hpp"

#include <algorithm>
#include <cmath>

#include "poext/errors.hpp"

namespace poext {

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

double uniform_draw(std::uint64_t seed, std::uint64_t counter) {
  const std::uint64_t z = splitmix64(seed + (counter + 1) * 0x9e3779b97f4a7c15ULL);
  // top 53 bits, centered: strictly inside (0,1)
  return (static_cast<double>(z >> 11) + 0.5) * 0x1p-53;
}

SampleBatch sample_independent(const POSampleSpec& spec, std::size_t N, std::uint64_t seed,
                               ExecPolicy policy) {
  if (spec.generator->family() != "independence") {
    throw UnsupportedError(
        "sample_independent needs the independence generator; dependent n=2 sampling is "
        "available through sample_bivariate_archimedean");
  }
  if (N < 1) throw ArgumentError("need N >= 1 rows");

  const int n = spec.n();
  std::vector<POMarginal> marginals;
  marginals.reserve(n);
  for (int i = 0; i < n; ++i) marginals.push_back(spec.marginal(i));

  SampleBatch batch;
  batch.rows = N;
  batch.n = n;
  batch.seed = seed;
  batch.draws.resize(N * static_cast<std::size_t>(n));
  for_each_index(N, policy, [&](std::size_t row) {
    for (int i = 0; i < n; ++i) {
      const double u =
          uniform_draw(seed, row * static_cast<std::size_t>(n) + static_cast<std::size_t>(i));
      batch.draws[row * static_cast<std::size_t>(n) + static_cast<std::size_t>(i)] =
          marginals[static_cast<std::size_t>(i)].quantile(u, ProbScale::survival);
    }
  });
  return batch;
}

SampleBatch sample_bivariate_archimedean(const POSampleSpec& spec, std::size_t N,
                                         std::uint64_t seed, CopulaCoupling coupling,
                                         ExecPolicy policy) {
  if (spec.n() != 2) throw ArgumentError("conditional sampling supports n = 2 only");
  if (N < 1) throw ArgumentError("need N >= 1 rows");

  const Generator& gen = *spec.generator;
  const POMarginal m0 = spec.marginal(0);
  const POMarginal m1 = spec.marginal(1);
  const ProbScale scale =
      coupling == CopulaCoupling::survival ? ProbScale::survival : ProbScale::cdf;

  SampleBatch batch;
  batch.rows = N;
  batch.n = 2;
  batch.seed = seed;
  batch.draws.resize(2 * N);
  for_each_index(N, policy, [&](std::size_t row) {
    const double v1 = uniform_draw(seed, 2 * row);
    const double p = uniform_draw(seed, 2 * row + 1);
    // conditional cdf of V2 given V1 = v1 is increasing in v2
    const auto cond = [&](double v2) {
      const double us[2] = {v1, v2};
      return gen.scaled_sum_derivative_ratio(us, 1.0, v1);
    };
    double lo = 1e-15;
    double hi = 1.0;
    if (cond(lo) >= p) {
      hi = lo;
    } else {
      for (int it = 0; it < 100; ++it) {
        const double mid = 0.5 * (lo + hi);
        (cond(mid) < p ? lo : hi) = mid;
      }
    }
    const double v2 = 0.5 * (lo + hi);
    batch.draws[2 * row] = m0.quantile(v1, scale);
    batch.draws[2 * row + 1] = m1.quantile(std::min(std::max(v2, 1e-15), 1.0 - 1e-16), scale);
  });
  return batch;
}

std::vector<double> extreme_of_rows(const SampleBatch& batch, ExtremeKind kind) {
  std::vector<double> out(batch.rows);
  for (std::size_t r = 0; r < batch.rows; ++r) {
    const auto row = batch.row(r);
    out[r] = kind == ExtremeKind::min ? *std::min_element(row.begin(), row.end())
                                      : *std::max_element(row.begin(), row.end());
  }
  return out;
}

double ks_distance(std::vector<double> values, const Distribution& analytic) {
  if (values.empty()) throw ArgumentError("KS distance needs a nonempty sample");
  std::sort(values.begin(), values.end());
  const double N = static_cast<double>(values.size());
  double d = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double F = analytic.cdf(values[i]);
    d = std::max(d, std::max(F - static_cast<double>(i) / N,
                             static_cast<double>(i + 1) / N - F));
  }
  return d;
}

double ks_critical_value(std::size_t N, double alpha) {
  if (N == 0) throw ArgumentError("KS critical value needs N >= 1");
  if (!(alpha > 0.0 && alpha < 1.0)) throw ArgumentError("KS level must lie in (0,1)");
  return std::sqrt(-0.5 * std::log(alpha / 2.0) / static_cast<double>(N));
}

}  // namespace poext
