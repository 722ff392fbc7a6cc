#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace poext {

// Grid sweeps and Monte Carlo row loops are embarrassingly parallel: every
// index writes only its own slot, so results are identical for both
// policies and independent of the thread count.
enum class ExecPolicy { serial, openmp };

inline ExecPolicy default_policy() {
#ifdef _OPENMP
  return ExecPolicy::openmp;
#else
  return ExecPolicy::serial;
#endif
}

template <typename F>
void for_each_index(std::size_t n, ExecPolicy policy, F&& body) {
#ifdef _OPENMP
  if (policy == ExecPolicy::openmp) {
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
      body(static_cast<std::size_t>(i));
    }
    return;
  }
#else
  (void)policy;
#endif
  for (std::size_t i = 0; i < n; ++i) {
    body(i);
  }
}

}  // namespace poext
