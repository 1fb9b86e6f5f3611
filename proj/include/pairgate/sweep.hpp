#pragma once

// Index-parallel evaluation for embarrassingly parallel grids (beta sweeps,
// picture sampling, validation batches). Each index writes only its own slot,
// so the parallel and serial paths are bitwise identical.

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pairgate {

inline bool openmp_enabled() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

template <class F>
void parallel_for_index(std::size_t n, F&& fn) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < static_cast<long long>(n); ++i)
    fn(static_cast<std::size_t>(i));
#else
  for (std::size_t i = 0; i < n; ++i) fn(i);
#endif
}

template <class F>
void serial_for_index(std::size_t n, F&& fn) {
  for (std::size_t i = 0; i < n; ++i) fn(i);
}

}  // namespace pairgate
