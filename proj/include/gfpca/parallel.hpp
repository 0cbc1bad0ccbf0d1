#pragma once

#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gfpca {

/// Worker cap for OpenMP regions. The GFPCA_THREADS environment variable
/// lowers the OpenMP default; values < 1 or above the default are ignored.
inline int max_threads() {
  static const int cached = [] {
#ifdef _OPENMP
    int limit = omp_get_max_threads();
#else
    int limit = 1;
#endif
    if (const char* env = std::getenv("GFPCA_THREADS")) {
      const int requested = std::atoi(env);
      if (requested >= 1 && requested < limit) limit = requested;
    }
    return limit;
  }();
  return cached;
}

/// Runs body(i) for i in [0, count). Every parallel kernel in the library is
/// written against this driver with independent output slots per index, so
/// the parallel and serial paths produce bit-identical results; the serial
/// path doubles as the reference implementation in tests and benchmarks.
template <class Body>
void parallel_for(int count, const Body& body, bool parallel = true) {
#ifdef _OPENMP
  if (parallel && count > 1 && max_threads() > 1) {
#pragma omp parallel for num_threads(max_threads()) schedule(static)
    for (int i = 0; i < count; ++i) {
      body(i);
    }
    return;
  }
#else
  (void)parallel;
#endif
  for (int i = 0; i < count; ++i) {
    body(i);
  }
}

}  // namespace gfpca
