#pragma once

#include <cstddef>
#include <exception>

namespace esdg::detail {

/// Runs fn(i) for i in [0, n), in parallel when OpenMP is enabled. Iterations
/// must write disjoint data. The first exception thrown is rethrown after the
/// loop.
template <class Fn>
void parallel_for(std::size_t n, Fn&& fn) {
  std::exception_ptr error;
#if defined(_OPENMP)
#pragma omp parallel for schedule(static)
#endif
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
    try {
      fn(static_cast<std::size_t>(i));
    } catch (...) {
#if defined(_OPENMP)
#pragma omp critical(esdg_parallel_error)
#endif
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace esdg::detail
