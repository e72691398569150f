#pragma once

#include <atomic>
#include <cstddef>
#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bior::par {

inline std::atomic<bool>& enabled_flag() {
  static std::atomic<bool> flag{true};
  return flag;
}

inline bool enabled() { return enabled_flag().load(std::memory_order_relaxed); }
inline void set_enabled(bool on) { enabled_flag().store(on, std::memory_order_relaxed); }

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

// Runs fn(0..n-1), each index writing only its own output slot.  Falls back
// to a plain loop when OpenMP is off, parallelism is disabled, or the loop is
// below the grain size.
template <class Fn>
void parallel_for(std::size_t n, Fn&& fn, std::size_t grain = 16) {
#ifdef _OPENMP
  if (enabled() && n >= grain && omp_get_max_threads() > 1 && !omp_in_parallel()) {
    std::exception_ptr first_error;
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(n); ++i) {
      try {
        fn(static_cast<std::size_t>(i));
      } catch (...) {
#pragma omp critical
        if (!first_error) first_error = std::current_exception();
      }
    }
    if (first_error) std::rethrow_exception(first_error);
    return;
  }
#else
  (void)grain;
#endif
  for (std::size_t i = 0; i < n; ++i) fn(i);
}

}  // namespace bior::par
