#ifndef KHF_PARALLEL_HPP
#define KHF_PARALLEL_HPP

// OpenMP grid kernels plus a serial reference implementation.
//
// Every parallel site in the library is a map over an index range whose
// element computations are independent; results are materialized by index
// and reduced afterwards (max/min/sum over the full vector), so the output
// is identical for any thread count — including 1 — and identical to the
// serial reference. tools/bench_grid.cpp compares the two.

#include <atomic>
#include <cstddef>
#include <vector>

#include "khf/numeric.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace khf::par {

namespace detail {
inline std::atomic<bool>& enabled_flag() {
  static std::atomic<bool> flag{true};
  return flag;
}
}  // namespace detail

inline bool enabled() { return detail::enabled_flag().load(std::memory_order_relaxed); }
inline void set_enabled(bool on) { detail::enabled_flag().store(on, std::memory_order_relaxed); }

template <class T, class F>
std::vector<T> map_serial(std::size_t n, F&& f) {
  std::vector<T> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
  return out;
}

template <class T, class F>
std::vector<T> map(std::size_t n, F&& f) {
#ifdef _OPENMP
  if (enabled() && n > 1) {
    std::vector<T> out(n);
#pragma omp parallel
    {
      precision::apply_thread();
#pragma omp for schedule(dynamic)
      for (long long i = 0; i < static_cast<long long>(n); ++i)
        out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
    }
    return out;
  }
#endif
  return map_serial<T>(n, std::forward<F>(f));
}

}  // namespace khf::par

#endif
