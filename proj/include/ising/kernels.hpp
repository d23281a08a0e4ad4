#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace ising {

/// Execution mode for the compute kernels. Serial and Parallel use the same
/// fixed blocking, so the floating-point association is identical and results
/// are bit-for-bit equal between the two modes; only scheduling differs.
enum class Exec { Serial, Parallel };

/// Worker cap: min(OpenMP max threads, ISING_CONC_THREADS when set).
int max_threads();

/// Programmatic override of the worker cap (0 resets to the environment).
void set_max_threads(int n);

namespace detail {
inline constexpr std::size_t kBlock = 4096;
}

/// Deterministic blocked sum of f(i), i in [0, count). Per-block partials are
/// accumulated left to right and then combined in block order, regardless of
/// mode and thread count.
template <class F>
double block_sum(std::size_t count, F&& f, Exec mode = Exec::Parallel) {
  if (count == 0) return 0.0;
  const std::size_t nblocks = (count + detail::kBlock - 1) / detail::kBlock;
  std::vector<double> partial(nblocks, 0.0);
  if (mode == Exec::Parallel && nblocks > 1) {
#pragma omp parallel for schedule(static) num_threads(max_threads())
    for (std::int64_t b = 0; b < static_cast<std::int64_t>(nblocks); ++b) {
      const std::size_t lo = static_cast<std::size_t>(b) * detail::kBlock;
      const std::size_t hi = std::min(lo + detail::kBlock, count);
      double s = 0.0;
      for (std::size_t i = lo; i < hi; ++i) s += f(i);
      partial[static_cast<std::size_t>(b)] = s;
    }
  } else {
    for (std::size_t b = 0; b < nblocks; ++b) {
      const std::size_t lo = b * detail::kBlock;
      const std::size_t hi = std::min(lo + detail::kBlock, count);
      double s = 0.0;
      for (std::size_t i = lo; i < hi; ++i) s += f(i);
      partial[b] = s;
    }
  }
  double total = 0.0;
  for (double s : partial) total += s;
  return total;
}

/// Blocked max of f(i), i in [0, count); count must be positive.
template <class F>
double block_max(std::size_t count, F&& f, Exec mode = Exec::Parallel) {
  const std::size_t nblocks = (count + detail::kBlock - 1) / detail::kBlock;
  std::vector<double> partial(nblocks);
  if (mode == Exec::Parallel && nblocks > 1) {
#pragma omp parallel for schedule(static) num_threads(max_threads())
    for (std::int64_t b = 0; b < static_cast<std::int64_t>(nblocks); ++b) {
      const std::size_t lo = static_cast<std::size_t>(b) * detail::kBlock;
      const std::size_t hi = std::min(lo + detail::kBlock, count);
      double m = f(lo);
      for (std::size_t i = lo + 1; i < hi; ++i) m = std::max(m, f(i));
      partial[static_cast<std::size_t>(b)] = m;
    }
  } else {
    for (std::size_t b = 0; b < nblocks; ++b) {
      const std::size_t lo = b * detail::kBlock;
      const std::size_t hi = std::min(lo + detail::kBlock, count);
      double m = f(lo);
      for (std::size_t i = lo + 1; i < hi; ++i) m = std::max(m, f(i));
      partial[b] = m;
    }
  }
  double total = partial[0];
  for (double m : partial) total = std::max(total, m);
  return total;
}

/// Element-wise work split across workers; f(i) must only touch state owned
/// by index i. Work item order inside a thread is ascending.
template <class F>
void parallel_for(std::size_t count, F&& f, Exec mode = Exec::Parallel) {
  if (mode == Exec::Parallel && count > 1) {
#pragma omp parallel for schedule(static) num_threads(max_threads())
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(count); ++i)
      f(static_cast<std::size_t>(i));
  } else {
    for (std::size_t i = 0; i < count; ++i) f(i);
  }
}

/// Plain left-to-right sum; reference path for the kernel tests and the
/// benchmark baseline.
template <class F>
double naive_sum(std::size_t count, F&& f) {
  double s = 0.0;
  for (std::size_t i = 0; i < count; ++i) s += f(i);
  return s;
}

}  // namespace ising
