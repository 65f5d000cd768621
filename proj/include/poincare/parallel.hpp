#pragma once

// OpenMP loops with a plain serial twin. Both run the same body; the serial
// one is the reference the tests compare against.

#include <cstddef>
#include <exception>
#include <limits>
#include <mutex>
#include <optional>

namespace poincare {

enum class Exec { Serial, Parallel };

/// Runs f(i) for i in [0, n). Results must be written to per-index slots.
/// The exception from the lowest failing index is rethrown.
template <class F>
void for_each_index(std::size_t n, Exec exec, F&& f) {
  if (exec == Exec::Serial) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::exception_ptr err;
  std::size_t err_at = std::numeric_limits<std::size_t>::max();
  std::mutex mu;
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < static_cast<long long>(n); ++i) {
    try {
      f(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard<std::mutex> lock(mu);
      if (static_cast<std::size_t>(i) < err_at) {
        err_at = static_cast<std::size_t>(i);
        err = std::current_exception();
      }
    }
  }
  if (err) std::rethrow_exception(err);
}

/// Smallest i in [0, n) with pred(i) true. The parallel version evaluates
/// speculatively but returns the same index as the serial scan.
template <class P>
std::optional<std::size_t> find_first(std::size_t n, Exec exec, P&& pred) {
  if (exec == Exec::Serial) {
    for (std::size_t i = 0; i < n; ++i)
      if (pred(i)) return i;
    return std::nullopt;
  }
  std::size_t best = std::numeric_limits<std::size_t>::max();
  std::size_t err_at = std::numeric_limits<std::size_t>::max();
  std::exception_ptr err;
  std::mutex mu;
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < static_cast<long long>(n); ++i) {
    std::size_t k = static_cast<std::size_t>(i);
    bool skip;
    {
      std::lock_guard<std::mutex> lock(mu);
      skip = k > best || k > err_at;
    }
    if (skip) continue;
    try {
      if (pred(k)) {
        std::lock_guard<std::mutex> lock(mu);
        if (k < best) best = k;
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(mu);
      if (k < err_at) {
        err_at = k;
        err = std::current_exception();
      }
    }
  }
  // Serial order: an exception only matters if it comes before the hit.
  if (err && err_at < best) std::rethrow_exception(err);
  if (best == std::numeric_limits<std::size_t>::max()) return std::nullopt;
  return best;
}

}  // namespace poincare
