#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>

namespace hypercp {

// Overflow-safe p-norm of a nonnegative-magnitude vector: the entries are
// rescaled by the largest magnitude before being raised to the power p.
double lp_norm(std::span<const double> x, double p);

// Same as lp_norm, but returns the pair (max, s) such that
// ||x||_p = max * s^(1/p) with s = sum (|x_i|/max)^p in [1, len].
struct ScaledPowerSum {
  double scale = 0.0;
  double sum = 0.0;
};
ScaledPowerSum scaled_power_sum(std::span<const double> x, double p);

double l2_norm(std::span<const double> x);

/// Shortest decimal text that parses back to exactly `v`.
std::string format_double(double v);

// Number of worker threads for the internal edge/node passes. Reads
// HYPERCP_THREADS on first use; set_thread_count overrides it.
std::size_t thread_count();
void set_thread_count(std::size_t threads);

// Runs body(begin, end) over contiguous chunks of [0, n). Falls back to a
// single call when n is below `grain` or only one thread is allowed. Every
// index is visited by exactly one call, so per-index outputs are identical
// to the sequential run.
void parallel_for(std::size_t n, std::size_t grain,
                  const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace hypercp
