#include "hypercp/numeric.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace hypercp {

ScaledPowerSum scaled_power_sum(std::span<const double> x, double p) {
  ScaledPowerSum r;
  for (double v : x) r.scale = std::max(r.scale, std::abs(v));
  if (r.scale == 0.0) return r;
  for (double v : x) r.sum += std::pow(std::abs(v) / r.scale, p);
  return r;
}

double lp_norm(std::span<const double> x, double p) {
  auto [scale, sum] = scaled_power_sum(x, p);
  if (scale == 0.0) return 0.0;
  return scale * std::pow(sum, 1.0 / p);
}

double l2_norm(std::span<const double> x) {
  double scale = 0.0;
  for (double v : x) scale = std::max(scale, std::abs(v));
  if (scale == 0.0) return 0.0;
  double s = 0.0;
  for (double v : x) {
    double t = v / scale;
    s += t * t;
  }
  return scale * std::sqrt(s);
}

std::string format_double(double v) {
  std::array<char, 32> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), end);
}

namespace {

std::size_t threads_from_env() {
  const char* env = std::getenv("HYPERCP_THREADS");
  if (env != nullptr) {
    try {
      long v = std::stol(env);
      if (v >= 1) return static_cast<std::size_t>(v);
    } catch (...) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::atomic<std::size_t>& thread_setting() {
  static std::atomic<std::size_t> threads{threads_from_env()};
  return threads;
}

}  // namespace

std::size_t thread_count() { return thread_setting().load(); }

void set_thread_count(std::size_t threads) { thread_setting().store(std::max<std::size_t>(1, threads)); }

void parallel_for(std::size_t n, std::size_t grain,
                  const std::function<void(std::size_t, std::size_t)>& body) {
  std::size_t threads = std::min(thread_count(), grain == 0 ? n : n / grain);
  if (threads <= 1) {
    if (n > 0) body(0, n);
    return;
  }
  std::vector<std::jthread> workers;
  workers.reserve(threads - 1);
  std::size_t chunk = (n + threads - 1) / threads;
  for (std::size_t t = 1; t < threads; ++t) {
    std::size_t b = t * chunk, e = std::min(n, b + chunk);
    if (b < e) workers.emplace_back([&body, b, e] { body(b, e); });
  }
  body(0, std::min(n, chunk));
}

}  // namespace hypercp
