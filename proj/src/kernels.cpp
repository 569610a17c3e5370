#include "gib/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gib::kernels {

bool parallel_enabled() noexcept {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

int max_threads() noexcept {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace {

// Below this size the parallel-for overhead dominates.
constexpr std::ptrdiff_t kParallelCutoff = 4096;

inline double spow(double x, double p) {
  if (x == 0.0) return 0.0;
  if (p == 2.0) return x * std::abs(x);
  if (p == 3.0) return x * x * x;
  return std::copysign(std::pow(std::abs(x), p), x);
}

inline double apow(double x, double p) {
  const double a = std::abs(x);
  if (p == 2.0) return a * a;
  if (p == 3.0) return a * a * a;
  if (p == 4.0) {
    const double a2 = a * a;
    return a2 * a2;
  }
  return std::pow(a, p);
}

}  // namespace

void scaled_sum(std::span<const double> a, double s, std::span<const double> b,
                std::span<double> y) {
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(y.size());
#pragma omp parallel for schedule(static) if (n >= kParallelCutoff)
  for (std::ptrdiff_t i = 0; i < n; ++i) y[i] = a[i] + s * b[i];
}

void rk4_combine(std::span<const double> u, double dt,
                 std::span<const double> k1, std::span<const double> k2,
                 std::span<const double> k3, std::span<const double> k4,
                 std::span<double> y) {
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(y.size());
  const double w = dt / 6.0;
#pragma omp parallel for schedule(static) if (n >= kParallelCutoff)
  for (std::ptrdiff_t i = 0; i < n; ++i)
    y[i] = u[i] + w * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
}

void signed_power(std::span<const double> x, double p, std::span<double> y) {
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(y.size());
#pragma omp parallel for schedule(static) if (n >= kParallelCutoff)
  for (std::ptrdiff_t i = 0; i < n; ++i) y[i] = spow(x[i], p);
}

void add_signed_power(std::span<const double> x, double p,
                      std::span<double> y) {
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(y.size());
#pragma omp parallel for schedule(static) if (n >= kParallelCutoff)
  for (std::ptrdiff_t i = 0; i < n; ++i) y[i] = x[i] + spow(x[i], p);
}

void abs_power(std::span<const double> x, double p, std::span<double> y) {
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(y.size());
#pragma omp parallel for schedule(static) if (n >= kParallelCutoff)
  for (std::ptrdiff_t i = 0; i < n; ++i) y[i] = apow(x[i], p);
}

namespace {

// Chunk partials combined in index order: the total does not depend on how
// chunks were distributed over threads.
template <typename ChunkSum>
double chunked_reduce(std::size_t n, ChunkSum&& chunk_sum) {
  const std::size_t n_chunks = (n + kReductionChunk - 1) / kReductionChunk;
  if (n_chunks <= 1) return chunk_sum(0, n);
  std::vector<double> partial(n_chunks);
  const std::ptrdiff_t nc = static_cast<std::ptrdiff_t>(n_chunks);
#pragma omp parallel for schedule(static) if (nc > 1)
  for (std::ptrdiff_t c = 0; c < nc; ++c) {
    const std::size_t lo = static_cast<std::size_t>(c) * kReductionChunk;
    const std::size_t hi = std::min(lo + kReductionChunk, n);
    partial[static_cast<std::size_t>(c)] = chunk_sum(lo, hi);
  }
  double total = 0.0;
  for (double s : partial) total += s;
  return total;
}

}  // namespace

double sum(std::span<const double> x) {
  return chunked_reduce(x.size(), [&](std::size_t lo, std::size_t hi) {
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) s += x[i];
    return s;
  });
}

double dot(std::span<const double> a, std::span<const double> b) {
  return chunked_reduce(a.size(), [&](std::size_t lo, std::size_t hi) {
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) s += a[i] * b[i];
    return s;
  });
}

double dot3(std::span<const double> w, std::span<const double> a,
            std::span<const double> b) {
  return chunked_reduce(w.size(), [&](std::size_t lo, std::size_t hi) {
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) s += w[i] * a[i] * b[i];
    return s;
  });
}

double max_abs(std::span<const double> x) {
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(x.size());
  double m = 0.0;
#pragma omp parallel for schedule(static) reduction(max : m) \
    if (n >= kParallelCutoff)
  for (std::ptrdiff_t i = 0; i < n; ++i) m = std::max(m, std::abs(x[i]));
  return m;
}

bool all_finite(std::span<const double> x) {
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(x.size());
  bool ok = true;
#pragma omp parallel for schedule(static) reduction(&& : ok) \
    if (n >= kParallelCutoff)
  for (std::ptrdiff_t i = 0; i < n; ++i) ok = ok && std::isfinite(x[i]);
  return ok;
}

std::size_t first_non_finite(std::span<const double> x) {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!std::isfinite(x[i])) return i;
  return npos;
}

namespace serial {

void scaled_sum(std::span<const double> a, double s, std::span<const double> b,
                std::span<double> y) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = a[i] + s * b[i];
}

void rk4_combine(std::span<const double> u, double dt,
                 std::span<const double> k1, std::span<const double> k2,
                 std::span<const double> k3, std::span<const double> k4,
                 std::span<double> y) {
  const double w = dt / 6.0;
  for (std::size_t i = 0; i < y.size(); ++i)
    y[i] = u[i] + w * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
}

void signed_power(std::span<const double> x, double p, std::span<double> y) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = spow(x[i], p);
}

double sum(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v;
  return s;
}

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double dot3(std::span<const double> w, std::span<const double> a,
            std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * a[i] * b[i];
  return s;
}

double max_abs(std::span<const double> x) {
  double m = 0.0;
  for (double v : x) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace serial

}  // namespace gib::kernels
