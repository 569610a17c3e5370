#pragma once

#include <cstddef>
#include <span>

// Data-parallel inner loops shared by the solver and the diagnostics.
//
// Every kernel has two implementations: the default one, which uses OpenMP
// when the library is built with it, and a plain-loop reference in
// kernels::serial used by the unit tests and the benchmark target.
//
// Reductions are computed from fixed-width chunk partials that are combined
// in chunk order, so the result is bit-identical for any thread count.

namespace gib::kernels {

inline constexpr std::size_t kReductionChunk = 1024;

bool parallel_enabled() noexcept;
int max_threads() noexcept;

// y = a + s*b
void scaled_sum(std::span<const double> a, double s, std::span<const double> b,
                std::span<double> y);

// y = u + (dt/6)*(k1 + 2*k2 + 2*k3 + k4)
void rk4_combine(std::span<const double> u, double dt,
                 std::span<const double> k1, std::span<const double> k2,
                 std::span<const double> k3, std::span<const double> k4,
                 std::span<double> y);

// y_i = sign(x_i)*|x_i|^p, with fast paths for small integer p
void signed_power(std::span<const double> x, double p, std::span<double> y);

// y_i = x_i + sign(x_i)*|x_i|^p
void add_signed_power(std::span<const double> x, double p, std::span<double> y);

// y_i = |x_i|^p
void abs_power(std::span<const double> x, double p, std::span<double> y);

double sum(std::span<const double> x);
double dot(std::span<const double> a, std::span<const double> b);
// sum of w_i*a_i*b_i
double dot3(std::span<const double> w, std::span<const double> a,
            std::span<const double> b);

double max_abs(std::span<const double> x);
bool all_finite(std::span<const double> x);
// index of the first non-finite entry, or npos
std::size_t first_non_finite(std::span<const double> x);
inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

namespace serial {
void scaled_sum(std::span<const double> a, double s, std::span<const double> b,
                std::span<double> y);
void rk4_combine(std::span<const double> u, double dt,
                 std::span<const double> k1, std::span<const double> k2,
                 std::span<const double> k3, std::span<const double> k4,
                 std::span<double> y);
void signed_power(std::span<const double> x, double p, std::span<double> y);
double sum(std::span<const double> x);
double dot(std::span<const double> a, std::span<const double> b);
double dot3(std::span<const double> w, std::span<const double> a,
            std::span<const double> b);
double max_abs(std::span<const double> x);
}  // namespace serial

}  // namespace gib::kernels
