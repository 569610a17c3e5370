#include "gib/solitons.hpp"

#include <cmath>
#include <iostream>
#include <string>

#include "gib/kernels.hpp"
#include "gib/spectral.hpp"

namespace gib {

namespace {

constexpr double kBoundaryTailTol = 1e-12;

// sech(a) without overflow for large |a|.
double sech(double a) {
  const double e = std::exp(-std::abs(a));
  return 2.0 * e / (1.0 + e * e);
}

}  // namespace

void validate(const SolitonSpec& spec) {
  if (!(spec.p > 1.0))
    throw std::invalid_argument("p must exceed 1, got " +
                                std::to_string(spec.p));
  if (!(std::abs(spec.c) > 1.0))
    throw std::invalid_argument("|c| must exceed 1, got c = " +
                                std::to_string(spec.c));
}

double base_profile(double s, double p) {
  const double amp = std::pow((p + 1.0) / 2.0, 1.0 / (p - 1.0));
  return amp * std::pow(sech((p - 1.0) * s / 2.0), 2.0 / (p - 1.0));
}

double base_profile_deriv(double s, double p) {
  // Q'(s) = -tanh((p-1)s/2) Q(s)
  return -std::tanh((p - 1.0) * s / 2.0) * base_profile(s, p);
}

namespace {
double width_factor(const SolitonSpec& spec) {
  return std::sqrt((spec.c * spec.c - 1.0) / (spec.c * spec.c));
}
double amplitude_factor(const SolitonSpec& spec) {
  return std::pow(spec.c * spec.c - 1.0, 1.0 / (spec.p - 1.0));
}
}  // namespace

double scaled_profile(double s, const SolitonSpec& spec) {
  validate(spec);
  return amplitude_factor(spec) * base_profile(width_factor(spec) * s, spec.p);
}

double scaled_profile_deriv(double s, const SolitonSpec& spec) {
  validate(spec);
  const double a = width_factor(spec);
  return amplitude_factor(spec) * a * base_profile_deriv(a * s, spec.p);
}

double soliton_amplitude(const SolitonSpec& spec) {
  validate(spec);
  return amplitude_factor(spec) *
         std::pow((spec.p + 1.0) / 2.0, 1.0 / (spec.p - 1.0));
}

bool near_sonic(const SolitonSpec& spec) {
  return std::abs(spec.c) - 1.0 < 1e-3;
}

State soliton_state(const GridPtr& grid, const SolitonSpec& spec) {
  validate(spec);
  if (near_sonic(spec))
    std::cerr << "soliton_state: |c| - 1 = " << std::abs(spec.c) - 1.0
              << " is near sonic; the profile widens like (c^2-1)^{-1/2}\n";
  State s;
  s.t = 0.0;
  s.u = sample_function(
      grid, [&](double x) { return scaled_profile(x - spec.x0, spec); });
  s.v = Field(grid);
  kernels::scaled_sum(s.v.span(), -spec.c, s.u.span(), s.v.span());

  const std::size_t last = s.u.size() - 1;
  const double tail = std::max(std::abs(s.u[0]), std::abs(s.u[last]));
  if (tail > kBoundaryTailTol)
    throw std::invalid_argument(
        "soliton_state: profile tail " + std::to_string(tail) +
        " at the box edge exceeds 1e-12; increase half_length");
  return s;
}

double soliton_residual(const GridPtr& grid, const SolitonSpec& spec) {
  validate(spec);
  Field q = sample_function(
      grid, [&](double x) { return scaled_profile(x - spec.x0, spec); });
  Field qxx = deriv(q, 2);
  const double c2 = spec.c * spec.c;
  Field qp = signed_power(q, spec.p);
  double sup = 0.0;
  for (std::size_t j = 0; j < q.size(); ++j) {
    const double r = c2 * qxx[j] - (c2 - 1.0) * q[j] + qp[j];
    sup = std::max(sup, std::abs(r));
  }
  return sup;
}

}  // namespace gib
