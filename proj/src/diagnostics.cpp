#include "gib/diagnostics.hpp"

#include <cmath>
#include <iostream>

#include "gib/kernels.hpp"
#include "gib/spectral.hpp"

namespace gib {

namespace {

Field ones(const GridPtr& grid) {
  Field f(grid);
  for (auto& v : f.values) v = 1.0;
  return f;
}

void require_static(const WeightSpec& spec, const char* where) {
  if (!is_static(spec))
    throw std::invalid_argument(std::string(where) +
                                ": requires a static weight (sigma = 0)");
}

}  // namespace

double energy(const State& state, double p) {
  const Field one = ones(state.u.grid);
  Field vx = deriv(state.v, 1);
  double quad = integral_product(one, state.u, state.u) +
                integral_product(one, state.v, state.v) +
                integral_product(one, vx, vx);
  Field up1 = abs_power(state.u, p + 1.0);
  return 0.5 * quad + integrate(up1) / (p + 1.0);
}

double momentum(const State& state) {
  const Field one = ones(state.u.grid);
  Field ux = deriv(state.u, 1);
  Field vx = deriv(state.v, 1);
  return integral_product(one, state.u, state.v) +
         integral_product(one, ux, vx);
}

double virial_I(const State& state, const WeightSpec& spec, double p) {
  WeightFields w = weight_fields(spec, state.u.grid, state.t);
  Field vx = deriv(state.v, 1);
  Field up1 = abs_power(state.u, p + 1.0);
  return 0.5 * (integral_product(w.phi, state.u, state.u) +
                integral_product(w.phi, state.v, state.v) +
                integral_product(w.phi, vx, vx)) +
         integral_product(w.phi, up1) / (p + 1.0);
}

double virial_J(const State& state, const WeightSpec& spec) {
  WeightFields w = weight_fields(spec, state.u.grid, state.t);
  Field ux = deriv(state.u, 1);
  Field vx = deriv(state.v, 1);
  return integral_product(w.phi, state.u, state.v) +
         integral_product(w.phi, ux, vx);
}

double virial_N(const State& state, const WeightSpec& spec) {
  require_static(spec, "virial_N");
  WeightFields w = weight_fields(spec, state.u.grid, state.t);
  Field vx = deriv(state.v, 1);
  return integral_product(w.dphi, state.u, vx) / (2.0 * spec.L);
}

namespace {

// (1 - d_xx)^{-1}(u + |u|^{p-1} u)
Field helmholtz_of_full_nonlinearity(const Field& u, double p) {
  Field w(u.grid);
  kernels::add_signed_power(u.span(), p, w.span());
  return helmholtz_inverse(w);
}

}  // namespace

double dIdt_formula(const State& state, const WeightSpec& spec, double p) {
  WeightFields w = weight_fields(spec, state.u.grid, state.t);
  Field vx = deriv(state.v, 1);
  Field up1 = abs_power(state.u, p + 1.0);
  Field g = helmholtz_of_full_nonlinearity(state.u, p);
  const double sigma = spec.drift_speed;
  const double transport =
      sigma / (2.0 * spec.L) *
      (integral_product(w.dphi, state.u, state.u) +
       integral_product(w.dphi, state.v, state.v) +
       integral_product(w.dphi, vx, vx) +
       2.0 / (p + 1.0) * integral_product(w.dphi, up1));
  return transport - integral_product(w.dphi, state.v, g) / spec.L;
}

double dJdt_formula(const State& state, const WeightSpec& spec, double p) {
  WeightFields w = weight_fields(spec, state.u.grid, state.t);
  Field ux = deriv(state.u, 1);
  Field vx = deriv(state.v, 1);
  Field up1 = abs_power(state.u, p + 1.0);
  Field g = helmholtz_of_full_nonlinearity(state.u, p);
  const double sigma = spec.drift_speed;
  const double L = spec.L;
  double out = sigma / L *
               (integral_product(w.dphi, state.u, state.v) +
                integral_product(w.dphi, ux, vx));
  out += (integral_product(w.dphi, state.u, state.u) +
          2.0 / (p + 1.0) * integral_product(w.dphi, up1) -
          integral_product(w.dphi, state.v, state.v) -
          integral_product(w.dphi, vx, vx)) /
         (2.0 * L);
  out -= integral_product(w.dphi, state.u, g) / L;
  return out;
}

double dNdt_formula(const State& state, const WeightSpec& spec, double p) {
  require_static(spec, "dNdt_formula");
  WeightFields w = weight_fields(spec, state.u.grid, state.t);
  Field vx = deriv(state.v, 1);
  Field f = canonical_variable(state.u);
  Field hup = helmholtz_inverse(signed_power(state.u, p));
  Field up1 = abs_power(state.u, p + 1.0);
  const double L = spec.L;
  double out = (integral_product(w.dphi, vx, vx) -
                integral_product(w.dphi, state.u, state.u) +
                integral_product(w.dphi, state.u, f)) /
               (2.0 * L);
  out += (-integral_product(w.dphi, up1) +
          integral_product(w.dphi, state.u, hup)) /
         (2.0 * L);
  return out;
}

Field canonical_variable(const Field& u) { return helmholtz_inverse(u); }

double canonical_identity_residual(const Field& u, const WeightSpec& spec) {
  validate(spec);
  WeightFields w = weight_fields(spec, u.grid, 0.0);
  Field f = canonical_variable(u);
  Field fx = deriv(f, 1);
  Field fxx = deriv(f, 2);
  const double lhs = integral_product(w.dphi, u, u);
  const double rhs = integral_product(w.dphi, f, f) +
                     2.0 * integral_product(w.dphi, fx, fx) +
                     integral_product(w.dphi, fxx, fxx) -
                     integral_product(w.d3phi, f, f) / (spec.L * spec.L);
  return std::abs(lhs - rhs);
}

VirialTerms qsqpq_split(const State& state, const WeightSpec& spec, double p) {
  WeightFields w = weight_fields(spec, state.u.grid, state.t);
  Field f = canonical_variable(state.u);
  Field fx = deriv(f, 1);
  Field fxx = deriv(f, 2);
  Field vx = deriv(state.v, 1);
  Field hup = helmholtz_inverse(signed_power(state.u, p));
  Field up1 = abs_power(state.u, p + 1.0);
  const double sigma = spec.drift_speed;
  const double L = spec.L;

  VirialTerms t;
  t.Qt = sigma / (2.0 * L) *
             (integral_product(w.dphi, f, f) +
              2.0 * integral_product(w.dphi, fx, fx) +
              integral_product(w.dphi, fxx, fxx) +
              integral_product(w.dphi, state.v, state.v) +
              integral_product(w.dphi, vx, vx)) -
         integral_product(w.dphi, state.v, f) / L;
  t.SQt = -sigma / (2.0 * L * L * L) * integral_product(w.d3phi, f, f);
  t.PQt = sigma / (L * (p + 1.0)) * integral_product(w.dphi, up1) -
          integral_product(w.dphi, state.v, hup) / L;
  return t;
}

LyapunovTerms lyapunov_terms(const State& state, const WeightSpec& spec,
                             double p) {
  require_static(spec, "lyapunov_terms");
  if (!positive_slope(spec.shape))
    throw std::invalid_argument(
        "lyapunov_terms: weight must have phi' > 0 everywhere (tanh or "
        "half-one-plus-tanh)");
  WeightFields w = weight_fields(spec, state.u.grid, state.t);
  Field f = canonical_variable(state.u);
  Field hup = helmholtz_inverse(signed_power(state.u, p));
  Field up1 = abs_power(state.u, p + 1.0);
  const double L = spec.L;

  LyapunovTerms t;
  t.term_v2 = integral_product(w.dphi, state.v, state.v) / (2.0 * L);
  t.term_uHu = integral_product(w.dphi, state.u, f) / (2.0 * L);
  t.term_up1 = (p - 1.0) / (2.0 * (p + 1.0) * L) * integral_product(w.dphi, up1);
  t.term_uHup = integral_product(w.dphi, state.u, hup) / (2.0 * L);
  return t;
}

bool comparison_check(const Field& v, const Field& w) {
  require_same_grid(v, w, "comparison_check");
  for (std::size_t j = 0; j < v.size(); ++j)
    if (!(v[j] <= w[j]))
      throw PreconditionError(
          "comparison_check: precondition v <= w fails at node " +
          std::to_string(j));
  Field hv = helmholtz_inverse(v);
  Field hw = helmholtz_inverse(w);
  for (std::size_t j = 0; j < v.size(); ++j)
    if (hv[j] > hw[j] + 1e-12) return false;
  return true;
}

double region_norm(const State& state, std::span<const Interval> region) {
  if (region.empty()) {
    std::cerr << "region_norm: empty region, returning 0\n";
    return 0.0;
  }
  Field vx = deriv(state.v, 1);
  const Grid& g = *state.u.grid;
  double acc = 0.0;
  for (int j = 0; j < g.n_points; ++j) {
    const double x = g.nodes[j];
    bool inside = false;
    for (const auto& iv : region)
      if (x >= iv.lo && x <= iv.hi) {
        inside = true;
        break;
      }
    if (!inside) continue;
    acc += state.u[j] * state.u[j] + state.v[j] * state.v[j] + vx[j] * vx[j];
  }
  return std::sqrt(acc * g.dx);
}

std::vector<Interval> exterior_region(double t, double a, double b,
                                      const Grid& box) {
  if (t < 0.0) throw std::invalid_argument("exterior_region: t must be >= 0");
  if (!(a > 0.0) || !(b > 0.0))
    throw std::invalid_argument("exterior_region: a and b must be positive");
  std::vector<Interval> out;
  const double left_hi = -(1.0 + a) * t;
  const double right_lo = (1.0 + b) * t;
  if (left_hi >= -box.half_length)
    out.push_back({-box.half_length, left_hi});
  if (right_lo <= box.half_length)
    out.push_back({right_lo, box.half_length});
  return out;
}

}  // namespace gib
