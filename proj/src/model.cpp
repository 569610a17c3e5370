#include "gib/model.hpp"

#include <cmath>

#include "gib/kernels.hpp"
#include "gib/spectral.hpp"

namespace gib {

void validate(const ModelParams& params) {
  if (!(params.p > 1.0))
    throw std::invalid_argument("p must exceed 1, got " +
                                std::to_string(params.p));
  if (!(params.half_length > 0.0))
    throw std::invalid_argument("half_length must be positive");
  if (params.n_points < 16 || params.n_points % 2 != 0)
    throw std::invalid_argument("n_points must be even and at least 16");
  if (!(params.dt > 0.0))
    throw std::invalid_argument("dt must be positive");
  if (params.t_final < 0.0)
    throw std::invalid_argument("t_final must be nonnegative");
  if (params.t_final > 0.0 && !(params.dt < params.t_final))
    throw std::invalid_argument("dt must be smaller than t_final");
  if (params.dealias &&
      std::abs(params.p - std::round(params.p)) > 1e-12)
    throw std::invalid_argument(
        "dealias requires an integer nonlinearity power p");
}

Field signed_power(const Field& u, double p) {
  Field out(u.grid);
  kernels::signed_power(u.span(), p, out.span());
  return out;
}

Field abs_power(const Field& u, double p) {
  Field out(u.grid);
  kernels::abs_power(u.span(), p, out.span());
  return out;
}

StateDerivative rhs(const State& state, const ModelParams& params) {
  require_same_grid(state.u, state.v, "rhs");

  StateDerivative d;
  d.du = deriv(state.v, 1);

  Field w(state.u.grid);
  kernels::add_signed_power(state.u.span(), params.p, w.span());
  if (params.dealias) w = two_thirds_filter(w);
  // Fused (1 - d_xx)^{-1} d_x: multiplier ik/(1+k^2), odd so Nyquist-zeroed.
  d.dv = apply_multiplier(
      w,
      [](double k) { return std::complex<double>(0.0, k / (1.0 + k * k)); },
      true);

  if (!kernels::all_finite(d.du.span()) || !kernels::all_finite(d.dv.span()))
    throw BlowUpError(state.t, "rhs produced a non-finite value at t = " +
                                   std::to_string(state.t));
  return d;
}

FiniteReport check_finite(const State& state) {
  FiniteReport r;
  r.first_bad_index_u = kernels::first_non_finite(state.u.span());
  r.first_bad_index_v = kernels::first_non_finite(state.v.span());
  r.finite = r.first_bad_index_u == kernels::npos &&
             r.first_bad_index_v == kernels::npos;
  r.sup_u = kernels::max_abs(state.u.span());
  r.sup_v = kernels::max_abs(state.v.span());
  if (!state.u.values.empty()) {
    const std::size_t last = state.u.size() - 1;
    r.boundary_u = std::max(std::abs(state.u[0]), std::abs(state.u[last]));
    r.boundary_v = std::max(std::abs(state.v[0]), std::abs(state.v[last]));
  }
  return r;
}

}  // namespace gib
