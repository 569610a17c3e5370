#include "gib/integrator.hpp"

#include <cmath>
#include <iostream>

#include "gib/kernels.hpp"
#include "gib/spectral.hpp"

namespace gib {

void validate(const Schedule& schedule) {
  if (schedule.sample_every < 1)
    throw std::invalid_argument("sample_every must be at least 1");
  if (!(schedule.dt > 0.0))
    throw std::invalid_argument("dt must be positive");
  if (schedule.t_final < 0.0)
    throw std::invalid_argument("t_final must be nonnegative");
  if (schedule.dt * schedule.sample_every > 1.0 + 1e-12)
    throw std::invalid_argument(
        "dt * sample_every must not exceed 1 (at least one sample per unit "
        "time)");
}

State rk4_step(const State& state, double dt, const ModelParams& params) {
  const auto stage = [&](const State& base, double frac,
                         const StateDerivative& d) {
    State s;
    s.t = base.t + frac * dt;
    s.u = Field(base.u.grid);
    s.v = Field(base.v.grid);
    kernels::scaled_sum(base.u.span(), frac * dt, d.du.span(), s.u.span());
    kernels::scaled_sum(base.v.span(), frac * dt, d.dv.span(), s.v.span());
    return s;
  };

  const StateDerivative d1 = rhs(state, params);
  const State s2 = stage(state, 0.5, d1);
  const StateDerivative d2 = rhs(s2, params);
  const State s3 = stage(state, 0.5, d2);
  const StateDerivative d3 = rhs(s3, params);
  const State s4 = stage(state, 1.0, d3);
  const StateDerivative d4 = rhs(s4, params);

  State out;
  out.t = state.t + dt;
  out.u = Field(state.u.grid);
  out.v = Field(state.v.grid);
  kernels::rk4_combine(state.u.span(), dt, d1.du.span(), d2.du.span(),
                       d3.du.span(), d4.du.span(), out.u.span());
  kernels::rk4_combine(state.v.span(), dt, d1.dv.span(), d2.dv.span(),
                       d3.dv.span(), d4.dv.span(), out.v.span());
  return out;
}

void evolve(const State& initial, const ModelParams& params,
            const Schedule& schedule,
            const std::function<void(const State&)>& on_sample) {
  validate(params);
  validate(schedule);
  if (!check_finite(initial).finite)
    throw BlowUpError(initial.t, "evolve: initial state is not finite");

  bool tail_warned = false;
  bool boundary_warned = false;
  const auto check_tail = [&](const State& s) {
    const double tail = spectral_tail_fraction(s.u);
    if (tail > kTailAbort)
      throw AliasingError(
          s.t, "evolve: spectral tail " + std::to_string(tail) + " at t = " +
                   std::to_string(s.t) +
                   " exceeds 1e-6; the run is under-resolved, raise n_points");
    if (tail > kTailWatermark && !tail_warned) {
      std::cerr << "evolve: spectrum tail " << tail << " above 1e-8 at t = "
                << s.t << "\n";
      tail_warned = true;
    }
    const FiniteReport fr = check_finite(s);
    const double boundary = std::max(fr.boundary_u, fr.boundary_v);
    if (boundary > 1e-10 && !boundary_warned) {
      std::cerr << "evolve: boundary magnitude " << boundary << " at t = "
                << s.t << "; the periodic box may be too small\n";
      boundary_warned = true;
    }
  };

  check_tail(initial);
  on_sample(initial);
  if (schedule.t_final == 0.0) return;

  const double t0 = initial.t;
  const double total = schedule.t_final / schedule.dt;
  long n_steps = std::llround(total);
  double last_dt = schedule.dt;
  bool partial = false;
  if (std::abs(n_steps * schedule.dt - schedule.t_final) >
      1e-9 * std::max(1.0, schedule.t_final)) {
    n_steps = static_cast<long>(std::floor(total)) + 1;
    last_dt = schedule.t_final - (n_steps - 1) * schedule.dt;
    partial = true;
  }

  State s = initial;
  bool sampled = false;
  for (long i = 1; i <= n_steps; ++i) {
    const double dt = (partial && i == n_steps) ? last_dt : schedule.dt;
    s = rk4_step(s, dt, params);
    // Reassign t from the step count to keep sample times exact.
    s.t = (partial && i == n_steps) ? t0 + schedule.t_final
                                    : t0 + static_cast<double>(i) * schedule.dt;
    sampled = false;
    if (i % schedule.sample_every == 0) {
      check_tail(s);
      on_sample(s);
      sampled = true;
    }
  }
  if (!sampled) {
    check_tail(s);
    on_sample(s);
  }
}

}  // namespace gib
