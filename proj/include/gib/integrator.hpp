#pragma once

#include <functional>

#include "gib/model.hpp"

// Classical fixed-step RK4 in time. Fixed steps keep runs deterministic and
// make the finite-difference identity checks clean.

namespace gib {

struct Schedule {
  int sample_every = 100;  // steps between diagnostic samples
  double t_final = 10.0;
  double dt = 0.01;
};

void validate(const Schedule& schedule);

// Raised when the spectral tail of u grows past the aliasing guard.
struct AliasingError : std::runtime_error {
  double t;
  AliasingError(double t_, const std::string& what)
      : std::runtime_error(what), t(t_) {}
};

// One classical RK4 step; throws BlowUpError on a non-finite stage.
State rk4_step(const State& state, double dt, const ModelParams& params);

// Advance to t_final, invoking on_sample at t = 0, every sample_every steps,
// and at the final time. Sample times are computed as step*dt from the start
// so they never accumulate drift. The spectral tail of u is checked at each
// sample; above 1e-6 (relative) the run aborts with advice to raise n_points.
void evolve(const State& initial, const ModelParams& params,
            const Schedule& schedule,
            const std::function<void(const State&)>& on_sample);

inline constexpr double kTailAbort = 1e-6;
inline constexpr double kTailWatermark = 1e-8;

}  // namespace gib
