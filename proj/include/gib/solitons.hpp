#pragma once

#include "gib/model.hpp"

// Closed-form solitary waves (u, v) = (Q_c, -c Q_c)(x - c t - x0) with
// |c| > 1. The base profile Q solves Q'' - Q + Q^p = 0 and the scaled
// profile satisfies c^2 Q_c'' - (c^2 - 1) Q_c + Q_c^p = 0.

namespace gib {

struct SolitonSpec {
  double p = 2.0;
  double c = 1.5;
  double x0 = 0.0;
};

void validate(const SolitonSpec& spec);

// Q(s) = ((p+1) / (2 cosh^2((p-1)s/2)))^{1/(p-1)}, evaluated overflow-free.
double base_profile(double s, double p);
double base_profile_deriv(double s, double p);

// Q_c(s) = (c^2-1)^{1/(p-1)} Q(sqrt((c^2-1)/c^2) s).
double scaled_profile(double s, const SolitonSpec& spec);
double scaled_profile_deriv(double s, const SolitonSpec& spec);

// Peak value (c^2-1)^{1/(p-1)} ((p+1)/2)^{1/(p-1)}.
double soliton_amplitude(const SolitonSpec& spec);

// Profiles with |c| near 1 decay slowly in space and may not fit the box.
bool near_sonic(const SolitonSpec& spec);

// u_j = Q_c(x_j - x0), v = -c u, t = 0. Throws when the profile tail at the
// box edge exceeds 1e-12 (the box is too small for the profile).
State soliton_state(const GridPtr& grid, const SolitonSpec& spec);

// Sup-norm of c^2 Q_c'' - (c^2-1) Q_c + Q_c^p on the grid, with the second
// derivative taken spectrally.
double soliton_residual(const GridPtr& grid, const SolitonSpec& spec);

}  // namespace gib
