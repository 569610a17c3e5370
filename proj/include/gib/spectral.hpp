#pragma once

#include <complex>
#include <functional>

#include "gib/field.hpp"

// Spectral operators on periodic fields. All multipliers act on the
// half-spectrum; odd multipliers zero the Nyquist bin so real inputs map to
// real outputs without an asymmetric leftover mode.

namespace gib {

// Spectral derivative of the given order (1, 2 or 3).
Field deriv(const Field& f, int order);

// (1 - d_xx)^{-1}, the multiplier 1/(1+k^2).
Field helmholtz_inverse(const Field& f);

// Rectangle-rule quadrature dx * sum(values); spectrally accurate for smooth
// periodic integrands.
double integrate(const Field& f);

// f(x - delta) via the phase multiplier; the Nyquist bin gets the cosine
// factor, which is the unique real choice.
Field shift(const Field& f, double delta);

// Pointwise evaluation at the nodes; throws naming the node on a non-finite
// sample.
Field sample_function(const GridPtr& grid,
                      const std::function<double(double)>& fn);

// dx * sum(w*a) and dx * sum(w*a*b).
double integral_product(const Field& w, const Field& a);
double integral_product(const Field& w, const Field& a, const Field& b);

// Apply an arbitrary half-spectrum multiplier. zero_nyquist should be set for
// odd multipliers.
Field apply_multiplier(const Field& f,
                       const std::function<std::complex<double>(double)>& mult,
                       bool zero_nyquist);

// max |u_hat| over the top `top_fraction` of modes, relative to max |u_hat|
// overall; 0 for the zero field.
double spectral_tail_fraction(const Field& f, double top_fraction = 0.1);

// Zero all modes above two thirds of the Nyquist wavenumber.
Field two_thirds_filter(const Field& f);

}  // namespace gib
