#pragma once

#include <span>
#include <vector>

#include "gib/model.hpp"
#include "gib/weights.hpp"

// Conserved quantities, weighted (virial) functionals and their exact
// semi-discrete time-derivative formulas, the canonical-variable identities,
// and the region norms used by the decay experiments.

namespace gib {

// H = 1/2 int (u^2 + v^2 + v_x^2) + 1/(p+1) int |u|^{p+1}; nonnegative.
double energy(const State& state, double p);

// P = int (u v + u_x v_x).
double momentum(const State& state);

// I = 1/2 int phi (u^2 + v^2 + v_x^2 + 2|u|^{p+1}/(p+1)), phi at (x+sigma t)/L.
double virial_I(const State& state, const WeightSpec& spec, double p);

// J = int phi (u v + u_x v_x).
double virial_J(const State& state, const WeightSpec& spec);

// N = 1/(2L) int phi' u v_x; requires a static weight.
double virial_N(const State& state, const WeightSpec& spec);

// dI/dt = sigma/(2L) int phi' (u^2 + v^2 + v_x^2 + 2|u|^{p+1}/(p+1))
//         - 1/L int phi' v (1-dxx)^{-1}(u + |u|^{p-1}u).
double dIdt_formula(const State& state, const WeightSpec& spec, double p);

// dJ/dt = sigma/L int phi' (u v + u_x v_x)
//         + 1/(2L) int phi' (u^2 + 2|u|^{p+1}/(p+1) - v^2 - v_x^2)
//         - 1/L int phi' u (1-dxx)^{-1}(u + |u|^{p-1}u).
double dJdt_formula(const State& state, const WeightSpec& spec, double p);

// dN/dt = 1/(2L) int phi' (v_x^2 - u^2 + u (1-dxx)^{-1} u)
//         + 1/(2L) int phi' (-|u|^{p+1} + u (1-dxx)^{-1}(|u|^{p-1}u));
// requires a static weight.
double dNdt_formula(const State& state, const WeightSpec& spec, double p);

// f with (1 - d_xx) f = u.
Field canonical_variable(const Field& u);

// Absolute difference between int phi' u^2 and
// int phi' (f^2 + 2 f_x^2 + f_xx^2) - 1/L^2 int phi''' f^2.
double canonical_identity_residual(const Field& u, const WeightSpec& spec);

// dI/dt split through the canonical variable: dI/dt = Qt + SQt + PQt with
//   Qt  = sigma/(2L) int phi' (f^2 + 2 f_x^2 + f_xx^2 + v^2 + v_x^2)
//         - 1/L int phi' v f,
//   SQt = -sigma/(2L^3) int phi''' f^2,
//   PQt = sigma/(L(p+1)) int phi' |u|^{p+1}
//         - 1/L int phi' v (1-dxx)^{-1}(|u|^{p-1}u).
struct VirialTerms {
  double Qt = 0.0;
  double SQt = 0.0;
  double PQt = 0.0;
  double sum() const { return Qt + SQt + PQt; }
};

VirialTerms qsqpq_split(const State& state, const WeightSpec& spec, double p);

// The four terms of -d/dt(J + N) for a static weight with phi' > 0:
//   term_v2   = 1/(2L) int phi' v^2
//   term_uHu  = 1/(2L) int phi' u (1-dxx)^{-1} u
//   term_up1  = (p-1)/(2(p+1)L) int phi' |u|^{p+1}
//   term_uHup = 1/(2L) int phi' u (1-dxx)^{-1}(|u|^{p-1}u)
// Each is nonnegative when u is single-signed.
struct LyapunovTerms {
  double term_v2 = 0.0;
  double term_uHu = 0.0;
  double term_up1 = 0.0;
  double term_uHup = 0.0;
  double sum() const { return term_v2 + term_uHu + term_up1 + term_uHup; }
};

LyapunovTerms lyapunov_terms(const State& state, const WeightSpec& spec,
                             double p);

// Raised when a comparison precondition (v <= w pointwise) does not hold,
// as opposed to the monotonicity property itself failing.
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// v <= w pointwise implies (1-dxx)^{-1} v <= (1-dxx)^{-1} w (up to 1e-12).
bool comparison_check(const Field& v, const Field& w);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

// sqrt( sum over nodes in the region of (u^2 + v^2 + v_x^2) dx ).
double region_norm(const State& state, std::span<const Interval> region);

// (-inf, -(1+a)t) united ((1+b)t, inf), clipped to the box; may be empty.
std::vector<Interval> exterior_region(double t, double a, double b,
                                      const Grid& box);

}  // namespace gib
