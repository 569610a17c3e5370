#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "gib/fft.hpp"
#include "gib/kernels.hpp"
#include "gib/random_fields.hpp"
#include "gib/solitons.hpp"
#include "gib/spectral.hpp"

using namespace gib;
namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("model parameter validation names the offending field") {
  ModelParams p;
  CHECK_NOTHROW(validate(p));
  p.p = 0.5;
  CHECK_THROWS_WITH_AS(validate(p), doctest::Contains("p must exceed 1"),
                       std::invalid_argument);
  p.p = 2.0;
  p.n_points = 15;
  CHECK_THROWS_WITH_AS(validate(p), doctest::Contains("n_points"),
                       std::invalid_argument);
  p.n_points = 1024;
  p.dt = 20.0;
  CHECK_THROWS_AS(validate(p), std::invalid_argument);
  p.dt = 0.01;
  p.dealias = true;
  p.p = 2.5;
  CHECK_THROWS_WITH_AS(validate(p), doctest::Contains("integer"),
                       std::invalid_argument);
}

TEST_CASE("zero is a fixed point of the vector field") {
  const auto g = make_grid(50.0, 64);
  State s{Field(g), Field(g), 0.0};
  ModelParams mp;
  mp.n_points = 64;
  const StateDerivative d = rhs(s, mp);
  CHECK(kernels::max_abs(d.du.span()) == 0.0);
  CHECK(kernels::max_abs(d.dv.span()) == 0.0);
}

TEST_CASE("vector field on the exact traveling wave") {
  // For the soliton pair, du = -c Qc' and dv = c^2 Qc' since
  // u + u^p = c^2 (1 - d_xx) Qc.
  const auto g = make_grid(50.0, 1024);
  const SolitonSpec spec{2.0, 1.5, 0.0};
  const State s = soliton_state(g, spec);
  ModelParams mp;
  const StateDerivative d = rhs(s, mp);
  double e_du = 0.0, e_dv = 0.0;
  for (int j = 0; j < g->n_points; ++j) {
    const double qp = scaled_profile_deriv(g->nodes[j], spec);
    e_du = std::max(e_du, std::abs(d.du[j] + spec.c * qp));
    e_dv = std::max(e_dv, std::abs(d.dv[j] - spec.c * spec.c * qp));
  }
  CHECK(e_du < 1e-8);
  CHECK(e_dv < 1e-8);
}

TEST_CASE("linear dispersion of small cosine data") {
  // For u = eps cos(kx), v = 0: dv = -eps k/(1+k^2) sin(kx) + O(eps^2).
  const auto g = make_grid(kPi, 64);
  const double eps = 1e-6;
  const double k = 3.0;
  State s{sample_function(g, [&](double x) { return eps * std::cos(k * x); }),
          Field(g), 0.0};
  ModelParams mp;
  mp.n_points = 64;
  const StateDerivative d = rhs(s, mp);
  double err = 0.0;
  for (int j = 0; j < 64; ++j) {
    const double expect =
        -eps * k / (1.0 + k * k) * std::sin(k * g->nodes[j]);
    err = std::max(err, std::abs(d.dv[j] - expect));
  }
  CHECK(err < 1e-11);  // the neglected nonlinear term is O(eps^2 k)
}

TEST_CASE("the dv multiplier never exceeds half the source spectrum") {
  const auto g = make_grid(50.0, 256);
  Rng rng(3);
  State s{random_band_limited(g, rng), random_band_limited(g, rng), 0.0};
  ModelParams mp;
  mp.n_points = 256;
  const StateDerivative d = rhs(s, mp);

  Field w(g);
  kernels::add_signed_power(s.u.span(), mp.p, w.span());
  RealFft& fft = fft_for(256);
  std::vector<std::complex<double>> sw(fft.spectrum_size()),
      sd(fft.spectrum_size());
  fft.forward(w.span(), sw);
  fft.forward(d.dv.span(), sd);
  for (int m = 0; m < fft.spectrum_size(); ++m)
    CHECK(std::abs(sd[m]) <= 0.5 * std::abs(sw[m]) + 1e-12);
}

TEST_CASE("parity is preserved by the vector field") {
  const auto g = make_grid(50.0, 256);
  Rng rng(17);
  const Field base_u = random_band_limited(g, rng);
  const Field base_v = random_band_limited(g, rng);
  const int n = g->n_points;
  // symmetrize u (even) and antisymmetrize v (odd) about x = 0
  State s{Field(g), Field(g), 0.0};
  for (int j = 0; j < n; ++j) {
    const int jr = (n - j) % n;
    s.u[j] = 0.5 * (base_u[j] + base_u[jr]);
    s.v[j] = 0.5 * (base_v[j] - base_v[jr]);
  }
  ModelParams mp;
  mp.n_points = 256;
  const StateDerivative d = rhs(s, mp);
  double e_even = 0.0, e_odd = 0.0;
  for (int j = 0; j < n; ++j) {
    const int jr = (n - j) % n;
    e_even = std::max(e_even, std::abs(d.du[j] - d.du[jr]));
    e_odd = std::max(e_odd, std::abs(d.dv[j] + d.dv[jr]));
  }
  CHECK(e_even < 1e-12);
  CHECK(e_odd < 1e-12);
}

TEST_CASE("check_finite reports") {
  const auto g = make_grid(50.0, 1024);
  State zero{Field(g), Field(g), 0.0};
  CHECK(check_finite(zero).finite);

  const SolitonSpec spec{2.0, 1.5, 0.0};
  const State sol = soliton_state(g, spec);
  const FiniteReport r = check_finite(sol);
  CHECK(r.finite);
  CHECK(r.sup_u == doctest::Approx(soliton_amplitude(spec)).epsilon(1e-12));
  CHECK(r.boundary_u < 1e-12);

  State bad = sol;
  bad.u[123] = std::nan("");
  const FiniteReport rb = check_finite(bad);
  CHECK_FALSE(rb.finite);
  CHECK(rb.first_bad_index_u == 123);
}

TEST_CASE("a non-finite state aborts the vector field with a time stamp") {
  const auto g = make_grid(50.0, 64);
  State s{Field(g), Field(g), 3.25};
  s.u[10] = std::numeric_limits<double>::infinity();
  ModelParams mp;
  mp.n_points = 64;
  try {
    rhs(s, mp);
    FAIL("expected BlowUpError");
  } catch (const BlowUpError& e) {
    CHECK(e.t == 3.25);
  }
}

TEST_CASE("two-thirds dealiasing clips the nonlinearity spectrum") {
  const auto g = make_grid(50.0, 256);
  Rng rng(11);
  State s{random_band_limited(g, rng, 1.0, 0.6, false), Field(g), 0.0};
  ModelParams mp;
  mp.n_points = 256;
  mp.dealias = true;
  const StateDerivative d = rhs(s, mp);
  CHECK(spectral_tail_fraction(d.dv, 1.0 / 3.0) < 1e-13);
}
