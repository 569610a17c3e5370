#include <doctest.h>

#include <cmath>

#include "gib/solitons.hpp"
#include "gib/spectral.hpp"

using namespace gib;

TEST_CASE("base profile closed-form values") {
  CHECK(base_profile(0.0, 2.0) == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(base_profile(0.0, 3.0) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(base_profile(40.0, 2.0) < 1e-15);
  CHECK(base_profile(-40.0, 2.0) < 1e-15);
  // no overflow far out
  CHECK(base_profile(1e6, 2.0) == 0.0);
}

TEST_CASE("scaled profile and amplitude law") {
  const double r2 = std::sqrt(2.0);
  CHECK(scaled_profile(0.0, {2.0, r2, 0.0}) ==
        doctest::Approx(1.5).epsilon(1e-12));
  CHECK(scaled_profile(0.0, {3.0, r2, 0.0}) ==
        doctest::Approx(r2).epsilon(1e-12));

  // near-sonic speeds give small but wide profiles
  const SolitonSpec slow{2.0, 1.01, 0.0};
  CHECK(scaled_profile(0.0, slow) ==
        doctest::Approx((1.01 * 1.01 - 1.0) * 1.5).epsilon(1e-12));
  CHECK_FALSE(near_sonic(slow));
  CHECK(near_sonic({2.0, 1.0005, 0.0}));

  for (double p : {2.0, 3.0, 3.5})
    for (double c : {1.2, -1.5, 2.0}) {
      const SolitonSpec spec{p, c, 0.0};
      const double amp = std::pow(c * c - 1.0, 1.0 / (p - 1.0)) *
                         std::pow((p + 1.0) / 2.0, 1.0 / (p - 1.0));
      CHECK(soliton_amplitude(spec) == doctest::Approx(amp).epsilon(1e-13));
      CHECK(scaled_profile(0.0, spec) ==
            doctest::Approx(amp).epsilon(1e-13));
    }

  CHECK_THROWS_WITH_AS(scaled_profile(0.0, {2.0, 1.0, 0.0}),
                       doctest::Contains("|c| must exceed 1"),
                       std::invalid_argument);
  CHECK_THROWS_AS(scaled_profile(0.0, {0.9, 1.5, 0.0}),
                  std::invalid_argument);
}

TEST_CASE("profile derivative matches a finite difference") {
  const SolitonSpec spec{2.7, 1.7, 0.0};
  for (double s : {-3.0, -0.4, 0.9, 5.0}) {
    const double h = 1e-6;
    const double fd =
        (scaled_profile(s + h, spec) - scaled_profile(s - h, spec)) / (2 * h);
    CHECK(scaled_profile_deriv(s, spec) ==
          doctest::Approx(fd).epsilon(1e-7));
  }
}

TEST_CASE("profile shape: positive, even, monotone away from the center") {
  const SolitonSpec spec{3.5, 1.2, 0.0};
  double prev = soliton_amplitude(spec);
  for (int i = 0; i <= 200; ++i) {
    const double s = i * 0.25;
    const double q = scaled_profile(s, spec);
    CHECK(q >= 0.0);
    CHECK(q == doctest::Approx(scaled_profile(-s, spec)).epsilon(1e-13));
    CHECK(q <= prev * (1.0 + 1e-13) + 1e-300);
    prev = q;
  }
}

TEST_CASE("elliptic-equation residual at spectral accuracy") {
  const auto g = make_grid(50.0, 1024);
  const double tol = 1e-10;
  CHECK(soliton_residual(g, {2.0, 1.5, 0.0}) < tol);
  CHECK(soliton_residual(g, {3.0, 2.0, 0.0}) < tol);
  CHECK(soliton_residual(g, {3.5, 1.2, 0.0}) < tol);
  for (double c : {-1.2, -1.5, -2.0, 1.2, 1.5, 2.0})
    CHECK(soliton_residual(g, {2.0, c, 0.0}) < tol);

  // refining the grid must not degrade the residual
  const auto g2 = make_grid(50.0, 2048);
  const double r1 = soliton_residual(g, {2.0, 1.5, 0.0});
  const double r2 = soliton_residual(g2, {2.0, 1.5, 0.0});
  CHECK(r2 < std::max(r1, 1e-11));
}

TEST_CASE("soliton state construction") {
  const auto g = make_grid(50.0, 1024);
  const State s = soliton_state(g, {2.0, 1.5, 0.0});
  for (int j = 0; j < 1024; ++j)
    CHECK(s.v[j] == -1.5 * s.u[j]);  // exact by construction
  CHECK(s.t == 0.0);

  const State off = soliton_state(g, {2.0, 1.5, 10.0});
  int argmax = 0;
  for (int j = 1; j < 1024; ++j)
    if (off.u[j] > off.u[argmax]) argmax = j;
  CHECK(argmax == g->nearest_node(10.0));

  const State left = soliton_state(g, {2.0, -1.5, 0.0});
  for (int j = 0; j < 1024; ++j) CHECK(left.v[j] == 1.5 * left.u[j]);

  // profile too wide for the box
  const auto tiny = make_grid(20.0, 256);
  CHECK_THROWS_WITH_AS(soliton_state(tiny, {2.0, 1.5, 0.0}),
                       doctest::Contains("half_length"),
                       std::invalid_argument);
}
