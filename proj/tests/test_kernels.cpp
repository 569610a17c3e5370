#include <doctest.h>

#include <cmath>
#include <vector>

#include "gib/kernels.hpp"
#include "gib/random_fields.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace gib;

namespace {

std::vector<double> random_vec(Rng& rng, std::size_t n) {
  std::vector<double> v(n);
  for (auto& x : v) x = rng.uniform_pm();
  return v;
}

}  // namespace

TEST_CASE("map kernels match the serial reference bitwise") {
  Rng rng(99);
  for (std::size_t n : {std::size_t(17), std::size_t(1024), std::size_t(9000)}) {
    const auto a = random_vec(rng, n);
    const auto b = random_vec(rng, n);
    std::vector<double> y1(n), y2(n);

    kernels::scaled_sum(a, 0.37, b, y1);
    kernels::serial::scaled_sum(a, 0.37, b, y2);
    CHECK(y1 == y2);

    kernels::signed_power(a, 2.5, y1);
    kernels::serial::signed_power(a, 2.5, y2);
    CHECK(y1 == y2);

    const auto k1 = random_vec(rng, n), k2 = random_vec(rng, n),
               k3 = random_vec(rng, n), k4 = random_vec(rng, n);
    kernels::rk4_combine(a, 0.01, k1, k2, k3, k4, y1);
    kernels::serial::rk4_combine(a, 0.01, k1, k2, k3, k4, y2);
    CHECK(y1 == y2);
  }
}

TEST_CASE("reductions agree with the serial reference") {
  Rng rng(7);
  const auto a = random_vec(rng, 20000);
  const auto b = random_vec(rng, 20000);
  const auto w = random_vec(rng, 20000);
  CHECK(kernels::sum(a) ==
        doctest::Approx(kernels::serial::sum(a)).epsilon(1e-13));
  CHECK(kernels::dot(a, b) ==
        doctest::Approx(kernels::serial::dot(a, b)).epsilon(1e-13));
  CHECK(kernels::dot3(w, a, b) ==
        doctest::Approx(kernels::serial::dot3(w, a, b)).epsilon(1e-13));
  CHECK(kernels::max_abs(a) == kernels::serial::max_abs(a));
}

TEST_CASE("chunked reductions do not depend on the thread count") {
  Rng rng(13);
  const auto a = random_vec(rng, 50001);
  const auto b = random_vec(rng, 50001);
#ifdef _OPENMP
  const int saved = omp_get_max_threads();
  omp_set_num_threads(1);
  const double s1 = kernels::sum(a);
  const double d1 = kernels::dot(a, b);
  omp_set_num_threads(saved > 1 ? saved : 4);
  const double s2 = kernels::sum(a);
  const double d2 = kernels::dot(a, b);
  omp_set_num_threads(saved);
  CHECK(s1 == s2);  // bitwise
  CHECK(d1 == d2);
#else
  CHECK(kernels::sum(a) == kernels::sum(a));
  CHECK(kernels::dot(a, b) == kernels::dot(a, b));
#endif
}

TEST_CASE("signed_power pointwise values") {
  std::vector<double> x = {-2.0, 0.0, 2.0};
  std::vector<double> y(3);
  kernels::signed_power(x, 3.0, y);
  CHECK(y[0] == -8.0);
  CHECK(y[1] == 0.0);
  CHECK(y[2] == 8.0);

  std::vector<double> x2 = {-4.0, 1.0};
  std::vector<double> y2(2);
  kernels::signed_power(x2, 1.5, y2);
  CHECK(y2[0] == doctest::Approx(-8.0));
  CHECK(y2[1] == doctest::Approx(1.0));

  // p = 2 keeps the sign, unlike plain squaring.
  std::vector<double> x3 = {-3.0, 3.0};
  std::vector<double> y3(2);
  kernels::signed_power(x3, 2.0, y3);
  CHECK(y3[0] == -9.0);
  CHECK(y3[1] == 9.0);
}

TEST_CASE("finiteness scans") {
  std::vector<double> x = {1.0, 2.0, 3.0};
  CHECK(kernels::all_finite(x));
  CHECK(kernels::first_non_finite(x) == kernels::npos);
  x[1] = std::nan("");
  CHECK_FALSE(kernels::all_finite(x));
  CHECK(kernels::first_non_finite(x) == 1);
}
