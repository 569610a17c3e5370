#include "gib/spectral.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "gib/fft.hpp"
#include "gib/kernels.hpp"

namespace gib {

void require_same_grid(const Field& a, const Field& b, const char* where) {
  if (!a.grid || !b.grid || !same_grid(*a.grid, *b.grid))
    throw std::invalid_argument(std::string(where) +
                                ": fields live on different grids");
}

namespace {

void require_finite(const Field& f, const char* where) {
  if (!kernels::all_finite(f.span()))
    throw std::invalid_argument(std::string(where) + ": non-finite input");
}

}  // namespace

Field apply_multiplier(const Field& f,
                       const std::function<std::complex<double>(double)>& mult,
                       bool zero_nyquist) {
  const Grid& g = *f.grid;
  RealFft& fft = fft_for(g.n_points);
  std::vector<std::complex<double>> spec(fft.spectrum_size());
  fft.forward(f.span(), spec);
  for (int m = 0; m < fft.spectrum_size(); ++m)
    spec[m] *= mult(g.rfft_wavenumbers[m]);
  if (zero_nyquist) spec.back() = 0.0;
  Field out(f.grid);
  fft.inverse(spec, out.span());
  return out;
}

Field deriv(const Field& f, int order) {
  require_finite(f, "deriv");
  if (order < 1 || order > 3)
    throw std::invalid_argument("deriv: order must be 1, 2 or 3");
  switch (order) {
    case 1:
      return apply_multiplier(
          f, [](double k) { return std::complex<double>(0.0, k); }, true);
    case 2:
      return apply_multiplier(
          f, [](double k) { return std::complex<double>(-k * k, 0.0); },
          false);
    default:
      return apply_multiplier(
          f, [](double k) { return std::complex<double>(0.0, -k * k * k); },
          true);
  }
}

Field helmholtz_inverse(const Field& f) {
  require_finite(f, "helmholtz_inverse");
  return apply_multiplier(
      f, [](double k) { return std::complex<double>(1.0 / (1.0 + k * k), 0.0); },
      false);
}

double integrate(const Field& f) {
  require_finite(f, "integrate");
  return f.grid->dx * kernels::sum(f.span());
}

Field shift(const Field& f, double delta) {
  const Grid& g = *f.grid;
  RealFft& fft = fft_for(g.n_points);
  std::vector<std::complex<double>> spec(fft.spectrum_size());
  fft.forward(f.span(), spec);
  for (int m = 0; m + 1 < fft.spectrum_size(); ++m) {
    const double k = g.rfft_wavenumbers[m];
    spec[m] *= std::complex<double>(std::cos(k * delta), -std::sin(k * delta));
  }
  spec.back() *= std::cos(g.rfft_wavenumbers.back() * delta);
  Field out(f.grid);
  fft.inverse(spec, out.span());
  return out;
}

Field sample_function(const GridPtr& grid,
                      const std::function<double(double)>& fn) {
  Field out(grid);
  for (int j = 0; j < grid->n_points; ++j) {
    out[j] = fn(grid->nodes[j]);
    if (!std::isfinite(out[j]))
      throw std::invalid_argument(
          "sample_function: non-finite sample at node " + std::to_string(j) +
          " (x = " + std::to_string(grid->nodes[j]) + ")");
  }
  return out;
}

double integral_product(const Field& w, const Field& a) {
  require_same_grid(w, a, "integral_product");
  return w.grid->dx * kernels::dot(w.span(), a.span());
}

double integral_product(const Field& w, const Field& a, const Field& b) {
  require_same_grid(w, a, "integral_product");
  require_same_grid(w, b, "integral_product");
  return w.grid->dx * kernels::dot3(w.span(), a.span(), b.span());
}

double spectral_tail_fraction(const Field& f, double top_fraction) {
  RealFft& fft = fft_for(f.grid->n_points);
  std::vector<std::complex<double>> spec(fft.spectrum_size());
  fft.forward(f.span(), spec);
  double all = 0.0;
  for (const auto& c : spec) all = std::max(all, std::abs(c));
  if (all == 0.0) return 0.0;
  const int n_spec = fft.spectrum_size();
  const int start = static_cast<int>(std::ceil((1.0 - top_fraction) * n_spec));
  double tail = 0.0;
  for (int m = start; m < n_spec; ++m) tail = std::max(tail, std::abs(spec[m]));
  return tail / all;
}

Field two_thirds_filter(const Field& f) {
  const double k_max = f.grid->rfft_wavenumbers.back();
  const double cut = 2.0 / 3.0 * k_max;
  return apply_multiplier(
      f,
      [cut](double k) {
        return std::complex<double>(k <= cut ? 1.0 : 0.0, 0.0);
      },
      false);
}

}  // namespace gib
