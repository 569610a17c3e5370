#include "gib/random_fields.hpp"

#include <cmath>
#include <complex>
#include <vector>

#include "gib/fft.hpp"
#include "gib/kernels.hpp"

namespace gib {

Field random_band_limited(const GridPtr& grid, Rng& rng, double amplitude,
                          double k_cut_fraction, bool localized) {
  RealFft& fft = fft_for(grid->n_points);
  const int n_spec = fft.spectrum_size();
  const int m_cut = std::max(2, static_cast<int>(n_spec * k_cut_fraction));
  std::vector<std::complex<double>> spec(n_spec, 0.0);
  spec[0] = rng.uniform_pm();
  for (int m = 1; m < m_cut; ++m)
    spec[m] = std::complex<double>(rng.uniform_pm(), rng.uniform_pm());

  Field f(grid);
  fft.inverse(spec, f.span());

  if (localized) {
    const double w = grid->half_length / 5.5;
    for (int j = 0; j < grid->n_points; ++j) {
      const double x = grid->nodes[j] / w;
      f[j] *= std::exp(-x * x);
    }
  }
  const double m = kernels::max_abs(f.span());
  if (m > 0.0) {
    const double s = amplitude / m;
    for (auto& v : f.values) v *= s;
  }
  return f;
}

Field random_nonnegative(const GridPtr& grid, Rng& rng, double amplitude) {
  Field f = random_band_limited(grid, rng, 1.0);
  for (auto& v : f.values) v = v * v;
  const double m = kernels::max_abs(f.span());
  if (m > 0.0) {
    const double s = amplitude / m;
    for (auto& v : f.values) v *= s;
  }
  return f;
}

}  // namespace gib
