#include "gib/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace gib {

int Grid::nearest_node(double x) const {
  double j = (x + half_length) / dx;
  long idx = std::lround(j);
  long n = n_points;
  idx = ((idx % n) + n) % n;
  return static_cast<int>(idx);
}

GridPtr make_grid(double half_length, int n_points) {
  if (!(half_length > 0.0))
    throw std::invalid_argument("make_grid: half_length must be positive");
  if (n_points < 16)
    throw std::invalid_argument("make_grid: n_points must be at least 16");
  if (n_points % 2 != 0)
    throw std::invalid_argument("make_grid: n_points must be even, got " +
                                std::to_string(n_points));

  auto g = std::make_shared<Grid>();
  g->half_length = half_length;
  g->n_points = n_points;
  g->dx = 2.0 * half_length / n_points;
  g->nodes.resize(n_points);
  for (int j = 0; j < n_points; ++j) g->nodes[j] = -half_length + j * g->dx;

  const double k0 = std::numbers::pi / half_length;
  g->wavenumbers.resize(n_points);
  for (int m = 0; m < n_points; ++m) {
    const int signed_m = (m <= n_points / 2 - 1) ? m : m - n_points;
    g->wavenumbers[m] = k0 * signed_m;
  }
  g->rfft_wavenumbers.resize(n_points / 2 + 1);
  for (int m = 0; m <= n_points / 2; ++m) g->rfft_wavenumbers[m] = k0 * m;
  return g;
}

}  // namespace gib
