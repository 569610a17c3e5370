#pragma once

#include <memory>
#include <vector>

namespace gib {

// Uniform periodic grid on [-half_length, half_length) with the matching
// spectral wavenumbers k_m = pi*m/half_length.
struct Grid {
  double half_length = 0.0;
  int n_points = 0;
  double dx = 0.0;
  std::vector<double> nodes;
  // Full FFT ordering: 0, 1, ..., n/2-1, -n/2, ..., -1 (times pi/half_length).
  std::vector<double> wavenumbers;
  // Half-spectrum ordering used by the real transforms: m = 0..n/2.
  std::vector<double> rfft_wavenumbers;

  // Index of the node nearest to x (periodic).
  int nearest_node(double x) const;
};

using GridPtr = std::shared_ptr<const Grid>;

// Throws std::invalid_argument for non-positive half_length or odd/tiny
// n_points.
GridPtr make_grid(double half_length, int n_points);

inline bool same_grid(const Grid& a, const Grid& b) {
  return a.n_points == b.n_points && a.half_length == b.half_length;
}

}  // namespace gib
