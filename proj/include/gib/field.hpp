#pragma once

#include <span>
#include <vector>

#include "gib/grid.hpp"

namespace gib {

// Real samples bound to a grid.
struct Field {
  GridPtr grid;
  std::vector<double> values;

  Field() = default;
  explicit Field(GridPtr g)
      : grid(std::move(g)), values(grid ? grid->n_points : 0, 0.0) {}
  Field(GridPtr g, std::vector<double> v)
      : grid(std::move(g)), values(std::move(v)) {}

  std::size_t size() const noexcept { return values.size(); }
  double& operator[](std::size_t i) noexcept { return values[i]; }
  double operator[](std::size_t i) const noexcept { return values[i]; }
  std::span<const double> span() const noexcept { return values; }
  std::span<double> span() noexcept { return values; }
};

void require_same_grid(const Field& a, const Field& b, const char* where);

}  // namespace gib
