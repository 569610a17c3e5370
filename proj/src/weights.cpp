#include "gib/weights.hpp"

#include <cmath>
#include <stdexcept>

namespace gib {

const char* to_string(WeightShape shape) {
  switch (shape) {
    case WeightShape::Tanh: return "tanh";
    case WeightShape::MinusTanh: return "minus-tanh";
    case WeightShape::HalfOnePlusTanh: return "half-one-plus-tanh";
    case WeightShape::HalfOneMinusTanh: return "half-one-minus-tanh";
    case WeightShape::Sech2: return "sech2";
  }
  return "?";
}

WeightShape weight_shape_from_string(const std::string& name) {
  if (name == "tanh") return WeightShape::Tanh;
  if (name == "minus-tanh") return WeightShape::MinusTanh;
  if (name == "half-one-plus-tanh") return WeightShape::HalfOnePlusTanh;
  if (name == "half-one-minus-tanh") return WeightShape::HalfOneMinusTanh;
  if (name == "sech2") return WeightShape::Sech2;
  throw std::invalid_argument(
      "unknown weight_shape '" + name +
      "' (expected tanh, minus-tanh, half-one-plus-tanh, "
      "half-one-minus-tanh or sech2)");
}

void validate(const WeightSpec& spec) {
  if (!(spec.L > 1.0))
    throw std::invalid_argument("weight_L must exceed 1, got " +
                                std::to_string(spec.L));
}

bool positive_slope(WeightShape shape) {
  return shape == WeightShape::Tanh || shape == WeightShape::HalfOnePlusTanh;
}

namespace {
double sech(double y) {
  const double e = std::exp(-std::abs(y));
  return 2.0 * e / (1.0 + e * e);
}
}  // namespace

double shape_value(WeightShape shape, double y) {
  switch (shape) {
    case WeightShape::Tanh: return std::tanh(y);
    case WeightShape::MinusTanh: return -std::tanh(y);
    case WeightShape::HalfOnePlusTanh: return 0.5 * (1.0 + std::tanh(y));
    case WeightShape::HalfOneMinusTanh: return 0.5 * (1.0 - std::tanh(y));
    case WeightShape::Sech2: {
      const double s = sech(y);
      return s * s;
    }
  }
  return 0.0;
}

double shape_d1(WeightShape shape, double y) {
  const double s = sech(y);
  const double s2 = s * s;
  switch (shape) {
    case WeightShape::Tanh: return s2;
    case WeightShape::MinusTanh: return -s2;
    case WeightShape::HalfOnePlusTanh: return 0.5 * s2;
    case WeightShape::HalfOneMinusTanh: return -0.5 * s2;
    case WeightShape::Sech2: return -2.0 * s2 * std::tanh(y);
  }
  return 0.0;
}

double shape_d3(WeightShape shape, double y) {
  const double s = sech(y);
  const double s2 = s * s;
  const double th = std::tanh(y);
  // tanh''' = 4 sech^2 tanh^2 - 2 sech^4
  const double tanh3 = 4.0 * s2 * th * th - 2.0 * s2 * s2;
  switch (shape) {
    case WeightShape::Tanh: return tanh3;
    case WeightShape::MinusTanh: return -tanh3;
    case WeightShape::HalfOnePlusTanh: return 0.5 * tanh3;
    case WeightShape::HalfOneMinusTanh: return -0.5 * tanh3;
    case WeightShape::Sech2:
      // (sech^2)''' = 16 sech^4 tanh - 8 sech^2 tanh^3
      return 16.0 * s2 * s2 * th - 8.0 * s2 * th * th * th;
  }
  return 0.0;
}

WeightFields weight_fields(const WeightSpec& spec, const GridPtr& grid,
                           double t) {
  validate(spec);
  WeightFields w{Field(grid), Field(grid), Field(grid)};
  const double shift = spec.drift_speed * t - spec.x_offset;
  for (int j = 0; j < grid->n_points; ++j) {
    const double y = (grid->nodes[j] + shift) / spec.L;
    w.phi[j] = shape_value(spec.shape, y);
    w.dphi[j] = shape_d1(spec.shape, y);
    w.d3phi[j] = shape_d3(spec.shape, y);
  }
  return w;
}

}  // namespace gib
