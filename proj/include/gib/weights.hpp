#pragma once

#include <string>

#include "gib/field.hpp"

// Localized weight families phi((x + sigma*t - x_offset)/L) with analytic
// first and third derivatives. The returned derivative fields are those of
// the shape function itself; every 1/L chain factor is written explicitly at
// the point of use.

namespace gib {

enum class WeightShape {
  Tanh,
  MinusTanh,
  HalfOnePlusTanh,
  HalfOneMinusTanh,
  Sech2,
};

const char* to_string(WeightShape shape);
WeightShape weight_shape_from_string(const std::string& name);

struct WeightSpec {
  WeightShape shape = WeightShape::Tanh;
  double L = 20.0;
  double x_offset = 0.0;
  double drift_speed = 0.0;  // sigma
};

void validate(const WeightSpec& spec);

inline bool is_static(const WeightSpec& spec) { return spec.drift_speed == 0.0; }

// True when phi' > 0 everywhere for the shape.
bool positive_slope(WeightShape shape);

// Scalar evaluation of the shape and its derivatives at y.
double shape_value(WeightShape shape, double y);
double shape_d1(WeightShape shape, double y);
double shape_d3(WeightShape shape, double y);

struct WeightFields {
  Field phi;
  Field dphi;
  Field d3phi;
};

WeightFields weight_fields(const WeightSpec& spec, const GridPtr& grid,
                           double t);

}  // namespace gib
