#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "gib/field.hpp"

// The first-order form of the generalized improved Boussinesq equation,
//
//   u_t = v_x,
//   v_t = (1 - d_xx)^{-1} (u + |u|^{p-1} u)_x,
//
// with p > 1. The v equation's multiplier ik/(1+k^2) is bounded by 1/2, so
// the semi-discrete system is only mildly stiff.

namespace gib {

struct ModelParams {
  double p = 2.0;
  double half_length = 50.0;
  int n_points = 1024;
  double dt = 0.01;
  double t_final = 10.0;
  // Optional 2/3-rule filter on the nonlinearity (integer p only).
  bool dealias = false;
};

// Throws std::invalid_argument naming the offending field.
void validate(const ModelParams& params);

struct State {
  Field u;
  Field v;
  double t = 0.0;
};

struct StateDerivative {
  Field du;
  Field dv;
};

// Raised when the vector field or a time step produces a non-finite value.
struct BlowUpError : std::runtime_error {
  double t;
  BlowUpError(double t_, const std::string& what)
      : std::runtime_error(what), t(t_) {}
};

// sign(u)*|u|^p pointwise; zero maps to zero for every p > 1.
Field signed_power(const Field& u, double p);

// |u|^p pointwise.
Field abs_power(const Field& u, double p);

StateDerivative rhs(const State& state, const ModelParams& params);

struct FiniteReport {
  bool finite = true;
  double sup_u = 0.0;
  double sup_v = 0.0;
  double boundary_u = 0.0;  // |u| at the wrap node
  double boundary_v = 0.0;
  std::size_t first_bad_index_u = static_cast<std::size_t>(-1);
  std::size_t first_bad_index_v = static_cast<std::size_t>(-1);
};

FiniteReport check_finite(const State& state);

}  // namespace gib
