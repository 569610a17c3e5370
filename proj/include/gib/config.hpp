#pragma once

#include <cstdint>
#include <string>

#include "gib/model.hpp"
#include "gib/solitons.hpp"
#include "gib/weights.hpp"

#include <json.hpp>

namespace gib {

enum class ExperimentKind {
  SolitonValidate,
  Travel,
  Conservation,
  IdentityCheck,
  Thm1Exterior,
  Thm2Interior,
  PositivityProbe,
  ComparisonProbe,
  NormEquivalenceProbe,
};

const char* to_string(ExperimentKind kind);
ExperimentKind experiment_from_string(const std::string& name);

enum class InitialCondition { Soliton, Gaussian, TwoSoliton, File };

const char* to_string(InitialCondition ic);
InitialCondition ic_from_string(const std::string& name);

// Flat key-value configuration of one experiment. Unknown keys are rejected:
// configs are specifications of record and a typo must not silently change a
// run.
struct ExperimentConfig {
  ExperimentKind experiment = ExperimentKind::Conservation;
  ModelParams model;                 // p, half_length, n_points, dt, t_final
  SolitonSpec soliton{2.0, 1.5, 0.0};
  SolitonSpec soliton2{2.0, -1.5, 20.0};  // second pulse of two-soliton data
  WeightSpec weight{WeightShape::Tanh, 20.0, 0.0, 0.0};
  InitialCondition ic = InitialCondition::Soliton;
  double amplitude = 0.01;
  double width = 5.0;
  double center = 0.0;
  std::string ic_file;
  double a = 1.0;  // cone openings
  double b = 1.0;
  double region_lo = -5.0;
  double region_hi = 5.0;
  int sample_every = 100;
  std::uint64_t seed = 0;
  int trials = 100;
  bool richardson = false;
  std::string output_path = "gib-out";  // prefix: writes <prefix>.csv, <prefix>.json
};

// Strict parse: unknown keys and constraint violations throw
// std::invalid_argument naming the offending key.
ExperimentConfig parse_config(const nlohmann::json& doc);
ExperimentConfig parse_config_text(const std::string& text);
ExperimentConfig parse_config_file(const std::string& path);

// The fully resolved configuration (defaults filled in), as written into the
// JSON summary.
nlohmann::json config_echo(const ExperimentConfig& config);

}  // namespace gib
