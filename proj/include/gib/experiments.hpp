#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gib/config.hpp"
#include "gib/diagnostics.hpp"
#include "gib/integrator.hpp"
#include "gib/record.hpp"

// Experiment drivers. Each experiment evolves (or synthesizes) states, emits
// DiagnosticsRecord rows, evaluates its pass/fail criteria against thresholds
// fixed here, and writes <output_path>.csv plus <output_path>.json.

namespace gib {

struct Criterion {
  std::string name;
  double value = 0.0;
  double threshold = 0.0;
  bool pass = false;
};

// Sentinel threshold for report-only criteria (recorded, never asserted).
inline constexpr double kReportOnly = -1e308;

struct ExperimentResult {
  std::vector<DiagnosticsRecord> records;
  std::vector<Criterion> criteria;
  bool pass = false;
  double runtime_seconds = 0.0;
  // Set when the solver aborted; partial records are still written.
  std::optional<std::string> error;
};

// Builds the initial state requested by the config (soliton, gaussian,
// two-soliton or file).
State build_initial_state(const ExperimentConfig& config);

// Runs the experiment and writes the CSV and JSON outputs. Solver aborts are
// reported through ExperimentResult::error after flushing partial output.
ExperimentResult run_experiment(const ExperimentConfig& config);

nlohmann::json summary_json(const ExperimentConfig& config,
                            const ExperimentResult& result);

struct SuiteEntry {
  std::string name;
  ExperimentConfig config;
};

// The fixed battery run by `gib-lab suite`, with per-experiment seeds and
// output paths under out_dir.
std::vector<SuiteEntry> suite_configs(const std::string& out_dir);

struct SuiteOutcome {
  bool pass = false;
  int failed_experiments = 0;
  std::vector<std::string> failed_criteria;  // "experiment/criterion"
};

// Runs the battery with at most max_jobs experiments in flight (values < 1
// mean one) and writes <out_dir>/suite-summary.json.
SuiteOutcome run_suite(const std::string& out_dir, int max_jobs = 1);

}  // namespace gib
