// gib-lab: run, validate, or batch the gIB experiments.
//
// Exit codes: 0 all criteria pass, 1 criteria failed, 2 solver abort,
// 3 configuration or usage error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gib/experiments.hpp"

namespace {

void print_criteria(const gib::ExperimentResult& result) {
  for (const auto& c : result.criteria) {
    const bool informational = c.threshold == gib::kReportOnly;
    std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name
              << "  value=" << c.value;
    if (!informational) std::cout << "  threshold=" << c.threshold;
    std::cout << "\n";
  }
}

int finish(const gib::ExperimentResult& result) {
  if (result.error) {
    std::cerr << "solver abort: " << *result.error << "\n";
    return 2;
  }
  if (!result.pass) {
    nlohmann::json failures = nlohmann::json::array();
    for (const auto& c : result.criteria)
      if (!c.pass) failures.push_back(c.name);
    std::cout << nlohmann::json{{"failures", failures}}.dump() << "\n";
    return 1;
  }
  return 0;
}

int suite_jobs_from_env() {
  const char* env = std::getenv("GIB_LAB_THREADS");
  if (!env) return 1;
  const int v = std::atoi(env);
  return v > 0 ? v : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pseudospectral lab for the generalized improved Boussinesq system"};
  app.require_subcommand(1);

  std::string config_path;
  auto* run = app.add_subcommand("run", "run one experiment from a config file");
  run->add_option("config", config_path, "path to a JSON config")->required();

  std::string validate_path;
  auto* validate =
      app.add_subcommand("validate", "parse and validate a config file");
  validate->add_option("config", validate_path, "path to a JSON config")
      ->required();

  std::string out_dir = "suite-out";
  auto* suite =
      app.add_subcommand("suite", "run the full acceptance experiment battery");
  suite->add_option("--out", out_dir, "output directory (default suite-out)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      const gib::ExperimentConfig config =
          gib::parse_config_file(config_path);
      // Refuse to clobber the config file with the summary.
      std::error_code ec;
      const auto cfg = std::filesystem::weakly_canonical(config_path, ec);
      for (const char* ext : {".csv", ".json"}) {
        const auto out = std::filesystem::weakly_canonical(
            config.output_path + ext, ec);
        if (!cfg.empty() && cfg == out) {
          std::cerr << "error: output_path would overwrite the config file "
                    << config_path << "; pick another prefix\n";
          return 3;
        }
      }
      const gib::ExperimentResult result = gib::run_experiment(config);
      print_criteria(result);
      std::cout << "outputs: " << config.output_path << ".csv, "
                << config.output_path << ".json\n";
      return finish(result);
    }
    if (validate->parsed()) {
      const gib::ExperimentConfig config =
          gib::parse_config_file(validate_path);
      std::cout << "valid\n" << gib::config_echo(config).dump(2) << "\n";
      return 0;
    }
    // suite
    const int jobs = suite_jobs_from_env();
    const auto entries = gib::suite_configs(out_dir);
    const gib::SuiteOutcome outcome = gib::run_suite(out_dir, jobs);
    // Re-read the per-experiment summaries for ordered reporting.
    for (const auto& entry : entries) {
      std::ifstream in(entry.config.output_path + ".json");
      nlohmann::json j;
      in >> j;
      bool pass = true;
      for (const auto& c : j["criteria"])
        if (!c["pass"].get<bool>()) pass = false;
      if (j.contains("error")) pass = false;
      std::cout << (pass ? "[PASS] " : "[FAIL] ") << entry.name << "\n";
    }
    if (!outcome.pass) {
      nlohmann::json failures = nlohmann::json::array();
      for (const auto& f : outcome.failed_criteria) failures.push_back(f);
      std::cout << nlohmann::json{{"failures", failures}}.dump() << "\n";
      return 1;
    }
    std::cout << "suite: all experiments passed\n";
    return 0;
  } catch (const gib::BlowUpError& e) {
    std::cerr << "solver abort: " << e.what() << "\n";
    return 2;
  } catch (const gib::AliasingError& e) {
    std::cerr << "solver abort: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
