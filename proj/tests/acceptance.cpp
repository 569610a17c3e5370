// Acceptance gate. Runs the full experiment battery in-process, checks every
// criterion at its pinned threshold, then exercises the CLI twice to confirm
// byte-reproducible outputs and the summary schema. Prints one line per
// criterion; the exit status is the number of failures.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <regex>
#include <sstream>
#include <string>

#include <json.hpp>

#include "gib/experiments.hpp"

namespace fs = std::filesystem;
using namespace gib;

namespace {

int g_failures = 0;

void line(const std::string& id, bool ok, const std::string& detail) {
  std::printf("[%s] %-34s %s\n", ok ? "PASS" : "FAIL", id.c_str(),
              detail.c_str());
  if (!ok) ++g_failures;
}

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

const Criterion* find(const ExperimentResult& r, const std::string& name) {
  for (const auto& c : r.criteria)
    if (c.name == name) return &c;
  return nullptr;
}

// Checks one named criterion of a finished experiment.
void crit(const std::string& id, const ExperimentResult& r,
          const std::string& name) {
  const Criterion* c = find(r, name);
  if (!c) {
    line(id, false, "criterion '" + name + "' missing");
    return;
  }
  line(id, c->pass, name + " = " + num(c->value) +
                        (c->threshold == kReportOnly
                             ? " (reported)"
                             : " vs " + num(c->threshold)));
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string mask_runtime(std::string text) {
  static const std::regex re("\"runtime_seconds\": [^,\n]*");
  return std::regex_replace(text, re, "\"runtime_seconds\": 0");
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  const fs::path out = fs::current_path() / "acceptance-out";
  fs::remove_all(out);
  fs::create_directories(out);

  // Run the battery in-process with the suite's exact configurations.
  std::map<std::string, ExperimentResult> res;
  for (const auto& entry : suite_configs((out / "runs").string()))
    res.emplace(entry.name, run_experiment(entry.config));

  // A1: closed-form profiles solve the elliptic equation at spectral accuracy.
  for (const auto& [name, label] :
       std::map<std::string, std::string>{
           {"soliton-validate-p2", "A1.residual_p2_c1.5"},
           {"soliton-validate-p3", "A1.residual_p3_c2"},
           {"soliton-validate-p3.5", "A1.residual_p3.5_c1.2"}}) {
    const auto& r = res.at(name);
    crit(label, r, "soliton_residual_sup");
    line(label + ".runtime", r.runtime_seconds < 1.0,
         num(r.runtime_seconds) + " s vs 1 s");
  }

  // A2: exact travel and fourth-order convergence.
  {
    const auto& r = res.at("travel");
    crit("A2.travel_error", r, "travel_sup_error");
    crit("A2.richardson_lo", r, "richardson_ratio_lo");
    crit("A2.richardson_hi", r, "richardson_ratio_hi");
    line("A2.runtime", r.runtime_seconds < 30.0,
         num(r.runtime_seconds) + " s vs 30 s");
  }

  // A3: energy and momentum conservation over a long run.
  for (const auto& [name, label] :
       std::map<std::string, std::string>{
           {"conservation-soliton", "A3.soliton"},
           {"conservation-gaussian", "A3.gaussian"}}) {
    const auto& r = res.at(name);
    crit(label + ".H_drift", r, "H_rel_drift");
    crit(label + ".P_drift", r, "P_rel_drift");
    line(label + ".runtime", r.runtime_seconds < 120.0,
         num(r.runtime_seconds) + " s vs 120 s");
  }

  // A4: the virial identity suite along a trajectory.
  {
    const auto& r = res.at("identity-check");
    crit("A4.sample_count", r, "sample_count");
    crit("A4.dIdt_fd", r, "dIdt_fd_vs_formula");
    crit("A4.dJdt_fd", r, "dJdt_fd_vs_formula");
    crit("A4.dNdt_fd", r, "dNdt_fd_vs_formula");
    crit("A4.dIdt_fd_moving", r, "dIdt_fd_vs_formula_moving");
    crit("A4.dJdt_fd_moving", r, "dJdt_fd_vs_formula_moving");
    crit("A4.qsqpq_split", r, "qsqpq_vs_dIdt_rel");
    crit("A4.qsqpq_split_moving", r, "qsqpq_vs_dIdt_rel_moving");
    crit("A4.lyapunov_sum", r, "lyapunov_sum_rel");
    line("A4.runtime", r.runtime_seconds < 120.0,
         num(r.runtime_seconds) + " s vs 120 s");

    // A5: canonical-variable identity over the random ensemble + soliton.
    crit("A5.canonical_identity", r, "canonical_identity_rel");
  }

  // A6: comparison principle and kernel positivity.
  {
    const auto& r = res.at("comparison-probe");
    crit("A6.comparison_trials", r, "comparison_pass_count");
    crit("A6.kernel_positivity", r, "kernel_positivity_min");
  }

  // A7a: positivity of each Lyapunov term for single-signed data.
  {
    const auto& r = res.at("positivity-probe");
    crit("A7a.lyapunov_min_term", r, "lyapunov_min_term");
    crit("A7a.uHu_floor", r, "uHu_canonical_floor_margin");
    crit("A7a.Qt_nonpositive", r, "Qt_max_drifting_frame");
    // A7b: sign-changing data, recorded only.
    crit("A7b.sign_changing_min", r, "sign_changing_min_uHup_reported");
  }

  // A8: exterior-cone decay of small data.
  {
    const auto& r = res.at("thm1-exterior");
    crit("A8.exterior_decay", r, "exterior_norm_ratio");
    crit("A8.spacetime_sum_u2", r, "spacetime_sum_tail_change_u2");
    crit("A8.spacetime_sum_v2", r, "spacetime_sum_tail_change_v2");
    crit("A8.spacetime_sum_dvx2", r, "spacetime_sum_tail_change_dvx2");
    line("A8.runtime", r.runtime_seconds < 600.0,
         num(r.runtime_seconds) + " s vs 600 s");
  }

  // A9: interior decay for the large soliton and for gaussian data.
  {
    const auto& r = res.at("thm2-interior-soliton");
    crit("A9.soliton_interior_decay", r, "interior_norm_ratio");
    line("A9.soliton_runtime", r.runtime_seconds < 600.0,
         num(r.runtime_seconds) + " s vs 600 s");
    const auto& rg = res.at("thm2-interior-gaussian");
    crit("A9.gaussian_interior_decay", rg, "interior_norm_ratio_vs_t1");
    crit("A9.gaussian_sum_monotone", rg, "integrability_sum_min_increment");
    crit("A9.gaussian_sum_converged", rg, "integrability_sum_tail_change");
    line("A9.gaussian_runtime", rg.runtime_seconds < 600.0,
         num(rg.runtime_seconds) + " s vs 600 s");
  }

  // A10: the CLI suite is byte-reproducible and writes schema-valid
  // summaries.
  if (cli.empty()) {
    line("A10.determinism", false, "no gib-lab path given");
  } else {
    const fs::path suite_dir = out / "suite";
    const fs::path first_dir = out / "suite-first";
    const std::string cmd1 = "\"" + cli + "\" suite --out \"" +
                             suite_dir.string() + "\" > \"" +
                             (out / "suite-log1.txt").string() + "\"";
    const int rc1 = std::system(cmd1.c_str());
    fs::copy(suite_dir, first_dir, fs::copy_options::recursive);
    const std::string cmd2 = "\"" + cli + "\" suite --out \"" +
                             suite_dir.string() + "\" > \"" +
                             (out / "suite-log2.txt").string() + "\"";
    const int rc2 = std::system(cmd2.c_str());
    line("A10.suite_exit", rc1 == 0 && rc2 == 0,
         "exit codes " + std::to_string(rc1) + ", " + std::to_string(rc2));

    bool identical = true;
    int compared = 0;
    std::string first_diff;
    for (const auto& e : fs::directory_iterator(first_dir)) {
      const fs::path again = suite_dir / e.path().filename();
      if (!fs::exists(again)) {
        identical = false;
        first_diff = e.path().filename().string() + " missing";
        break;
      }
      std::string a = slurp(e.path());
      std::string b = slurp(again);
      if (e.path().extension() == ".json") {
        a = mask_runtime(a);
        b = mask_runtime(b);
      }
      if (a != b) {
        identical = false;
        first_diff = e.path().filename().string();
        break;
      }
      ++compared;
    }
    line("A10.determinism", identical && compared > 0,
         identical ? std::to_string(compared) + " files byte-identical"
                   : "difference in " + first_diff);

    bool schema_ok = true;
    std::string schema_err;
    for (const auto& e : fs::directory_iterator(suite_dir)) {
      if (e.path().extension() != ".json" ||
          e.path().filename() == "suite-summary.json")
        continue;
      try {
        const nlohmann::json j = nlohmann::json::parse(slurp(e.path()));
        for (const char* key : {"experiment", "config_echo", "columns",
                                "criteria", "runtime_seconds"})
          if (!j.contains(key)) throw std::runtime_error(std::string(key));
        if (!j["experiment"].is_string() || !j["config_echo"].is_object() ||
            !j["runtime_seconds"].is_number() ||
            j["columns"].size() != kRecordColumns)
          throw std::runtime_error("field types");
        for (const auto& c : j["criteria"]) {
          if (!c.contains("name") || !c.contains("value") ||
              !c.contains("threshold") || !c.contains("pass"))
            throw std::runtime_error("criteria entry");
        }
      } catch (const std::exception& ex) {
        schema_ok = false;
        schema_err = e.path().filename().string() + ": " + ex.what();
        break;
      }
    }
    line("A10.summary_schema", schema_ok,
         schema_ok ? "all summaries valid" : schema_err);
  }

  std::printf("acceptance: %d failure%s\n", g_failures,
              g_failures == 1 ? "" : "s");
  return g_failures;
}
