#include "gib/experiments.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <thread>

#include "gib/kernels.hpp"
#include "gib/random_fields.hpp"
#include "gib/spectral.hpp"

namespace gib {

namespace {

constexpr double kDtCheck = 1e-3;
constexpr double kTinyDenom = 1e-30;

double rel_gap(double lhs, double rhs, double extra_scale = 0.0) {
  const double denom =
      std::max({std::abs(lhs), std::abs(rhs), extra_scale, kTinyDenom});
  return std::abs(lhs - rhs) / denom;
}

Criterion at_most(const std::string& name, double value, double threshold) {
  return {name, value, threshold, value <= threshold};
}

Criterion at_least(const std::string& name, double value, double threshold) {
  return {name, value, threshold, value >= threshold};
}

Criterion reported(const std::string& name, double value) {
  return {name, value, kReportOnly, true};
}

double sech(double y) {
  const double e = std::exp(-std::abs(y));
  return 2.0 * e / (1.0 + e * e);
}

// ---------------------------------------------------------------------------
// Record assembly

struct ObserverSetup {
  WeightSpec primary;    // I, J, dI/dt, dJ/dt, Qt/SQt/PQt
  WeightSpec companion;  // static, phi' > 0: N, dN/dt, Lyapunov terms
  double p = 2.0;
  double a = 1.0;
  double b = 1.0;
  Interval interior{-5.0, 5.0};
  ModelParams model;
  bool with_fd = true;
  bool probe_mode = false;  // t is a trial index, not a physical time
};

ObserverSetup make_observer(const ExperimentConfig& c) {
  ObserverSetup o;
  o.primary = c.weight;
  o.companion = (is_static(c.weight) && positive_slope(c.weight.shape))
                    ? c.weight
                    : WeightSpec{WeightShape::Tanh, 20.0, 0.0, 0.0};
  o.p = c.model.p;
  o.a = c.a;
  o.b = c.b;
  o.interior = {c.region_lo, c.region_hi};
  o.model = c.model;
  return o;
}

DiagnosticsRecord make_record(const State& s, const ObserverSetup& o) {
  DiagnosticsRecord r;
  r.t = s.t;
  r.H = energy(s, o.p);
  r.P = momentum(s);
  r.I = virial_I(s, o.primary, o.p);
  r.J = virial_J(s, o.primary);
  r.N = virial_N(s, o.companion);
  r.dIdt_formula = dIdt_formula(s, o.primary, o.p);
  r.dJdt_formula = dJdt_formula(s, o.primary, o.p);
  r.dNdt_formula = dNdt_formula(s, o.companion, o.p);

  if (o.with_fd) {
    const State sp = rk4_step(s, kDtCheck, o.model);
    const State sm = rk4_step(s, -kDtCheck, o.model);
    const double inv = 1.0 / (2.0 * kDtCheck);
    r.dIdt_fd = (virial_I(sp, o.primary, o.p) - virial_I(sm, o.primary, o.p)) * inv;
    r.dJdt_fd = (virial_J(sp, o.primary) - virial_J(sm, o.primary)) * inv;
    r.dNdt_fd = (virial_N(sp, o.companion) - virial_N(sm, o.companion)) * inv;
  }

  const VirialTerms vt = qsqpq_split(s, o.primary, o.p);
  r.Qt = vt.Qt;
  r.SQt = vt.SQt;
  r.PQt = vt.PQt;

  const LyapunovTerms lt = lyapunov_terms(s, o.companion, o.p);
  r.lyap_v2 = lt.term_v2;
  r.lyap_uHu = lt.term_uHu;
  r.lyap_up1 = lt.term_up1;
  r.lyap_uHup = lt.term_uHup;

  const Interval interior[1] = {o.interior};
  r.norm_interior = region_norm(s, interior);
  if (o.probe_mode) {
    const Interval whole[1] = {
        {-s.u.grid->half_length, s.u.grid->half_length}};
    r.norm_exterior = region_norm(s, whole);
  } else {
    const auto ext = exterior_region(std::max(s.t, 0.0), o.a, o.b, *s.u.grid);
    r.norm_exterior = ext.empty() ? 0.0 : region_norm(s, ext);
  }
  r.sup_u = kernels::max_abs(s.u.span());
  r.tail_spec = spectral_tail_fraction(s.u);
  return r;
}

// ---------------------------------------------------------------------------
// Initial data

Field gaussian_field(const GridPtr& grid, double amplitude, double width,
                     double center) {
  return sample_function(grid, [&](double x) {
    const double y = (x - center) / width;
    return amplitude * std::exp(-y * y);
  });
}

State load_state_file(const GridPtr& grid, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("ic_file: cannot open " + path);
  State s;
  s.t = 0.0;
  s.u = Field(grid);
  s.v = Field(grid);
  std::string line;
  int j = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (j >= grid->n_points)
      throw std::invalid_argument("ic_file: more rows than n_points in " +
                                  path);
    double u, v;
    if (std::sscanf(line.c_str(), "%lf,%lf", &u, &v) != 2)
      throw std::invalid_argument("ic_file: bad row " + std::to_string(j) +
                                  " in " + path);
    s.u[j] = u;
    s.v[j] = v;
    ++j;
  }
  if (j != grid->n_points)
    throw std::invalid_argument("ic_file: expected " +
                                std::to_string(grid->n_points) + " rows, got " +
                                std::to_string(j));
  if (!check_finite(s).finite)
    throw std::invalid_argument("ic_file: non-finite sample in " + path);
  return s;
}

}  // namespace

State build_initial_state(const ExperimentConfig& c) {
  const GridPtr grid = make_grid(c.model.half_length, c.model.n_points);
  switch (c.ic) {
    case InitialCondition::Soliton:
      return soliton_state(grid, c.soliton);
    case InitialCondition::Gaussian: {
      State s;
      s.t = 0.0;
      s.u = gaussian_field(grid, c.amplitude, c.width, c.center);
      s.v = Field(grid);
      return s;
    }
    case InitialCondition::TwoSoliton: {
      State s1 = soliton_state(grid, c.soliton);
      const State s2 = soliton_state(grid, c.soliton2);
      kernels::scaled_sum(s1.u.span(), 1.0, s2.u.span(), s1.u.span());
      kernels::scaled_sum(s1.v.span(), 1.0, s2.v.span(), s1.v.span());
      return s1;
    }
    case InitialCondition::File:
      return load_state_file(grid, c.ic_file);
  }
  throw std::logic_error("build_initial_state: unhandled ic");
}

namespace {

// ---------------------------------------------------------------------------
// Drivers

void run_soliton_validate(const ExperimentConfig& c, ExperimentResult& r) {
  const GridPtr grid = make_grid(c.model.half_length, c.model.n_points);
  const SolitonSpec& spec = c.soliton;

  const double residual = soliton_residual(grid, spec);
  r.criteria.push_back(at_most("soliton_residual_sup", residual, 1e-10));

  const double amp = soliton_amplitude(spec);
  r.criteria.push_back(at_most(
      "amplitude_law_rel_err",
      std::abs(scaled_profile(0.0, spec) - amp) / amp, 1e-12));

  double asym = 0.0, min_val = amp, worst_mono = 0.0;
  double prev = amp;
  for (int i = 0; i <= 400; ++i) {
    const double s = i * c.model.half_length / 400.0;
    const double q = scaled_profile(s, spec);
    asym = std::max(asym, std::abs(q - scaled_profile(-s, spec)));
    min_val = std::min(min_val, q);
    worst_mono = std::max(worst_mono, q - prev);  // positive = grew outward
    prev = q;
  }
  r.criteria.push_back(at_most("evenness_sup_err", asym / amp, 1e-12));
  r.criteria.push_back(at_least("profile_min", min_val, 0.0));
  r.criteria.push_back(at_most("radial_monotonicity_defect", worst_mono, 0.0));

  // One record of the sampled pair; assembled directly so tail size is
  // reported rather than enforced here.
  State s;
  s.t = 0.0;
  s.u = sample_function(
      grid, [&](double x) { return scaled_profile(x - spec.x0, spec); });
  s.v = Field(grid);
  kernels::scaled_sum(s.v.span(), -spec.c, s.u.span(), s.v.span());
  ObserverSetup o = make_observer(c);
  o.with_fd = false;
  r.records.push_back(make_record(s, o));
}

struct TravelRun {
  double sup_error = 0.0;
};

TravelRun travel_once(const ExperimentConfig& c, double dt,
                      ExperimentResult* collect) {
  ModelParams mp = c.model;
  mp.dt = dt;
  const State init = build_initial_state(c);
  Schedule sched{c.sample_every, mp.t_final, dt};
  const ObserverSetup o = make_observer(c);
  State final = init;
  evolve(init, mp, sched, [&](const State& s) {
    if (collect) collect->records.push_back(make_record(s, o));
    final = s;
  });
  const double delta = c.soliton.c * mp.t_final;
  const Field u_ref = shift(init.u, delta);
  const Field v_ref = shift(init.v, delta);
  TravelRun out;
  for (std::size_t j = 0; j < u_ref.size(); ++j) {
    out.sup_error = std::max(out.sup_error, std::abs(final.u[j] - u_ref[j]));
    out.sup_error = std::max(out.sup_error, std::abs(final.v[j] - v_ref[j]));
  }
  return out;
}

void run_travel(const ExperimentConfig& c, ExperimentResult& r) {
  const TravelRun base = travel_once(c, c.model.dt, &r);
  r.criteria.push_back(at_most("travel_sup_error", base.sup_error, 1e-6));
  if (c.richardson) {
    const TravelRun half = travel_once(c, c.model.dt / 2.0, nullptr);
    const double ratio = base.sup_error / std::max(half.sup_error, kTinyDenom);
    r.criteria.push_back(at_least("richardson_ratio_lo", ratio, 12.0));
    r.criteria.push_back(at_most("richardson_ratio_hi", ratio, 20.0));
  }
}

void run_conservation(const ExperimentConfig& c, ExperimentResult& r) {
  const State init = build_initial_state(c);
  const ObserverSetup o = make_observer(c);
  Schedule sched{c.sample_every, c.model.t_final, c.model.dt};
  double h0 = 0.0, p0 = 0.0, h_drift = 0.0, p_drift = 0.0;
  bool first = true;
  evolve(init, c.model, sched, [&](const State& s) {
    r.records.push_back(make_record(s, o));
    const DiagnosticsRecord& rec = r.records.back();
    if (first) {
      h0 = rec.H;
      p0 = rec.P;
      first = false;
      return;
    }
    h_drift = std::max(h_drift, std::abs(rec.H - h0) / std::abs(h0));
    p_drift = std::max(p_drift,
                       std::abs(rec.P - p0) / std::max(1.0, std::abs(p0)));
  });
  r.criteria.push_back(at_most("H_rel_drift", h_drift, 1e-8));
  r.criteria.push_back(at_most("P_rel_drift", p_drift, 1e-8));
}

void run_identity_check(const ExperimentConfig& c, ExperimentResult& r) {
  const State init = build_initial_state(c);
  const ObserverSetup o = make_observer(c);
  const WeightSpec moving{WeightShape::Tanh, 10.0, 0.0, -(1.0 + c.b)};
  Schedule sched{c.sample_every, c.model.t_final, c.model.dt};

  double fd_i = 0.0, fd_j = 0.0, fd_n = 0.0;
  double fd_i_mov = 0.0, fd_j_mov = 0.0;
  double qsqpq_rel = 0.0, qsqpq_rel_mov = 0.0, lyap_rel = 0.0;

  evolve(init, c.model, sched, [&](const State& s) {
    r.records.push_back(make_record(s, o));
    const DiagnosticsRecord& rec = r.records.back();
    fd_i = std::max(fd_i, std::abs(rec.dIdt_fd - rec.dIdt_formula));
    fd_j = std::max(fd_j, std::abs(rec.dJdt_fd - rec.dJdt_formula));
    fd_n = std::max(fd_n, std::abs(rec.dNdt_fd - rec.dNdt_formula));

    const double qsum = rec.Qt + rec.SQt + rec.PQt;
    qsqpq_rel = std::max(
        qsqpq_rel,
        rel_gap(qsum, rec.dIdt_formula,
                std::abs(rec.Qt) + std::abs(rec.SQt) + std::abs(rec.PQt)));

    const double dj = dJdt_formula(s, o.companion, o.p);
    const double dn = rec.dNdt_formula;
    const double lsum =
        rec.lyap_v2 + rec.lyap_uHu + rec.lyap_up1 + rec.lyap_uHup;
    lyap_rel = std::max(
        lyap_rel, rel_gap(lsum, -(dj + dn),
                          std::abs(rec.lyap_v2) + std::abs(rec.lyap_uHu) +
                              std::abs(rec.lyap_up1) + std::abs(rec.lyap_uHup)));

    // Same checks against the drifting frame.
    const State sp = rk4_step(s, kDtCheck, c.model);
    const State sm = rk4_step(s, -kDtCheck, c.model);
    const double inv = 1.0 / (2.0 * kDtCheck);
    const double fdi =
        (virial_I(sp, moving, o.p) - virial_I(sm, moving, o.p)) * inv;
    const double fdj = (virial_J(sp, moving) - virial_J(sm, moving)) * inv;
    fd_i_mov = std::max(fd_i_mov,
                        std::abs(fdi - dIdt_formula(s, moving, o.p)));
    fd_j_mov = std::max(fd_j_mov,
                        std::abs(fdj - dJdt_formula(s, moving, o.p)));
    const VirialTerms vt = qsqpq_split(s, moving, o.p);
    qsqpq_rel_mov = std::max(
        qsqpq_rel_mov,
        rel_gap(vt.sum(), dIdt_formula(s, moving, o.p),
                std::abs(vt.Qt) + std::abs(vt.SQt) + std::abs(vt.PQt)));
  });

  r.criteria.push_back(
      at_least("sample_count", static_cast<double>(r.records.size()), 20.0));
  r.criteria.push_back(at_most("dIdt_fd_vs_formula", fd_i, 1e-6));
  r.criteria.push_back(at_most("dJdt_fd_vs_formula", fd_j, 1e-6));
  r.criteria.push_back(at_most("dNdt_fd_vs_formula", fd_n, 1e-6));
  r.criteria.push_back(at_most("dIdt_fd_vs_formula_moving", fd_i_mov, 1e-6));
  r.criteria.push_back(at_most("dJdt_fd_vs_formula_moving", fd_j_mov, 1e-6));
  r.criteria.push_back(at_most("qsqpq_vs_dIdt_rel", qsqpq_rel, 1e-10));
  r.criteria.push_back(
      at_most("qsqpq_vs_dIdt_rel_moving", qsqpq_rel_mov, 1e-10));
  r.criteria.push_back(at_most("lyapunov_sum_rel", lyap_rel, 1e-10));

  // Canonical-variable identity over a seeded ensemble plus the soliton.
  const GridPtr grid = init.u.grid;
  Rng rng(c.seed);
  double can_rel = 0.0;
  const auto canonical_rel = [&](const Field& u) {
    const double res = canonical_identity_residual(u, o.companion);
    const WeightFields w = weight_fields(o.companion, grid, 0.0);
    const double scale = std::abs(integral_product(w.dphi, u, u));
    return res / std::max(scale, kTinyDenom);
  };
  for (int i = 0; i < c.trials; ++i)
    can_rel = std::max(can_rel, canonical_rel(random_band_limited(grid, rng)));
  SolitonSpec sol = c.soliton;
  sol.x0 = 7.0;
  const Field q = sample_function(
      grid, [&](double x) { return scaled_profile(x - sol.x0, sol); });
  can_rel = std::max(can_rel, canonical_rel(q));
  r.criteria.push_back(at_most("canonical_identity_rel", can_rel, 1e-10));
}

// Time-cumulative weighted integrals tracked at sample times.
struct CumulativeTrack {
  std::vector<double> times;
  std::vector<std::array<double, 3>> sums;
  std::array<double, 3> acc{0.0, 0.0, 0.0};
  std::array<double, 3> prev_inst{0.0, 0.0, 0.0};
  double prev_t = 0.0;
  bool started = false;

  void add(double t, const std::array<double, 3>& inst) {
    if (started) {
      const double h = t - prev_t;
      for (int i = 0; i < 3; ++i)
        acc[i] += 0.5 * (inst[i] + prev_inst[i]) * h;
    }
    started = true;
    prev_t = t;
    prev_inst = inst;
    times.push_back(t);
    sums.push_back(acc);
  }

  // Relative change of component i over the trailing window.
  double tail_change(int i, double window) const {
    if (times.empty()) return 0.0;
    const double t_end = times.back();
    std::size_t k = 0;
    for (std::size_t j = 0; j < times.size(); ++j)
      if (times[j] <= t_end - window) k = j;
    const double total = sums.back()[i];
    return (total - sums[k][i]) / std::max(std::abs(total), kTinyDenom);
  }
};

void run_thm1_exterior(const ExperimentConfig& c, ExperimentResult& r) {
  const State init = build_initial_state(c);
  const ObserverSetup o = make_observer(c);
  Schedule sched{c.sample_every, c.model.t_final, c.model.dt};
  const double Lw = c.weight.L;

  CumulativeTrack track;
  evolve(init, c.model, sched, [&](const State& s) {
    r.records.push_back(make_record(s, o));
    const GridPtr grid = s.u.grid;
    Field w(grid);
    for (int j = 0; j < grid->n_points; ++j) {
      const double x = grid->nodes[j];
      w[j] = sech((x - (1.0 + c.b) * s.t) / Lw) +
             sech((x + (1.0 + c.a) * s.t) / Lw);
    }
    const Field vx = deriv(s.v, 1);
    track.add(s.t, {integral_product(w, s.u, s.u),
                    integral_product(w, s.v, s.v), integral_product(w, vx, vx)});
  });

  double ne_t1 = 0.0, best = 1e300;
  for (const auto& rec : r.records)
    if (std::abs(rec.t - 1.0) < best) {
      best = std::abs(rec.t - 1.0);
      ne_t1 = rec.norm_exterior;
    }
  const double ratio =
      r.records.back().norm_exterior / std::max(ne_t1, kTinyDenom);
  r.criteria.push_back(at_most("exterior_norm_ratio", ratio, 0.1));
  r.criteria.push_back(
      at_most("spacetime_sum_tail_change_u2", track.tail_change(0, 10.0), 0.01));
  r.criteria.push_back(
      at_most("spacetime_sum_tail_change_v2", track.tail_change(1, 10.0), 0.01));
  r.criteria.push_back(at_most("spacetime_sum_tail_change_dvx2",
                               track.tail_change(2, 10.0), 0.01));
}

void run_thm2_interior(const ExperimentConfig& c, ExperimentResult& r) {
  const State init = build_initial_state(c);
  const ObserverSetup o = make_observer(c);
  Schedule sched{c.sample_every, c.model.t_final, c.model.dt};
  const double Lw = o.companion.L;

  CumulativeTrack track;
  double min_increment = 1e300;
  double prev_sum = 0.0;
  bool have_prev = false;
  evolve(init, c.model, sched, [&](const State& s) {
    r.records.push_back(make_record(s, o));
    const GridPtr grid = s.u.grid;
    Field w(grid);
    for (int j = 0; j < grid->n_points; ++j) {
      const double sc = sech(grid->nodes[j] / Lw);
      w[j] = sc * sc;
    }
    const Field f = canonical_variable(s.u);
    const Field up1 = abs_power(s.u, o.p + 1.0);
    const double inst = integral_product(w, s.v, s.v) +
                        integral_product(w, s.u, f) + integral_product(w, up1);
    track.add(s.t, {inst, 0.0, 0.0});
    const double cum = track.sums.back()[0];
    if (have_prev) min_increment = std::min(min_increment, cum - prev_sum);
    prev_sum = cum;
    have_prev = true;
  });

  const double n_initial = r.records.front().norm_interior;
  const double n_final = r.records.back().norm_interior;
  if (c.ic == InitialCondition::Soliton ||
      c.ic == InitialCondition::TwoSoliton) {
    r.criteria.push_back(at_most("interior_norm_ratio",
                                 n_final / std::max(n_initial, kTinyDenom),
                                 1e-3));
  } else {
    double n_t1 = n_initial, best = 1e300;
    for (const auto& rec : r.records)
      if (std::abs(rec.t - 1.0) < best) {
        best = std::abs(rec.t - 1.0);
        n_t1 = rec.norm_interior;
      }
    r.criteria.push_back(at_most("interior_norm_ratio_vs_t1",
                                 n_final / std::max(n_t1, kTinyDenom), 0.5));
    r.criteria.push_back(
        at_least("integrability_sum_min_increment", min_increment, -1e-12));
    r.criteria.push_back(at_most("integrability_sum_tail_change",
                                 track.tail_change(0, 10.0), 0.05));
  }
}

void run_positivity_probe(const ExperimentConfig& c, ExperimentResult& r) {
  const GridPtr grid = make_grid(c.model.half_length, c.model.n_points);
  ObserverSetup o = make_observer(c);
  o.with_fd = false;
  o.probe_mode = true;
  const WeightSpec lyap_weight{WeightShape::Tanh, 20.0, 0.0, 0.0};
  const WeightSpec drifting{WeightShape::Tanh, 10.0, 0.0, -2.0};
  Rng rng(c.seed);

  int index = 0;
  double min_term = 1e300;
  double min_margin = 1e300;
  for (int i = 0; i < c.trials; ++i) {
    const double amp = 0.2 + 0.8 * rng.uniform();
    Field u = random_nonnegative(grid, rng, amp);
    Field v = random_band_limited(grid, rng, 0.5);
    for (int sgn : {+1, -1}) {
      State s;
      s.t = 0.0;
      s.u = u;
      if (sgn < 0)
        for (auto& x : s.u.values) x = -x;
      s.v = v;
      const LyapunovTerms lt = lyapunov_terms(s, lyap_weight, o.p);
      min_term = std::min({min_term, lt.term_v2, lt.term_uHu, lt.term_up1,
                           lt.term_uHup});
      if (sgn > 0) {
        // Canonical lower bound on the u (1-dxx)^{-1} u term.
        const Field f = canonical_variable(s.u);
        const Field fx = deriv(f, 1);
        const WeightFields w = weight_fields(lyap_weight, grid, 0.0);
        const double floor_term =
            0.25 *
            (integral_product(w.dphi, f, f) + integral_product(w.dphi, fx, fx)) /
            (2.0 * lyap_weight.L);
        min_margin = std::min(min_margin, lt.term_uHu - floor_term);

        s.t = static_cast<double>(index++);
        r.records.push_back(make_record(s, o));
      }
    }
  }
  r.criteria.push_back(at_least("lyapunov_min_term", min_term, -1e-12));
  r.criteria.push_back(
      at_least("uHu_canonical_floor_margin", min_margin, -1e-12));

  // Qt is nonpositive for sigma <= -1 and phi' > 0, for states of any size.
  double max_qt = -1e300;
  for (int i = 0; i < c.trials; ++i) {
    State s;
    s.t = 0.0;
    s.u = random_band_limited(grid, rng, 0.2 + 0.8 * rng.uniform());
    s.v = random_band_limited(grid, rng, 0.2 + 0.8 * rng.uniform());
    max_qt = std::max(max_qt, qsqpq_split(s, drifting, o.p).Qt);
  }
  r.criteria.push_back(at_most("Qt_max_drifting_frame", max_qt, 1e-12));

  // Sign-changing data: the u (1-dxx)^{-1}(|u|^{p-1}u) term is recorded, not
  // asserted.
  double min_uhup = 1e300;
  const int sign_changing_trials = 10 * c.trials;
  for (int i = 0; i < sign_changing_trials; ++i) {
    State s;
    s.t = static_cast<double>(index++);
    s.u = random_band_limited(grid, rng);
    s.v = Field(grid);
    const LyapunovTerms lt = lyapunov_terms(s, lyap_weight, o.p);
    min_uhup = std::min(min_uhup, lt.term_uHup);
    r.records.push_back(make_record(s, o));
  }
  r.criteria.push_back(
      reported("sign_changing_min_uHup_reported", min_uhup));
}

void run_comparison_probe(const ExperimentConfig& c, ExperimentResult& r) {
  const GridPtr grid = make_grid(c.model.half_length, c.model.n_points);
  ObserverSetup o = make_observer(c);
  o.with_fd = false;
  o.probe_mode = true;
  Rng rng(c.seed);

  int passes = 0;
  double kernel_min = 1e300;
  for (int i = 0; i < c.trials; ++i) {
    const Field lo = random_band_limited(grid, rng);
    const Field bump = random_nonnegative(grid, rng, rng.uniform());
    Field hi(grid);
    kernels::scaled_sum(lo.span(), 1.0, bump.span(), hi.span());
    if (comparison_check(lo, hi)) ++passes;

    const Field hbump = helmholtz_inverse(bump);
    for (double x : hbump.values) kernel_min = std::min(kernel_min, x);

    State s;
    s.t = static_cast<double>(i);
    s.u = bump;
    s.v = hbump;
    r.records.push_back(make_record(s, o));
  }
  r.criteria.push_back(at_least("comparison_pass_count",
                                static_cast<double>(passes),
                                static_cast<double>(c.trials)));
  r.criteria.push_back(at_least("kernel_positivity_min", kernel_min, -1e-12));
}

void run_norm_equivalence_probe(const ExperimentConfig& c,
                                ExperimentResult& r) {
  const GridPtr grid = make_grid(c.model.half_length, c.model.n_points);
  ObserverSetup o = make_observer(c);
  o.with_fd = false;
  o.probe_mode = true;
  Rng rng(c.seed);

  const WeightFields w = weight_fields(c.weight, grid, 0.0);
  double ratio_min = 1e300, ratio_max = -1e300;
  for (int i = 0; i < c.trials; ++i) {
    const Field u = random_band_limited(grid, rng);
    const Field f = canonical_variable(u);
    const Field fx = deriv(f, 1);
    const Field fxx = deriv(f, 2);
    const double num = integral_product(w.phi, f, f) +
                       integral_product(w.phi, fx, fx) +
                       integral_product(w.phi, fxx, fxx);
    const double den = integral_product(w.phi, u, u);
    const double ratio = num / std::max(den, kTinyDenom);
    ratio_min = std::min(ratio_min, ratio);
    ratio_max = std::max(ratio_max, ratio);

    State s;
    s.t = static_cast<double>(i);
    s.u = u;
    s.v = Field(grid);
    r.records.push_back(make_record(s, o));
  }
  r.criteria.push_back(at_least("canonical_norm_ratio_min", ratio_min, 1e-3));
  r.criteria.push_back(at_most("canonical_norm_ratio_max", ratio_max, 1e3));
}

void dispatch(const ExperimentConfig& c, ExperimentResult& r) {
  switch (c.experiment) {
    case ExperimentKind::SolitonValidate: return run_soliton_validate(c, r);
    case ExperimentKind::Travel: return run_travel(c, r);
    case ExperimentKind::Conservation: return run_conservation(c, r);
    case ExperimentKind::IdentityCheck: return run_identity_check(c, r);
    case ExperimentKind::Thm1Exterior: return run_thm1_exterior(c, r);
    case ExperimentKind::Thm2Interior: return run_thm2_interior(c, r);
    case ExperimentKind::PositivityProbe: return run_positivity_probe(c, r);
    case ExperimentKind::ComparisonProbe: return run_comparison_probe(c, r);
    case ExperimentKind::NormEquivalenceProbe:
      return run_norm_equivalence_probe(c, r);
  }
  throw std::logic_error("dispatch: unhandled experiment");
}

void write_outputs(const ExperimentConfig& c, const ExperimentResult& r) {
  const std::filesystem::path prefix(c.output_path);
  if (prefix.has_parent_path())
    std::filesystem::create_directories(prefix.parent_path());
  write_records(c.output_path + ".csv", r.records);
  std::ofstream out(c.output_path + ".json");
  if (!out)
    throw std::runtime_error("cannot open " + c.output_path + ".json");
  out << summary_json(c, r).dump(2) << "\n";
  if (!out) throw std::runtime_error("short write to " + c.output_path + ".json");
}

}  // namespace

nlohmann::json summary_json(const ExperimentConfig& c,
                            const ExperimentResult& r) {
  nlohmann::json j;
  j["experiment"] = to_string(c.experiment);
  j["config_echo"] = config_echo(c);
  j["columns"] = record_columns();
  nlohmann::json crits = nlohmann::json::array();
  for (const auto& cr : r.criteria) {
    crits.push_back({{"name", cr.name},
                     {"value", cr.value},
                     {"threshold", cr.threshold},
                     {"pass", cr.pass}});
  }
  j["criteria"] = crits;
  j["runtime_seconds"] = r.runtime_seconds;
  if (r.error) j["error"] = *r.error;
  return j;
}

ExperimentResult run_experiment(const ExperimentConfig& c) {
  const auto start = std::chrono::steady_clock::now();
  ExperimentResult r;
  try {
    dispatch(c, r);
    r.pass = std::all_of(r.criteria.begin(), r.criteria.end(),
                         [](const Criterion& cr) { return cr.pass; });
  } catch (const BlowUpError& e) {
    r.error = e.what();
    r.pass = false;
  } catch (const AliasingError& e) {
    r.error = e.what();
    r.pass = false;
  }
  r.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  write_outputs(c, r);
  return r;
}

std::vector<SuiteEntry> suite_configs(const std::string& out_dir) {
  const auto mk = [&](const std::string& name, nlohmann::json doc) {
    doc["output_path"] = out_dir + "/" + name;
    return SuiteEntry{name, parse_config(doc)};
  };
  std::vector<SuiteEntry> entries;
  entries.push_back(mk("soliton-validate-p2",
                       {{"experiment", "soliton-validate"}, {"p", 2.0}, {"c", 1.5}}));
  entries.push_back(mk("soliton-validate-p3",
                       {{"experiment", "soliton-validate"}, {"p", 3.0}, {"c", 2.0}}));
  entries.push_back(mk("soliton-validate-p3.5",
                       {{"experiment", "soliton-validate"}, {"p", 3.5}, {"c", 1.2}}));
  entries.push_back(mk("travel",
                       {{"experiment", "travel"}, {"richardson", true}}));
  entries.push_back(mk("conservation-soliton",
                       {{"experiment", "conservation"}, {"ic", "soliton"}}));
  entries.push_back(mk("conservation-gaussian",
                       {{"experiment", "conservation"},
                        {"ic", "gaussian"},
                        {"amplitude", 0.5}}));
  entries.push_back(mk("identity-check",
                       {{"experiment", "identity-check"}, {"seed", 1234}}));
  entries.push_back(mk("comparison-probe",
                       {{"experiment", "comparison-probe"}, {"seed", 7}}));
  entries.push_back(mk("positivity-probe",
                       {{"experiment", "positivity-probe"}, {"seed", 42}}));
  entries.push_back(mk("thm1-exterior", {{"experiment", "thm1-exterior"}}));
  entries.push_back(mk("thm2-interior-soliton",
                       {{"experiment", "thm2-interior"}, {"ic", "soliton"}}));
  entries.push_back(mk("thm2-interior-gaussian",
                       {{"experiment", "thm2-interior"}, {"ic", "gaussian"}}));
  entries.push_back(mk("norm-equivalence-probe",
                       {{"experiment", "norm-equivalence-probe"}, {"seed", 11}}));
  return entries;
}

SuiteOutcome run_suite(const std::string& out_dir, int max_jobs) {
  std::filesystem::create_directories(out_dir);
  const auto entries = suite_configs(out_dir);
  std::vector<ExperimentResult> results(entries.size());

  const int jobs = std::max(
      1, std::min<int>(max_jobs, static_cast<int>(entries.size())));
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= entries.size()) return;
      results[i] = run_experiment(entries[i].config);
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  SuiteOutcome outcome;
  outcome.pass = true;
  nlohmann::json agg;
  nlohmann::json exps = nlohmann::json::array();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& entry = entries[i];
    const auto& res = results[i];
    nlohmann::json e;
    e["name"] = entry.name;
    e["pass"] = res.pass;
    e["output"] = entry.config.output_path;
    nlohmann::json failed = nlohmann::json::array();
    for (const auto& cr : res.criteria)
      if (!cr.pass) {
        failed.push_back(cr.name);
        outcome.failed_criteria.push_back(entry.name + "/" + cr.name);
      }
    if (res.error) {
      e["error"] = *res.error;
      outcome.failed_criteria.push_back(entry.name + "/solver-abort");
    }
    e["failed_criteria"] = failed;
    exps.push_back(e);
    if (!res.pass) {
      outcome.pass = false;
      ++outcome.failed_experiments;
    }
  }
  agg["experiments"] = exps;
  agg["pass"] = outcome.pass;
  std::ofstream out(out_dir + "/suite-summary.json");
  out << agg.dump(2) << "\n";
  return outcome;
}

}  // namespace gib
