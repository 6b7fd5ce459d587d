// Acceptance suite: one check per numbered criterion, each printing a
// single [PASS]/[FAIL] line with the measured values. Run everything or a
// single criterion with --criterion N. Exit code 0 only if every selected
// criterion passed.

#include <algorithm>
#include <cmath>
#include <cstring>
#include <filesystem>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>

#include "cohsim/bohmian.hpp"
#include "cohsim/config.hpp"
#include "cohsim/errors.hpp"
#include "cohsim/export.hpp"
#include "cohsim/observables.hpp"
#include "cohsim/propagator.hpp"
#include "cohsim/scenarios.hpp"

using namespace cohsim;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string fmt(double v, int prec = 6) {
  std::ostringstream s;
  s.precision(prec);
  s << v;
  return s.str();
}

const StateSeries& series_of(const ScenarioResult& r, const std::string& name) {
  for (const auto& s : r.series)
    if (s.state == name) return s;
  throw NumericalError("series missing for state " + name);
}

// ---------------------------------------------------------------------------
// 1. Unitarity and energy drift for every catalogue scenario.
Outcome criterion1() {
  Outcome out;
  double worst_norm = 0.0, worst_drift = 0.0;
  auto check_run = [&](ScenarioConfig cfg) {
    cfg.g1_times = {};  // diagnostics not needed here
    cfg.bohm_times = {};
    const auto result = run_scenario(cfg);
    const bool static_pot = !scenario_potential(cfg).time_dependent();
    for (const auto& s : result.series) {
      for (double n : s.norm) worst_norm = std::max(worst_norm, std::abs(n - 1.0));
      if (static_pot) {
        const double e0 = s.energy.front();
        for (double e : s.energy)
          worst_drift = std::max(worst_drift, std::abs(e - e0) / std::abs(e0));
      }
    }
  };
  for (const auto& name : scenario_names()) check_run(default_config(name));
  auto s4dip = default_config("figS4_single");
  s4dip.with_dip = true;
  check_run(s4dip);

  out.pass = worst_norm < 1e-9 && worst_drift < 1e-6;
  out.detail = "max |norm-1| = " + fmt(worst_norm, 3) +
               " (< 1e-9), max static-potential energy drift = " +
               fmt(worst_drift, 3) + " (< 1e-6), all 9 scenario runs";
  return out;
}

// ---------------------------------------------------------------------------
// 2. Free-dispersion oracle: dx2(t) = 0.25 + t^2.
Outcome criterion2() {
  const auto grid = make_grid(-32, 32, 2048);
  const auto phi = gaussian_orbital(grid, 0.0, 1.0);
  const auto v = build_potential({});
  const PropagationPlan plan{1e-3, 2000, 100, &v};
  const auto snaps = split_step_evolve(phi, plan);
  double worst = 0.0;
  for (const auto& [t, orb] : snaps) {
    if (t == 0.0) continue;
    const double expected = 0.25 + t * t;
    const double got = position_variance(orb.density(), grid);
    worst = std::max(worst, std::abs(got - expected) / expected);
  }
  Outcome out;
  out.pass = worst < 1e-6;
  out.detail = "max relative error of dx2 vs 0.25+t^2 over t<=2: " + fmt(worst, 3) +
               " (< 1e-6; box [-32,32], 2048 points, dt=1e-3)";
  return out;
}

// ---------------------------------------------------------------------------
// 3. Bohmian oracle on the unit gaussian.
Outcome criterion3() {
  const auto grid = make_grid(-16, 16, 1024);
  const auto field = quantum_potential_single(gaussian_orbital(grid, 0.0, 1.0));
  double worst_q = 0.0, worst_f = 0.0;
  bool covered = true;
  for (int j = 0; j < grid.n; ++j) {
    const double x = grid.x(j);
    if (std::abs(x) > 3.0) continue;
    if (!field.mask_q[j] || !field.mask_f[j]) {
      covered = false;
      continue;
    }
    worst_q = std::max(worst_q, std::abs(field.q[j] - (1 - 2 * x * x)));
    worst_f = std::max(worst_f, std::abs(field.f[j] - 4 * x));
  }
  Outcome out;
  out.pass = covered && worst_q < 1e-4 && worst_f < 1e-3;
  out.detail = "max|Q-(1-2x^2)| = " + fmt(worst_q, 3) + " (< 1e-4), max|F-4x| = " +
               fmt(worst_f, 3) + " (< 1e-3) on |x| <= 3";
  return out;
}

// ---------------------------------------------------------------------------
// 4. Product-state consistency of the two-body pipeline.
Outcome criterion4() {
  const auto cfg = default_config("fig1_free");
  const auto sf1 = build_initial_state(cfg, "SF1");
  const auto grid = sf1.orbitals[0].grid;
  const int stride = decimation_stride(grid, cfg.bohm_resolution);

  const auto single = quantum_potential_single(sf1.orbitals[0].decimated(stride));
  const auto two_body = two_body_bohm(sf1, cfg.epsilon_rel, cfg.bohm_resolution);
  double worst = 0.0;
  int n_common = 0;
  for (int j = 0; j < two_body.grid.n; ++j) {
    if (!single.mask_f[j] || !two_body.mask_f[j]) continue;
    ++n_common;
    worst = std::max(worst, std::abs(single.f[j] - two_body.f[j]));
  }
  Outcome out;
  out.pass = n_common > 50 && worst < 1e-6;
  out.detail = "max |F_2body - F_single| = " + fmt(worst, 3) + " on " +
               std::to_string(n_common) + " shared mask points (< 1e-6)";
  return out;
}

// ---------------------------------------------------------------------------
// 5. Fig-1g force hierarchy at x = +-0.5.
Outcome criterion5() {
  const auto cfg = default_config("fig1_free");
  const auto f_sf1 = averaged_quantum_potential(build_initial_state(cfg, "SF1"),
                                                cfg.epsilon_rel, cfg.bohm_resolution);
  const auto f_mi = averaged_quantum_potential(build_initial_state(cfg, "MI"),
                                               cfg.epsilon_rel, cfg.bohm_resolution);
  const auto f_sf2 = averaged_quantum_potential(build_initial_state(cfg, "SF2"),
                                                cfg.epsilon_rel, cfg.bohm_resolution);
  Outcome out;
  std::ostringstream detail;
  for (double xv : {0.5, -0.5}) {
    auto inward = [&](const BohmField& f) {
      const int j = f.grid.index_near(xv);
      if (!f.mask_f[j] || std::abs(f.grid.x(j) - xv) > 1e-9)
        throw NumericalError("force not defined at comparison point");
      return (xv > 0 ? -1.0 : 1.0) * f.f[j];
    };
    const double a = inward(f_sf1), b = inward(f_mi), c = inward(f_sf2);
    const double m_ab = (a - b) / std::max(std::abs(a), std::abs(b));
    const double m_bc = (b - c) / std::max(std::abs(b), std::abs(c));
    if (!(a > b && b > c && m_ab > 0.05 && m_bc > 0.05)) out.pass = false;
    if (xv > 0)
      detail << "inward F at +-0.5: SF1 " << fmt(a) << " > MI " << fmt(b) << " > SF2 "
             << fmt(c) << ", margins " << fmt(100 * m_ab, 3) << "% / "
             << fmt(100 * m_bc, 3) << "% (> 5%)";
  }
  out.detail = detail.str();
  return out;
}

// ---------------------------------------------------------------------------
// 6. Fig-1h variance ordering over recorded t in [0.2, 1.5].
Outcome criterion6() {
  const auto result = run_scenario(default_config("fig1_free"));
  const auto& sf1 = series_of(result, "SF1");
  const auto& mi = series_of(result, "MI");
  const auto& sf2 = series_of(result, "SF2");
  Outcome out;
  double min_m1 = 1e9, min_m2 = 1e9;
  int n_checked = 0;
  for (size_t i = 0; i < result.times.size(); ++i) {
    const double t = result.times[i];
    if (t < 0.2 || t > 1.5) continue;
    ++n_checked;
    const double m1 = (mi.dx2[i] - sf1.dx2[i]) / sf1.dx2[i];
    const double m2 = (sf2.dx2[i] - mi.dx2[i]) / mi.dx2[i];
    min_m1 = std::min(min_m1, m1);
    min_m2 = std::min(min_m2, m2);
    if (!(m1 > 0.01 && m2 > 0.01)) out.pass = false;
  }
  if (n_checked == 0) out.pass = false;
  out.detail = "dx2 ordering SF1 < MI < SF2 at " + std::to_string(n_checked) +
               " recorded times in [0.2,1.5]; min margins " + fmt(100 * min_m1, 3) +
               "% / " + fmt(100 * min_m2, 3) + "% (> 1%)";
  return out;
}

// ---------------------------------------------------------------------------
// 7. Fig-2 insets: mu orderings in (0, 1] plus the step dx2 at t = 3.
Outcome criterion7() {
  Outcome out;
  std::ostringstream detail;

  auto mu_ordering = [&](const char* name, bool sf_above) {
    const auto result = run_scenario(default_config(name));
    const auto& sf = series_of(result, "SF1");
    const auto& mi = series_of(result, "MI");
    bool ok = true;
    double worst_rel = 0.0, worst_t = 0.0;
    for (size_t i = 0; i < result.times.size(); ++i) {
      const double t = result.times[i];
      if (!(t > 0.0 && t <= 1.0)) continue;
      const double diff = sf.mu[i] - mi.mu[i];
      const bool this_ok = sf_above ? diff > 0.0 : diff < 0.0;
      const double rel = diff / std::max(sf.mu[i], mi.mu[i]);
      if (!this_ok && std::abs(rel) >= std::abs(worst_rel)) {
        worst_rel = rel;
        worst_t = t;
      }
      ok = ok && this_ok;
    }
    if (!ok)
      detail << name << ": mu_SF " << (sf_above ? ">" : "<")
             << " mu_MI violated on (0,1], worst rel diff " << fmt(100 * worst_rel, 3)
             << "% at t=" << fmt(worst_t, 3) << "; ";
    else
      detail << name << ": mu ordering holds on (0,1]; ";
    return ok;
  };

  const bool barrier_ok = mu_ordering("fig2_barrier", /*sf_above=*/true);
  const bool well_ok = mu_ordering("fig2_well", /*sf_above=*/false);

  const auto step = run_scenario(default_config("fig2_step"));
  const auto& sf = series_of(step, "SF1");
  const auto& mi = series_of(step, "MI");
  const auto it = std::find_if(step.times.begin(), step.times.end(),
                               [](double t) { return std::abs(t - 3.0) < 1e-9; });
  bool step_ok = false;
  if (it != step.times.end()) {
    const size_t i = it - step.times.begin();
    step_ok = sf.dx2[i] > mi.dx2[i];
    detail << "step at t=3: dx2_SF " << fmt(sf.dx2[i]) << " vs dx2_MI "
           << fmt(mi.dx2[i]) << (step_ok ? " (SF larger)" : " (violated)");
  }
  out.pass = barrier_ok && well_ok && step_ok;
  out.detail = detail.str();
  return out;
}

// ---------------------------------------------------------------------------
// 8. Fig-3: orderings over the first quarter of the run, margin at its end.
Outcome criterion8() {
  Outcome out;
  std::ostringstream detail;

  const auto nodip = run_scenario(default_config("fig3_triple"));
  const auto dip = run_scenario(default_config("fig3_triple_dip"));
  const double quarter = nodip.config.duration / 4.0;

  const auto& sf_n = series_of(nodip, "SF1");
  const auto& mi_n = series_of(nodip, "MI");
  const auto& sf_d = series_of(dip, "SF1");
  const auto& mi_d = series_of(dip, "MI");

  bool nodip_ok = true, dip_ok = true;
  double margin_at_quarter = 0.0;
  for (size_t i = 0; i < nodip.times.size(); ++i) {
    const double t = nodip.times[i];
    if (!(t > 0.0 && t <= quarter + 1e-9)) continue;
    if (!(sf_n.mu[i] >= mi_n.mu[i])) nodip_ok = false;
    if (!(mi_d.mu[i] > sf_d.mu[i])) dip_ok = false;
    if (std::abs(t - quarter) < 1e-9)
      margin_at_quarter = (mi_d.mu[i] - sf_d.mu[i]) / mi_d.mu[i];
  }
  out.pass = nodip_ok && dip_ok && margin_at_quarter > 0.05;
  detail << "first quarter (0," << fmt(quarter, 3) << "]: no-dip mu_SF >= mu_MI "
         << (nodip_ok ? "holds" : "violated") << ", dip mu_MI > mu_SF "
         << (dip_ok ? "holds" : "violated") << ", dip margin at t=" << fmt(quarter, 3)
         << ": " << fmt(100 * margin_at_quarter, 3) << "% (> 5% required)";
  const size_t last = nodip.times.size() - 1;
  detail << "; context at t=" << fmt(nodip.times[last], 3) << ": dip rel "
         << fmt(100 * (sf_d.mu[last] - mi_d.mu[last]) / mi_d.mu[last], 3)
         << "%, no-dip rel "
         << fmt(100 * (sf_n.mu[last] - mi_n.mu[last]) / mi_n.mu[last], 3) << "%";
  out.detail = detail.str();
  return out;
}

// ---------------------------------------------------------------------------
// 9. Fig-4: time-averaged mu over the first 3 drive periods.
Outcome criterion9() {
  const auto result = run_scenario(default_config("fig4_driven"));
  auto avg_of = [&](const std::string& name) {
    for (const auto& [state, v] : result.mu_time_average)
      if (state == name) return v;
    throw NumericalError("missing mu time average for " + name);
  };
  const double a = avg_of("SF1"), b = avg_of("MI"), c = avg_of("SF2");
  Outcome out;
  out.pass = a > b && b > c;
  out.detail = "time-averaged mu over 3 drive periods: SF1 " + fmt(a, 9) + " vs MI " +
               fmt(b, 9) + " vs SF2 " + fmt(c, 9) +
               (out.pass ? " (ordered SF1 > MI > SF2)" : " (ordering violated)");
  return out;
}

// ---------------------------------------------------------------------------
// 10. Fig-S4: dip vs no-dip curves differ at the end of the run.
Outcome criterion10() {
  auto cfg = default_config("figS4_single");
  const auto nodip = run_scenario(cfg);
  cfg.with_dip = true;
  const auto dip = run_scenario(cfg);
  const double a = series_of(nodip, "SF1").mu.back();
  const double b = series_of(dip, "SF1").mu.back();
  const double rel = std::abs(a - b) / std::max(a, b);
  Outcome out;
  out.pass = rel > 0.10;
  out.detail = "mu(T) no-dip " + fmt(a) + " vs dip " + fmt(b) +
               ": relative difference " + fmt(100 * rel, 3) +
               "% (> 10%); direction: " +
               (a > b ? "dip suppresses tunneling" : "dip enhances tunneling") +
               " (recorded, not asserted)";
  return out;
}

// ---------------------------------------------------------------------------
// 11. Observable invariant suite across state kinds and times.
Outcome criterion11() {
  auto cfg = default_config("fig1_free");
  cfg.states = {"SF1", "MI", "SF2", "NOON", "Mixture"};
  const auto potential = scenario_potential(cfg);
  const auto grid = make_grid(cfg.x_min, cfg.x_max, cfg.n_points);
  const int stride = decimation_stride(grid, 512);

  Outcome out;
  double worst_herm = 0, worst_trace = 0, worst_psd = 0, worst_g1 = 0, worst_occ = 0;
  for (const auto& name : cfg.states) {
    auto state = build_initial_state(cfg, name);
    SplitStepPropagator prop(grid, potential, cfg.dt);
    for (int block = 0; block <= 4; ++block) {
      if (block > 0)
        for (int s = 0; s < 250; ++s)
          for (auto& orb : state.orbitals)
            prop.step(orb.values, ((block - 1) * 250 + s) * cfg.dt);

      const auto rdm = one_body_rdm(state, stride);
      worst_herm = std::max(worst_herm, rdm.hermiticity_error());
      worst_trace = std::max(worst_trace, std::abs(rdm.trace() - 1.0));
      const auto occ = natural_occupations(rdm);
      worst_psd = std::max(worst_psd, std::max(0.0, -occ.back()));
      if (name == "MI")
        worst_occ =
            std::max({worst_occ, std::abs(occ[0] - 0.5), std::abs(occ[1] - 0.5)});

      const auto corr = g1(rdm, cfg.epsilon_rel);
      for (int i = 0; i < corr.grid.n; ++i) {
        if (corr.mask(i, i))
          worst_g1 = std::max(worst_g1, std::abs(corr.values(i, i).real() - 1.0));
        for (int j = 0; j < corr.grid.n; ++j)
          if (corr.mask(i, j))
            worst_g1 = std::max(worst_g1, std::abs(corr.values(i, j)) - 1.0);
      }
      if (name == "SF1" || name == "SF2") {
        // SF coherence: |g1| = 1 on the whole mask
        for (int i = 0; i < corr.grid.n; i += 4)
          for (int j = 0; j < corr.grid.n; j += 4)
            if (corr.mask(i, j))
              worst_g1 =
                  std::max(worst_g1, std::abs(std::abs(corr.values(i, j)) - 1.0));
      }
    }
  }
  out.pass = worst_herm < 1e-10 && worst_trace < 1e-8 && worst_psd < 1e-8 &&
             worst_g1 < 1e-8 && worst_occ < 1e-6;
  out.detail = "hermiticity " + fmt(worst_herm, 3) + ", |trace-1| " +
               fmt(worst_trace, 3) + ", PSD floor " + fmt(worst_psd, 3) +
               ", g1 bound/diag/SF dev " + fmt(worst_g1, 3) + ", MI occupation dev " +
               fmt(worst_occ, 3) + " over 5 states x 5 times";
  return out;
}

// ---------------------------------------------------------------------------
// 12. Determinism: identical config, byte-identical CSV outputs.
Outcome criterion12() {
  const std::string cfg_text =
      "{scenario: \"fig1_free\", duration: 0.5, record_every: 125, threads: 1}";
  const auto cfg = parse_config(cfg_text);
  const auto dir_a = fs::temp_directory_path() / "cohsim_accept_a";
  const auto dir_b = fs::temp_directory_path() / "cohsim_accept_b";
  fs::remove_all(dir_a);
  fs::remove_all(dir_b);

  const auto m_a = export_result(run_scenario(cfg), dir_a);
  const auto m_b = export_result(run_scenario(cfg), dir_b);

  Outcome out;
  out.pass = m_a.outputs.size() == m_b.outputs.size();
  int n_files = 0;
  if (out.pass) {
    for (size_t i = 0; i < m_a.outputs.size(); ++i) {
      if (m_a.outputs[i].name != m_b.outputs[i].name ||
          m_a.outputs[i].fnv1a64 != m_b.outputs[i].fnv1a64 ||
          m_a.outputs[i].bytes != m_b.outputs[i].bytes)
        out.pass = false;
      ++n_files;
    }
  }
  out.detail = std::to_string(n_files) +
               " CSV outputs byte-identical across two runs (config hash " +
               m_a.config_hash + ")";
  fs::remove_all(dir_a);
  fs::remove_all(dir_b);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc)
      only = std::atoi(argv[++i]);
  }

  const std::vector<std::pair<int, std::function<Outcome()>>> checks = {
      {1, criterion1},  {2, criterion2},   {3, criterion3},   {4, criterion4},
      {5, criterion5},  {6, criterion6},   {7, criterion7},   {8, criterion8},
      {9, criterion9},  {10, criterion10}, {11, criterion11}, {12, criterion12},
  };

  bool all_pass = true;
  for (const auto& [num, fn] : checks) {
    if (only != 0 && num != only) continue;
    Outcome outcome;
    try {
      outcome = fn();
    } catch (const std::exception& e) {
      outcome.pass = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    std::cout << (outcome.pass ? "[PASS]" : "[FAIL]") << " criterion " << num << ": "
              << outcome.detail << "\n";
    all_pass = all_pass && outcome.pass;
  }
  return all_pass ? 0 : 1;
}
