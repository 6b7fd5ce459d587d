#include "cohsim/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>

#include "cohsim/errors.hpp"
#include "cohsim/propagator.hpp"

namespace cohsim {

namespace {

constexpr double kPi = std::numbers::pi;

enum class Family { Fig1, Fig2Well, Fig2Step, Fig2Barrier, Fig3, Fig3Dip, Fig4, FigS4 };

Family family_of(const std::string& name) {
  if (name == "fig1_free") return Family::Fig1;
  if (name == "fig2_well") return Family::Fig2Well;
  if (name == "fig2_step") return Family::Fig2Step;
  if (name == "fig2_barrier") return Family::Fig2Barrier;
  if (name == "fig3_triple") return Family::Fig3;
  if (name == "fig3_triple_dip") return Family::Fig3Dip;
  if (name == "fig4_driven") return Family::Fig4;
  if (name == "figS4_single") return Family::FigS4;
  std::string msg = "unknown scenario '" + name + "'; valid choices:";
  for (const auto& s : scenario_names()) msg += " " + s;
  throw ConfigError(msg);
}

}  // namespace

const std::vector<std::string>& scenario_names() {
  static const std::vector<std::string> names = {
      "fig1_free",   "fig2_well",       "fig2_step",  "fig2_barrier",
      "fig3_triple", "fig3_triple_dip", "fig4_driven", "figS4_single"};
  return names;
}

ScenarioConfig default_config(const std::string& scenario) {
  ScenarioConfig cfg;
  cfg.scenario = scenario;
  switch (family_of(scenario)) {
    case Family::Fig1:
      cfg.states = {"SF1", "MI", "SF2"};
      cfg.fragment_centers = {-1.0, 1.0};
      cfg.duration = 5.0;
      cfg.record_every = 125;
      cfg.mu_region = {{-1.0, 1.0}};
      cfg.g1_times = {0.0};
      cfg.bohm_times = {0.0};
      break;
    case Family::Fig2Well:
    case Family::Fig2Barrier:
      cfg.states = {"SF1", "MI"};
      cfg.fragment_centers = {-3.0, 3.0};
      cfg.duration = 5.0;
      cfg.record_every = 100;
      cfg.mu_region = {{-1.0, 1.0}};
      cfg.g1_times = {0.0, 3.0};
      break;
    case Family::Fig2Step:
      cfg.states = {"SF1", "MI"};
      cfg.fragment_centers = {-2.0, 2.0};
      cfg.duration = 5.0;
      cfg.record_every = 100;
      cfg.mu_region = {{-1.0, 1.0}};
      cfg.g1_times = {0.0, 3.0};
      break;
    case Family::Fig3:
    case Family::Fig3Dip:
      cfg.states = {"SF1", "MI"};
      cfg.fragment_centers = {-6.0, 6.0};
      cfg.duration = 10.0;
      cfg.record_every = 250;
      cfg.mu_region = {{-3.0, 3.0}};
      break;
    case Family::Fig4:
      cfg.states = {"SF1", "MI", "SF2"};
      cfg.fragment_centers = {-6.0, 0.0, 6.0};
      cfg.duration = 1.0;
      cfg.record_every = 10;
      cfg.mu_region = {{-4.0, -2.0}, {2.0, 4.0}};
      cfg.lattice_amplitude = 72.0 / (kPi * kPi);
      cfg.mu_avg_window = {{0.0, 3.0 * 2.0 * kPi / 30.0}};
      break;
    case Family::FigS4:
      cfg.states = {"SF1"};
      cfg.fragment_centers = {6.0};
      cfg.duration = 12.0;
      cfg.record_every = 250;
      cfg.mu_region = {{-9.0, 3.0}};
      break;
  }
  return cfg;
}

namespace {

std::vector<Orbital> make_fragments(const ScenarioConfig& cfg, const Grid1D& grid) {
  std::vector<Orbital> frags;
  for (double c : cfg.fragment_centers)
    frags.push_back(gaussian_orbital(grid, c, cfg.width_exponent));
  return frags;
}

Grid1D scenario_grid(const ScenarioConfig& cfg) {
  return make_grid(cfg.x_min, cfg.x_max, cfg.n_points, !cfg.hard_wall);
}

}  // namespace

double scenario_energy_reference(const ScenarioConfig& cfg) {
  const Grid1D grid = scenario_grid(cfg);
  const auto frags = make_fragments(cfg, grid);
  switch (family_of(cfg.scenario)) {
    case Family::Fig2Step:
      return kinetic_energy(frags.at(0));  // low-side fragment
    case Family::Fig2Well:
    case Family::Fig2Barrier: {
      const auto pair = pair_decomposition(frags.at(0), frags.at(1));
      return kinetic_energy(pair.phi_plus);
    }
    default: {
      // Informational for the other scenarios: the SF1 orbital's kinetic energy.
      const auto state = build_initial_state(cfg, "SF1");
      return kinetic_energy(state.orbitals[0]);
    }
  }
}

Potential scenario_potential(const ScenarioConfig& cfg) {
  PotentialSpec spec;
  spec.lattice_amplitude = cfg.lattice_amplitude;
  spec.lattice_wavenumber = cfg.lattice_wavenumber;
  spec.drive_amplitude = cfg.drive_amplitude;
  spec.drive_frequency = cfg.drive_frequency;
  spec.dip_depth = cfg.dip_depth;
  spec.dip_width = cfg.dip_width;
  spec.edge = 1.0;
  switch (family_of(cfg.scenario)) {
    case Family::Fig1:
      spec.kind = PotentialKind::Free;
      break;
    case Family::Fig2Well:
      spec.kind = PotentialKind::SquareWell;
      spec.height = cfg.barrier_height_factor * scenario_energy_reference(cfg);
      break;
    case Family::Fig2Step:
      spec.kind = PotentialKind::Step;
      spec.height = cfg.barrier_height_factor * scenario_energy_reference(cfg);
      break;
    case Family::Fig2Barrier:
      spec.kind = PotentialKind::SquareBarrier;
      spec.height = cfg.barrier_height_factor * scenario_energy_reference(cfg);
      break;
    case Family::Fig3:
      spec.kind = PotentialKind::TripleWell;
      break;
    case Family::Fig3Dip:
      spec.kind = PotentialKind::TripleWellDip;
      break;
    case Family::Fig4:
      spec.kind = PotentialKind::DrivenLattice;
      break;
    case Family::FigS4:
      spec.kind = cfg.with_dip ? PotentialKind::TripleWellDip : PotentialKind::TripleWell;
      break;
  }
  return build_potential(std::move(spec));
}

ManyBodyState build_initial_state(const ScenarioConfig& cfg,
                                  const std::string& kind) {
  const Family fam = family_of(cfg.scenario);
  const Grid1D grid = scenario_grid(cfg);
  const auto frags = make_fragments(cfg, grid);

  auto unsupported = [&]() -> ManyBodyState {
    throw ConfigError("state '" + kind + "' is not supported by scenario '" +
                      cfg.scenario + "'");
  };

  if (fam == Family::FigS4) {
    if (kind != "SF1") return unsupported();
    return build_state(StateKind::SF, {frags.at(0)}, {1});
  }

  if (fam == Family::Fig4) {
    if (frags.size() < 2) throw ConfigError("fig4 needs at least two fragments");
    const int n = grid.n;
    if (kind == "SF1" || kind == "SF2") {
      std::vector<Complex> v(n, Complex(0.0));
      for (size_t k = 0; k < frags.size(); ++k) {
        const double sign = (kind == "SF2" && (k % 2 == 1)) ? -1.0 : 1.0;
        for (int j = 0; j < n; ++j) v[j] += sign * frags[k].values[j];
      }
      return build_state(StateKind::SF, {make_orbital(grid, std::move(v), true)}, {1});
    }
    if (kind == "MI") {
      auto chis = lowdin_orthonormalize(frags);
      return build_state(StateKind::MI, std::move(chis),
                         std::vector<int>(frags.size(), 1));
    }
    return unsupported();
  }

  // Two-fragment families (fig1, fig2*, fig3*).
  if (frags.size() != 2)
    throw ConfigError("scenario '" + cfg.scenario + "' needs exactly two fragments");
  const auto pair = pair_decomposition(frags[0], frags[1]);

  if (kind == "MI")
    return build_state(StateKind::MI, {pair.phi_plus, pair.phi_minus}, {1, 1});
  if (kind == "SF2")
    return build_state(StateKind::SF, {pair.phi_minus}, {2});
  if (kind == "SF1") {
    if (fam == Family::Fig1) {
      const auto mi = build_state(StateKind::MI, {pair.phi_plus, pair.phi_minus}, {1, 1});
      return build_state(StateKind::SF, {sf1_orbital_from_mi_density(mi)}, {2});
    }
    // Fragments are almost non-overlapping at separations >= 4; the
    // condensate orbital is simply phi_plus.
    return build_state(StateKind::SF, {pair.phi_plus}, {2});
  }
  if (kind == "NOON") {
    auto chis = lowdin_orthonormalize(frags);
    return build_state(StateKind::NOON, std::move(chis), {2, 2}, cfg.noon_phase);
  }
  if (kind == "Mixture")
    return build_state(StateKind::Mixture, frags, {2, 2});
  return unsupported();
}

namespace {

struct StateRun {
  StateSeries series;
  std::vector<G1Snapshot> g1;
  std::vector<BohmSnapshot> bohm;
  std::optional<double> mu_avg;
};

std::vector<long> schedule_steps(const std::vector<double>& times, double dt,
                                 long n_steps, const char* what) {
  std::vector<long> steps;
  for (double t : times) {
    const long s = std::lround(t / dt);
    if (s < 0 || s > n_steps)
      throw ConfigError(std::string(what) + " snapshot time outside the run");
    steps.push_back(s);
  }
  return steps;
}

StateRun run_one_state(const ScenarioConfig& cfg, const Potential& potential,
                       const std::string& state_name) {
  const Grid1D grid = scenario_grid(cfg);
  ManyBodyState state = build_initial_state(cfg, state_name);
  const long n_steps = std::lround(cfg.duration / cfg.dt);
  const auto g1_steps = schedule_steps(cfg.g1_times, cfg.dt, n_steps, "g1");
  const auto bohm_steps = schedule_steps(cfg.bohm_times, cfg.dt, n_steps, "bohm");
  const int g1_stride = decimation_stride(grid, cfg.g1_resolution);

  SplitStepPropagator prop(grid, potential, cfg.dt);
  StateRun run;
  run.series.state = state_name;

  const auto parts = rdm_components(state);
  std::vector<double> vsamp;

  auto record = [&](double t) {
    std::vector<double> rho = density(state);
    potential.sample(grid, t, vsamp);
    double energy = 0.0, trace = 0.0;
    for (const auto& [w, orb] : parts) {
      energy += w * total_energy(*orb, vsamp);
      const double nn = orb->norm();
      trace += w * nn * nn;
    }
    run.series.dx2.push_back(position_variance(rho, grid));
    run.series.mu.push_back(trapped_fraction(rho, grid, cfg.mu_region));
    run.series.energy.push_back(energy);
    run.series.norm.push_back(trace);
    run.series.density.push_back(std::move(rho));
  };

  auto snapshot = [&](double t, long step) {
    if (std::find(g1_steps.begin(), g1_steps.end(), step) != g1_steps.end()) {
      const auto rdm = one_body_rdm(state, g1_stride);
      run.g1.push_back({state_name, t, g1(rdm, cfg.epsilon_rel)});
    }
    if (std::find(bohm_steps.begin(), bohm_steps.end(), step) != bohm_steps.end())
      run.bohm.push_back(
          {state_name, t, averaged_quantum_potential(state, cfg.epsilon_rel,
                                                     cfg.bohm_resolution)});
  };

  // Step-resolution trapezoid accumulation of mu over the averaging window.
  double mu_acc = 0.0, mu_prev = 0.0, window_len = 0.0;
  const bool averaging = cfg.mu_avg_window.has_value();
  auto mu_now = [&]() {
    const auto rho = density(state);
    return trapped_fraction(rho, grid, cfg.mu_region);
  };
  if (averaging) mu_prev = mu_now();

  record(0.0);
  snapshot(0.0, 0);

  for (long s = 0; s < n_steps; ++s) {
    const double t0 = s * cfg.dt;
    for (auto& orb : state.orbitals) prop.step(orb.values, t0);
    const double t1 = (s + 1) * cfg.dt;
    if (averaging) {
      const auto& [w0, w1] = *cfg.mu_avg_window;
      if (t0 >= w0 - 1e-12 && t1 <= w1 + 1e-12) {
        const double mu_cur = mu_now();
        mu_acc += 0.5 * (mu_prev + mu_cur) * cfg.dt;
        mu_prev = mu_cur;
        window_len += cfg.dt;
      }
    }
    if ((s + 1) % cfg.record_every == 0) record(t1);
    snapshot(t1, s + 1);
  }
  if (averaging && window_len > 0.0) run.mu_avg = mu_acc / window_len;
  return run;
}

}  // namespace

ScenarioResult run_scenario(const ScenarioConfig& cfg) {
  family_of(cfg.scenario);  // validates the name
  if (cfg.states.empty()) throw ConfigError("no states requested");
  if (!(cfg.duration > 0.0)) throw ConfigError("duration must be positive");
  if (cfg.record_every < 1) throw ConfigError("record_every must be >= 1");

  const Potential potential = scenario_potential(cfg);
  const long n_steps = std::lround(cfg.duration / cfg.dt);

  ScenarioResult result;
  result.config = cfg;
  for (long s = 0; s <= n_steps; ++s)
    if (s % cfg.record_every == 0) result.times.push_back(s * cfg.dt);

  std::vector<StateRun> runs(cfg.states.size());
  auto work = [&](size_t i) { runs[i] = run_one_state(cfg, potential, cfg.states[i]); };

  const int n_threads = std::max(1, cfg.threads);
  if (n_threads == 1 || cfg.states.size() == 1) {
    for (size_t i = 0; i < cfg.states.size(); ++i) work(i);
  } else {
    std::vector<std::thread> pool;
    for (size_t i = 0; i < cfg.states.size(); ++i) pool.emplace_back(work, i);
    for (auto& th : pool) th.join();
  }

  for (auto& run : runs) {
    result.series.push_back(std::move(run.series));
    for (auto& s : run.g1) result.g1_snapshots.push_back(std::move(s));
    for (auto& s : run.bohm) result.bohm_snapshots.push_back(std::move(s));
    if (run.mu_avg)
      result.mu_time_average.emplace_back(result.series.back().state, *run.mu_avg);
  }

  result.metadata["energy_reference"] = scenario_energy_reference(cfg);
  result.metadata["potential_height"] = potential.spec().height;
  return result;
}

}  // namespace cohsim
