#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cohsim/bohmian.hpp"
#include "cohsim/observables.hpp"
#include "cohsim/potential.hpp"
#include "cohsim/states.hpp"

namespace cohsim {

/// Fully resolved run description. default_config() fills the per-scenario
/// defaults; the config file may override any field.
struct ScenarioConfig {
  std::string scenario;
  std::vector<std::string> states;  // subset of SF1, SF2, MI, NOON, Mixture

  double x_min = -32.0;
  double x_max = 32.0;
  int n_points = 2048;
  bool hard_wall = false;  // default: periodic wrap on a box 4x the active region

  double dt = 1e-3;
  double duration = 5.0;
  int record_every = 100;

  std::vector<double> fragment_centers;
  double width_exponent = 1.0;

  IntervalSet mu_region;
  std::vector<double> g1_times;
  std::vector<double> bohm_times;
  int g1_resolution = 256;
  int bohm_resolution = 512;
  double epsilon_rel = 1e-8;
  double middle_region = 0.8;  // |x| half-width for force-comparison plots
  double noon_phase = 0.0;

  double barrier_height_factor = 2.0;  // x energy per particle
  double lattice_amplitude = 3.0;
  double lattice_wavenumber = 0.5235987755982988;  // pi/6
  double drive_amplitude = 0.25;
  double drive_frequency = 30.0;
  double dip_depth = 2.0;
  double dip_width = 1.0;
  bool with_dip = false;  // figS4 variant switch

  std::optional<std::array<double, 2>> mu_avg_window;
  int threads = 1;
};

struct StateSeries {
  std::string state;
  std::vector<double> dx2;
  std::vector<double> mu;
  std::vector<double> energy;
  std::vector<double> norm;
  std::vector<std::vector<double>> density;  // one row per recorded time
};

struct G1Snapshot {
  std::string state;
  double time;
  CorrelationField field;
};

struct BohmSnapshot {
  std::string state;
  double time;
  BohmField field;
};

struct ScenarioResult {
  ScenarioConfig config;
  std::vector<double> times;
  std::vector<StateSeries> series;          // one per requested state, in order
  std::vector<G1Snapshot> g1_snapshots;
  std::vector<BohmSnapshot> bohm_snapshots;
  std::vector<std::pair<std::string, double>> mu_time_average;
  std::map<std::string, double> metadata;   // energy_reference, potential_height
};

/// Catalogue: fig1_free, fig2_well, fig2_step, fig2_barrier, fig3_triple,
/// fig3_triple_dip, fig4_driven, figS4_single.
const std::vector<std::string>& scenario_names();

ScenarioConfig default_config(const std::string& scenario);

/// Kinetic energy per particle of the scenario's SF initial orbital (for the
/// step: of the low-side fragment). Square-shape heights are set to
/// barrier_height_factor times this number at runtime.
double scenario_energy_reference(const ScenarioConfig& cfg);

Potential scenario_potential(const ScenarioConfig& cfg);

/// Initial many-body state for one of the requested state kinds:
///   fig1: SF1 = sqrt(rho_MI); fig2/fig3: SF1 = SF(phi_plus); SF2 = SF(phi_minus);
///   MI = |11> over (phi_plus, phi_minus); NOON/Mixture over the fragment pair
///   (NOON on its Loewdin-orthonormalized version);
///   fig4: SF1 ~ sum of site gaussians, SF2 ~ alternating sum, MI = |111> over
///   Loewdin site orbitals; figS4: single-fragment SF.
ManyBodyState build_initial_state(const ScenarioConfig& cfg,
                                  const std::string& state_kind);

ScenarioResult run_scenario(const ScenarioConfig& cfg);

}  // namespace cohsim
