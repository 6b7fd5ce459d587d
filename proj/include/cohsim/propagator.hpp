#pragma once

#include <memory>
#include <vector>

#include "cohsim/fft.hpp"
#include "cohsim/orbital.hpp"
#include "cohsim/potential.hpp"

namespace cohsim {

/// Time-stepping parameters for one propagation. `potential` is non-owning
/// and must outlive the propagation.
struct PropagationPlan {
  double dt = 1e-3;
  long n_steps = 0;
  int record_every = 1;
  const Potential* potential = nullptr;
};

struct Snapshot {
  double t;
  Orbital orbital;
};

/// Second-order Strang split-step propagator i d/dt psi = (-1/2 d^2/dx^2 + V) psi.
/// Time-dependent potentials are sampled once per step at the midpoint
/// t + dt/2 and reused for both potential half-steps. With grid.periodic
/// false the step runs on a doubled domain with the field continued as an
/// odd function about x_min (and the potential as an even one), which
/// enforces psi = 0 at the walls.
class SplitStepPropagator {
 public:
  SplitStepPropagator(const Grid1D& grid, const Potential& potential, double dt);

  /// Advances psi from t to t+dt in place. Throws NumericalError when the
  /// norm leaves [1-1e-6, 1+1e-6] or turns non-finite (dt too large or
  /// potential mis-scaled).
  void step(std::vector<Complex>& psi, double t);

  const Grid1D& grid() const { return grid_; }
  double dt() const { return dt_; }

 private:
  void refresh_phases(double t_mid);

  Grid1D grid_;
  const Potential* potential_;
  double dt_;
  int nx_;        // physical points
  int nbuf_;      // nx (periodic) or 2*nx (hard wall)
  Fft1D fft_;
  bool static_potential_;
  bool phases_ready_ = false;
  double last_tmid_ = 0.0;
  std::vector<double> vsamp_;
  std::vector<Complex> kin_phase_;
  std::vector<Complex> half_phase_;
  std::vector<Complex> buf_;
};

/// Evolves a normalized orbital over plan.n_steps steps starting at t0.
/// Returns snapshots at t0 and then after every record_every steps; each
/// snapshot is normalized within 1e-10.
std::vector<Snapshot> split_step_evolve(const Orbital& phi,
                                        const PropagationPlan& plan,
                                        double t0 = 0.0);

}  // namespace cohsim
