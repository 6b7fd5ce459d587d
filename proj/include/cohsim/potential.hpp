#pragma once

#include <string>
#include <vector>

#include "cohsim/grid.hpp"

namespace cohsim {

enum class PotentialKind {
  Free,
  SquareWell,
  SquareBarrier,
  Step,
  TripleWell,
  TripleWellDip,
  DrivenLattice,
  CustomTable,
};

std::string to_string(PotentialKind kind);

/// Declarative description of V(x,t). Square shapes are sharp at grid
/// resolution (one-cell transitions). Units: hbar = m = 1.
struct PotentialSpec {
  PotentialKind kind = PotentialKind::Free;

  double height = 0.0;       // V0: barrier height / well depth magnitude / step height
  double edge = 1.0;         // half-width a of well/barrier; step sits at x = 0
  double lattice_amplitude = 3.0;
  double lattice_wavenumber = 0.5235987755982988;  // pi/6
  double drive_amplitude = 0.25;                   // phase modulation depth
  double drive_frequency = 30.0;
  double dip_depth = 2.0;    // gaussian dip magnitude added to the lattice
  double dip_width = 1.0;
  std::vector<double> table;  // CustomTable: one sample per grid point
};

/// Evaluable potential; validates its parameters on construction.
class Potential {
 public:
  explicit Potential(PotentialSpec spec);

  double operator()(double x, double t) const;
  bool time_dependent() const;
  const PotentialSpec& spec() const { return spec_; }

  /// Samples V(., t) on the grid.
  void sample(const Grid1D& grid, double t, std::vector<double>& out) const;

 private:
  PotentialSpec spec_;
};

Potential build_potential(PotentialSpec spec);

}  // namespace cohsim
