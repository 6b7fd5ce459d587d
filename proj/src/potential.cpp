#include "cohsim/potential.hpp"

#include <cmath>

#include "cohsim/errors.hpp"

namespace cohsim {

std::string to_string(PotentialKind kind) {
  switch (kind) {
    case PotentialKind::Free: return "free";
    case PotentialKind::SquareWell: return "square_well";
    case PotentialKind::SquareBarrier: return "square_barrier";
    case PotentialKind::Step: return "step";
    case PotentialKind::TripleWell: return "triple_well";
    case PotentialKind::TripleWellDip: return "triple_well_dip";
    case PotentialKind::DrivenLattice: return "driven_lattice";
    case PotentialKind::CustomTable: return "custom_table";
  }
  return "?";
}

Potential::Potential(PotentialSpec spec) : spec_(std::move(spec)) {
  switch (spec_.kind) {
    case PotentialKind::SquareWell:
    case PotentialKind::SquareBarrier:
      if (!(spec_.edge > 0.0))
        throw ConfigError("potential: well/barrier half-width must be positive");
      break;
    case PotentialKind::TripleWell:
    case PotentialKind::TripleWellDip:
      if (!(spec_.lattice_wavenumber != 0.0))
        throw ConfigError("potential: lattice wavenumber must be nonzero");
      if (spec_.kind == PotentialKind::TripleWellDip && !(spec_.dip_width > 0.0))
        throw ConfigError("potential: dip width must be positive");
      break;
    case PotentialKind::DrivenLattice:
      if (!(spec_.lattice_wavenumber != 0.0))
        throw ConfigError("potential: lattice wavenumber must be nonzero");
      if (!(spec_.drive_frequency != 0.0))
        throw ConfigError("potential: drive frequency must be nonzero");
      break;
    case PotentialKind::CustomTable:
      if (spec_.table.empty())
        throw ConfigError("potential: custom table is empty");
      break;
    default:
      break;
  }
}

double Potential::operator()(double x, double t) const {
  const auto& s = spec_;
  switch (s.kind) {
    case PotentialKind::Free:
      return 0.0;
    case PotentialKind::SquareWell:
      return std::abs(x) < s.edge ? -s.height : 0.0;
    case PotentialKind::SquareBarrier:
      return std::abs(x) < s.edge ? s.height : 0.0;
    case PotentialKind::Step:
      return x > 0.0 ? s.height : 0.0;
    case PotentialKind::TripleWell: {
      const double u = std::sin(s.lattice_wavenumber * x);
      return s.lattice_amplitude * u * u;
    }
    case PotentialKind::TripleWellDip: {
      const double u = std::sin(s.lattice_wavenumber * x);
      const double r = x / s.dip_width;
      return s.lattice_amplitude * u * u - s.dip_depth * std::exp(-r * r);
    }
    case PotentialKind::DrivenLattice: {
      const double u = std::sin(s.lattice_wavenumber * x +
                                s.drive_amplitude * std::sin(s.drive_frequency * t));
      return s.lattice_amplitude * u * u;
    }
    case PotentialKind::CustomTable:
      return 0.0;  // handled in sample(); pointwise eval undefined off-grid
  }
  return 0.0;
}

bool Potential::time_dependent() const {
  return spec_.kind == PotentialKind::DrivenLattice;
}

void Potential::sample(const Grid1D& grid, double t, std::vector<double>& out) const {
  out.resize(grid.n);
  if (spec_.kind == PotentialKind::CustomTable) {
    if (static_cast<int>(spec_.table.size()) != grid.n)
      throw ConfigError("potential: custom table size does not match grid");
    out = spec_.table;
    return;
  }
  for (int j = 0; j < grid.n; ++j) out[j] = (*this)(grid.x(j), t);
}

Potential build_potential(PotentialSpec spec) { return Potential(std::move(spec)); }

}  // namespace cohsim
