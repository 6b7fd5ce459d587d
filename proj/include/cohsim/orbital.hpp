#pragma once

#include <complex>
#include <vector>

#include "cohsim/grid.hpp"

namespace cohsim {

using Complex = std::complex<double>;

/// Complex single-particle wavefunction sampled on a Grid1D. Kept
/// L2-normalized (integral of |phi|^2 dx = 1) by the factory functions
/// and by propagation.
struct Orbital {
  Grid1D grid;
  std::vector<Complex> values;

  /// sqrt(integral |phi|^2 dx)
  double norm() const;

  /// Probability density |phi_j|^2.
  std::vector<double> density() const;

  /// True when the imaginary part is negligible relative to the peak
  /// amplitude (tolerance 1e-12 relative).
  bool is_real() const;

  /// Every stride-th sample on the matching decimated grid.
  Orbital decimated(int stride) const;
};

/// Builds an orbital from samples; normalizes when `normalize` is set,
/// otherwise requires unit norm within 1e-10.
Orbital make_orbital(const Grid1D& grid, std::vector<Complex> values,
                     bool normalize = true);

/// <a|b> = integral conj(a) b dx.
Complex inner_product(const Orbital& a, const Orbital& b);

/// d^2/dx^2 by spectral differentiation (exact for band-limited fields).
std::vector<Complex> second_derivative(const Orbital& phi);

/// <phi| -1/2 d^2/dx^2 |phi>, spectral.
double kinetic_energy(const Orbital& phi);

/// <phi| -1/2 d^2/dx^2 + V |phi> for a sampled potential.
double total_energy(const Orbital& phi, std::span<const double> potential);

}  // namespace cohsim
