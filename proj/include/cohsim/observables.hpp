#pragma once

#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "cohsim/states.hpp"

namespace cohsim {

/// One-body reduced density matrix rho1(x, x') on a (possibly decimated)
/// grid. Hermitian, positive semidefinite, trace integral 1.
struct DensityMatrix1B {
  Grid1D grid;
  Eigen::MatrixXcd values;

  double trace() const;
  double hermiticity_error() const;
};

/// First-order coherence g1(x,x') = rho1 / sqrt(rho(x) rho(x')), defined on
/// the mask where both densities exceed the threshold. Masked entries hold 0
/// with mask = false (flagged, never NaN).
struct CorrelationField {
  Grid1D grid;
  Eigen::MatrixXcd values;
  Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic> mask;
};

/// Closed-form RDM of a non-interacting state:
///   SF      -> phi0(x) phi0*(x')
///   MI      -> sum_k (n_k/N) chi_k(x) chi_k*(x')
///   NOON    -> (|phi_L><phi_L| + |phi_R><phi_R|)/2
///   Mixture -> (|phi_L><phi_L| + |phi_R><phi_R|)/2
/// `stride` evaluates on a decimated sub-grid (diagnostic outputs).
DensityMatrix1B one_body_rdm(const ManyBodyState& state, int stride = 1);

/// Single-particle density rho(x) = rho1(x,x) on the state's full grid.
std::vector<double> density(const ManyBodyState& state);

/// Weights and orbitals entering the RDM sum (n_k normalized to 1).
std::vector<std::pair<double, const Orbital*>> rdm_components(
    const ManyBodyState& state);

/// Natural occupations: eigenvalues of the RDM kernel (descending).
std::vector<double> natural_occupations(const DensityMatrix1B& rdm);

/// g1 on the mask rho(x) > eps, rho(x') > eps with eps = eps_rel * max(rho).
CorrelationField g1(const DensityMatrix1B& rdm, double eps_rel = 1e-8);

/// Full variance <x^2> - <x>^2 of a normalized density.
double position_variance(std::span<const double> rho, const Grid1D& grid);

/// Inclusive-exclusive interval set [lo, hi) on the sample points;
/// quadrature is the uniform Riemann sum.
using IntervalSet = std::vector<std::pair<double, double>>;

/// Fraction of the density inside the region; empty region -> 0.
double trapped_fraction(std::span<const double> rho, const Grid1D& grid,
                        const IntervalSet& region);

}  // namespace cohsim
