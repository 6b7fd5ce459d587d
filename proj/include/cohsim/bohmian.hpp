#pragma once

#include <vector>

#include "cohsim/states.hpp"

namespace cohsim {

/// Bohm quantum potential q(x) and force f(x) = -dq/dx on a grid, with a
/// validity mask (density above threshold, full stencil support). For even
/// densities q is even, f odd, f(0) = 0.
struct BohmField {
  Grid1D grid;
  std::vector<double> q;
  std::vector<double> f;
  std::vector<bool> mask_q;
  std::vector<bool> mask_f;
  StateKind state_kind = StateKind::SF;
};

/// Fourth-order centered second-difference stencil used by the Bohm
/// pipeline; entries without full stencil support are flagged invalid.
void fd_second_derivative(std::span<const double> f, double h,
                          std::vector<double>& out, std::vector<bool>& valid);

/// Q = -1/2 R''/R for a single orbital, R = |phi|; finite differences on the
/// amplitude (signed amplitude for real orbitals, which continues smoothly
/// through nodes), masked where rho <= eps_rel * max(rho). f = -dQ/dx.
BohmField quantum_potential_single(const Orbital& phi, double eps_rel = 1e-8);

/// Fills f = -dq/dx of an existing field (centered differences on the mask).
void bohm_force(BohmField& field);

/// Brute-force two-particle configuration-space pipeline: builds
/// Psi(x1,x2) on a decimated grid (at most max_points per axis), evaluates
/// Q = -1/2 (d1^2 + d2^2) R / R by finite differences, and averages
/// q(x1) = integral Q |Psi|^2 dx2 / rho(x1) on the mask. Supports SF
/// (treated as a 2-particle product; this is the product-state oracle),
/// two-orbital MI, NOON (N=2), and Mixture.
BohmField two_body_bohm(const ManyBodyState& state, double eps_rel = 1e-8,
                        int max_points = 512);

/// Averaged one-body Bohm potential per state kind:
///   SF (any N): q = Q_single + (N-1) <Q>, so the force equals the
///     single-orbital force; computed analytically.
///   two-particle MI / NOON / Mixture: two_body_bohm pipeline.
/// MI states with 3+ orbitals are unsupported.
BohmField averaged_quantum_potential(const ManyBodyState& state,
                                     double eps_rel = 1e-8,
                                     int max_points = 512);

}  // namespace cohsim
