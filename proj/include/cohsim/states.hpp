#pragma once

#include <string>
#include <vector>

#include "cohsim/orbital.hpp"

namespace cohsim {

enum class StateKind { SF, MI, NOON, Mixture };

std::string to_string(StateKind kind);

/// Many-body state of non-interacting bosons described by its constituent
/// orbitals:
///   SF      — all N particles in one orbital phi0
///   MI      — Fock state, n_k particles in each of M orthonormal orbitals
///   NOON    — (|N,0> + e^{i phase}|0,N>)/sqrt(2) over an orthonormal pair
///   Mixture — 50/50 statistical mixture of all-left / all-right
struct ManyBodyState {
  StateKind kind = StateKind::SF;
  std::vector<Orbital> orbitals;
  std::vector<int> occupancies;
  double noon_phase = 0.0;

  int total_particles() const;
};

/// phi_+- = lambda_+- (phi_L +- phi_R) with lambda_+- = 1/sqrt(2(1 +- s)),
/// s = Re<phi_L|phi_R>.
struct PairDecomposition {
  Orbital phi_plus;
  Orbital phi_minus;
  double lambda_plus = 0.0;
  double lambda_minus = 0.0;
  double overlap_s = 0.0;
};

/// L2-normalized real Gaussian exp(-w (x-center)^2). Warns on stderr when
/// the center is within 3 widths (3/sqrt(w)) of a grid boundary.
Orbital gaussian_orbital(const Grid1D& grid, double center,
                         double width_exponent = 1.0);

/// True when a Gaussian at `center` would be truncated by the box.
bool gaussian_truncated(const Grid1D& grid, double center,
                        double width_exponent = 1.0);

/// Symmetric/antisymmetric combinations of two normalized orbitals.
/// Errors when the pair is degenerate (|s| -> 1).
PairDecomposition pair_decomposition(const Orbital& phi_L, const Orbital& phi_R);

/// Validated state construction; MI and NOON require orthonormal orbitals
/// (within 1e-8).
ManyBodyState build_state(StateKind kind, std::vector<Orbital> orbitals,
                          std::vector<int> occupancies, double noon_phase = 0.0);

/// Orbital of the uniform condensate with the same density as a two-orbital
/// MI state: phi0 = sqrt(rho_MI), real and nonnegative.
Orbital sf1_orbital_from_mi_density(const ManyBodyState& mi);

/// Symmetric (Loewdin, S^{-1/2}) orthonormalization. Preserves the span and
/// any mirror symmetry of the inputs; minimal displacement from the inputs.
std::vector<Orbital> lowdin_orthonormalize(const std::vector<Orbital>& orbitals);

}  // namespace cohsim
