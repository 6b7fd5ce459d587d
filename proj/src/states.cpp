#include "cohsim/states.hpp"

#include <cmath>
#include <iostream>
#include <numeric>

#include <Eigen/Dense>

#include "cohsim/errors.hpp"

namespace cohsim {

std::string to_string(StateKind kind) {
  switch (kind) {
    case StateKind::SF: return "SF";
    case StateKind::MI: return "MI";
    case StateKind::NOON: return "NOON";
    case StateKind::Mixture: return "Mixture";
  }
  return "?";
}

int ManyBodyState::total_particles() const {
  switch (kind) {
    case StateKind::MI:
      return std::accumulate(occupancies.begin(), occupancies.end(), 0);
    case StateKind::SF:
    case StateKind::NOON:     // N per branch
    case StateKind::Mixture:  // N in whichever component
      return occupancies.empty() ? 0 : occupancies.front();
  }
  return 0;
}

bool gaussian_truncated(const Grid1D& grid, double center, double width_exponent) {
  const double width = 1.0 / std::sqrt(width_exponent);
  return center - grid.x_min < 3.0 * width || grid.x_max - center < 3.0 * width;
}

Orbital gaussian_orbital(const Grid1D& grid, double center, double width_exponent) {
  if (!(width_exponent > 0.0))
    throw ConfigError("gaussian_orbital: width exponent must be positive");
  if (center <= grid.x_min || center >= grid.x_max)
    throw ConfigError("gaussian_orbital: center outside grid interior");
  if (gaussian_truncated(grid, center, width_exponent))
    std::cerr << "cohsim: warning: gaussian at " << center
              << " is within 3 widths of the box boundary (truncated)\n";
  std::vector<Complex> v(grid.n);
  for (int j = 0; j < grid.n; ++j) {
    const double u = grid.x(j) - center;
    v[j] = std::exp(-width_exponent * u * u);
  }
  return make_orbital(grid, std::move(v), true);
}

PairDecomposition pair_decomposition(const Orbital& phi_L, const Orbital& phi_R) {
  const Complex s_c = inner_product(phi_L, phi_R);
  if (std::abs(s_c.imag()) > 1e-10)
    throw ConfigError("pair_decomposition: orbitals must have a real overlap");
  const double s = s_c.real();
  if (std::abs(s) >= 1.0 - 1e-12)
    throw ConfigError("pair_decomposition: degenerate orbitals (|<L|R>| -> 1)");

  PairDecomposition out;
  out.overlap_s = s;
  out.lambda_plus = 1.0 / std::sqrt(2.0 * (1.0 + s));
  out.lambda_minus = 1.0 / std::sqrt(2.0 * (1.0 - s));

  const int n = phi_L.grid.n;
  std::vector<Complex> vp(n), vm(n);
  for (int j = 0; j < n; ++j) {
    vp[j] = out.lambda_plus * (phi_L.values[j] + phi_R.values[j]);
    vm[j] = out.lambda_minus * (phi_L.values[j] - phi_R.values[j]);
  }
  out.phi_plus = make_orbital(phi_L.grid, std::move(vp), false);
  out.phi_minus = make_orbital(phi_L.grid, std::move(vm), false);
  return out;
}

namespace {

void require_orthonormal(const std::vector<Orbital>& orbs, const char* what) {
  for (size_t i = 0; i < orbs.size(); ++i)
    for (size_t j = i; j < orbs.size(); ++j) {
      const Complex s = inner_product(orbs[i], orbs[j]);
      const double target = (i == j) ? 1.0 : 0.0;
      if (std::abs(s - target) > 1e-8)
        throw ConfigError(std::string(what) +
                          ": orbitals must be orthonormal within 1e-8");
    }
}

}  // namespace

ManyBodyState build_state(StateKind kind, std::vector<Orbital> orbitals,
                          std::vector<int> occupancies, double noon_phase) {
  if (occupancies.empty()) occupancies.assign(orbitals.size(), 1);
  for (int n : occupancies)
    if (n < 1) throw ConfigError("build_state: occupancies must be positive");

  switch (kind) {
    case StateKind::SF:
      if (orbitals.size() != 1 || occupancies.size() != 1)
        throw ConfigError("build_state: SF takes exactly one orbital");
      break;
    case StateKind::MI:
      if (orbitals.size() < 2)
        throw ConfigError("build_state: MI needs at least two orbitals");
      if (occupancies.size() != orbitals.size())
        throw ConfigError("build_state: MI occupancy count mismatch");
      require_orthonormal(orbitals, "build_state(MI)");
      break;
    case StateKind::NOON:
      if (orbitals.size() != 2)
        throw ConfigError("build_state: NOON takes exactly two orbitals");
      if (occupancies.size() == 1) occupancies = {occupancies[0], occupancies[0]};
      if (occupancies.size() != 2 || occupancies[0] != occupancies[1])
        throw ConfigError("build_state: NOON branches must hold equal N");
      require_orthonormal(orbitals, "build_state(NOON)");
      break;
    case StateKind::Mixture:
      if (orbitals.size() != 2)
        throw ConfigError("build_state: Mixture takes exactly two orbitals");
      if (occupancies.size() == 1) occupancies = {occupancies[0], occupancies[0]};
      break;
  }
  for (const auto& o : orbitals)
    if (std::abs(o.norm() - 1.0) > 1e-8)
      throw ConfigError("build_state: orbitals must be normalized");
  return ManyBodyState{kind, std::move(orbitals), std::move(occupancies), noon_phase};
}

Orbital sf1_orbital_from_mi_density(const ManyBodyState& mi) {
  if (mi.kind != StateKind::MI || mi.orbitals.size() != 2)
    throw ConfigError("sf1_orbital_from_mi_density: needs a two-orbital MI state");
  const auto& a = mi.orbitals[0];
  const auto& b = mi.orbitals[1];
  std::vector<Complex> v(a.grid.n);
  for (int j = 0; j < a.grid.n; ++j) {
    const double rho = 0.5 * (std::norm(a.values[j]) + std::norm(b.values[j]));
    v[j] = std::sqrt(rho);
  }
  // No renormalization: the MI density already integrates to 1, and the
  // pointwise density match is part of the contract.
  return make_orbital(a.grid, std::move(v), false);
}

std::vector<Orbital> lowdin_orthonormalize(const std::vector<Orbital>& orbitals) {
  const int m = static_cast<int>(orbitals.size());
  if (m == 0) return {};
  const Grid1D& grid = orbitals[0].grid;

  Eigen::MatrixXcd S(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) S(i, j) = inner_product(orbitals[i], orbitals[j]);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(S);
  if (es.info() != Eigen::Success)
    throw NumericalError("lowdin: eigendecomposition failed");
  const auto& ev = es.eigenvalues();
  if (ev.minCoeff() < 1e-12)
    throw NumericalError("lowdin: overlap matrix numerically singular");
  Eigen::MatrixXcd s_inv_half =
      es.eigenvectors() * ev.cwiseInverse().cwiseSqrt().asDiagonal() *
      es.eigenvectors().adjoint();

  std::vector<Orbital> out(m);
  for (int j = 0; j < m; ++j) {
    std::vector<Complex> v(grid.n, Complex(0.0));
    for (int i = 0; i < m; ++i) {
      const Complex c = s_inv_half(i, j);
      for (int p = 0; p < grid.n; ++p) v[p] += c * orbitals[i].values[p];
    }
    out[j] = make_orbital(grid, std::move(v), false);
  }
  return out;
}

}  // namespace cohsim
