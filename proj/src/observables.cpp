#include "cohsim/observables.hpp"

#include <algorithm>
#include <cmath>

#include "cohsim/errors.hpp"

namespace cohsim {

double DensityMatrix1B::trace() const {
  double t = 0.0;
  for (int j = 0; j < grid.n; ++j) t += values(j, j).real();
  return t * grid.dx;
}

double DensityMatrix1B::hermiticity_error() const {
  return (values - values.adjoint()).cwiseAbs().maxCoeff();
}

std::vector<std::pair<double, const Orbital*>> rdm_components(
    const ManyBodyState& state) {
  std::vector<std::pair<double, const Orbital*>> parts;
  switch (state.kind) {
    case StateKind::SF:
      parts.emplace_back(1.0, &state.orbitals[0]);
      break;
    case StateKind::MI: {
      const double total = state.total_particles();
      for (size_t k = 0; k < state.orbitals.size(); ++k)
        parts.emplace_back(static_cast<double>(state.occupancies[k]) / total,
                           &state.orbitals[k]);
      break;
    }
    case StateKind::NOON:
    case StateKind::Mixture:
      parts.emplace_back(0.5, &state.orbitals[0]);
      parts.emplace_back(0.5, &state.orbitals[1]);
      break;
  }
  return parts;
}

DensityMatrix1B one_body_rdm(const ManyBodyState& state, int stride) {
  const auto parts = rdm_components(state);
  const Grid1D sub = state.orbitals[0].grid.decimated(stride);
  DensityMatrix1B rdm{sub, Eigen::MatrixXcd::Zero(sub.n, sub.n)};
  for (const auto& [w, orb] : parts) {
    Eigen::VectorXcd v(sub.n);
    for (int j = 0; j < sub.n; ++j) v(j) = orb->values[j * stride];
    rdm.values.noalias() += w * v * v.adjoint();
  }
  return rdm;
}

std::vector<double> density(const ManyBodyState& state) {
  const auto parts = rdm_components(state);
  const int n = state.orbitals[0].grid.n;
  std::vector<double> rho(n, 0.0);
  for (const auto& [w, orb] : parts)
    for (int j = 0; j < n; ++j) rho[j] += w * std::norm(orb->values[j]);
  return rho;
}

std::vector<double> natural_occupations(const DensityMatrix1B& rdm) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rdm.values * rdm.grid.dx);
  if (es.info() != Eigen::Success)
    throw NumericalError("natural_occupations: eigendecomposition failed");
  std::vector<double> occ(es.eigenvalues().data(),
                          es.eigenvalues().data() + es.eigenvalues().size());
  std::sort(occ.rbegin(), occ.rend());
  return occ;
}

CorrelationField g1(const DensityMatrix1B& rdm, double eps_rel) {
  if (!(eps_rel > 0.0)) throw ConfigError("g1: eps_rel must be positive");
  const int n = rdm.grid.n;
  std::vector<double> rho(n);
  double rho_max = 0.0;
  for (int j = 0; j < n; ++j) {
    rho[j] = rdm.values(j, j).real();
    rho_max = std::max(rho_max, rho[j]);
  }
  const double eps = eps_rel * rho_max;

  CorrelationField out{rdm.grid, Eigen::MatrixXcd::Zero(n, n),
                       Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic>::Constant(
                           n, n, false)};
  for (int i = 0; i < n; ++i) {
    if (rho[i] <= eps) continue;
    for (int j = 0; j < n; ++j) {
      if (rho[j] <= eps) continue;
      out.values(i, j) = rdm.values(i, j) / std::sqrt(rho[i] * rho[j]);
      out.mask(i, j) = true;
    }
  }
  return out;
}

double position_variance(std::span<const double> rho, const Grid1D& grid) {
  double m0 = 0.0, m1 = 0.0, m2 = 0.0;
  for (int j = 0; j < grid.n; ++j) {
    const double x = grid.x(j);
    m0 += rho[j];
    m1 += x * rho[j];
    m2 += x * x * rho[j];
  }
  if (!(m0 > 0.0)) throw NumericalError("position_variance: empty density");
  m1 /= m0;
  m2 /= m0;
  return m2 - m1 * m1;
}

double trapped_fraction(std::span<const double> rho, const Grid1D& grid,
                        const IntervalSet& region) {
  double s = 0.0;
  for (const auto& [lo, hi] : region) {
    if (!(hi > lo)) continue;  // empty or inverted interval contributes 0
    for (int j = 0; j < grid.n; ++j) {
      const double x = grid.x(j);
      if (x >= lo && x < hi) s += rho[j];
    }
  }
  return s * grid.dx;
}

}  // namespace cohsim
