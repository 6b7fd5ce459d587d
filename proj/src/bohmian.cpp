#include "cohsim/bohmian.hpp"

#include <algorithm>
#include <cmath>

#include "cohsim/errors.hpp"
#include "cohsim/observables.hpp"

namespace cohsim {

void fd_second_derivative(std::span<const double> f, double h,
                          std::vector<double>& out, std::vector<bool>& valid) {
  const int n = static_cast<int>(f.size());
  out.assign(n, 0.0);
  valid.assign(n, false);
  const double c = 1.0 / (12.0 * h * h);
  for (int j = 2; j < n - 2; ++j) {
    out[j] = c * (-f[j - 2] + 16.0 * f[j - 1] - 30.0 * f[j] + 16.0 * f[j + 1] -
                  f[j + 2]);
    valid[j] = true;
  }
}

namespace {

/// Signed amplitude for real fields (smooth through nodes), modulus otherwise.
std::vector<double> amplitude_of(const Orbital& phi) {
  std::vector<double> amp(phi.grid.n);
  if (phi.is_real()) {
    for (int j = 0; j < phi.grid.n; ++j) amp[j] = phi.values[j].real();
  } else {
    for (int j = 0; j < phi.grid.n; ++j) amp[j] = std::abs(phi.values[j]);
  }
  return amp;
}

}  // namespace

BohmField quantum_potential_single(const Orbital& phi, double eps_rel) {
  if (!(eps_rel > 0.0))
    throw ConfigError("quantum_potential_single: eps_rel must be positive");
  const int n = phi.grid.n;
  const auto amp = amplitude_of(phi);
  const auto rho = phi.density();
  const double eps = eps_rel * *std::max_element(rho.begin(), rho.end());

  std::vector<double> d2;
  std::vector<bool> stencil_ok;
  fd_second_derivative(amp, phi.grid.dx, d2, stencil_ok);

  BohmField field;
  field.grid = phi.grid;
  field.state_kind = StateKind::SF;
  field.q.assign(n, 0.0);
  field.mask_q.assign(n, false);
  for (int j = 0; j < n; ++j) {
    if (!stencil_ok[j] || rho[j] <= eps) continue;
    field.q[j] = -0.5 * d2[j] / amp[j];
    field.mask_q[j] = true;
  }
  bohm_force(field);
  return field;
}

void bohm_force(BohmField& field) {
  // 3-point centered gradient: exact for quadratic q, loses only one cell
  // at each mask edge, and mirror-symmetric errors cancel for even q.
  const int n = field.grid.n;
  const double c = 1.0 / (2.0 * field.grid.dx);
  field.f.assign(n, 0.0);
  field.mask_f.assign(n, false);
  for (int j = 1; j < n - 1; ++j) {
    if (!field.mask_q[j] || !field.mask_q[j - 1] || !field.mask_q[j + 1]) continue;
    field.f[j] = -c * (field.q[j + 1] - field.q[j - 1]);
    field.mask_f[j] = true;
  }
}

namespace {

struct TwoBodyAccum {
  std::vector<double> num;   // integral of Q |Psi|^2 dx2 (as -1/2 R lap R)
  std::vector<double> marg;  // integral of |Psi|^2 dx2
};

/// Accumulates the x2-integrals of -1/2 R (d1^2+d2^2) R and |Psi|^2 for a
/// product-form component a(x1) b(x2) + (optional symmetrized / phased
/// terms), given the already-built 2D amplitude.
void accumulate_two_body(const std::vector<double>& amp2,
                         const std::vector<double>& rho2, int n, double dx,
                         double weight, TwoBodyAccum& acc) {
  // 5-point second differences along both axes; rows/cols 0,1,n-2,n-1 are
  // excluded from the quadrature (fields there are vacuum-level in practice).
  const double c = 1.0 / (12.0 * dx * dx);
  for (int i = 2; i < n - 2; ++i) {
    double num_i = 0.0, marg_i = 0.0;
    const int row = i * n;
    for (int j = 2; j < n - 2; ++j) {
      const int id = row + j;
      const double lap1 = c * (-amp2[id - 2 * n] + 16.0 * amp2[id - n] -
                               30.0 * amp2[id] + 16.0 * amp2[id + n] -
                               amp2[id + 2 * n]);
      const double lap2 = c * (-amp2[id - 2] + 16.0 * amp2[id - 1] -
                               30.0 * amp2[id] + 16.0 * amp2[id + 1] -
                               amp2[id + 2]);
      num_i += -0.5 * amp2[id] * (lap1 + lap2);
      marg_i += rho2[id];
    }
    acc.num[i] += weight * num_i * dx;
    acc.marg[i] += weight * marg_i * dx;
  }
}

/// Builds amplitude and density of Psi(x1,x2) = sum_k c_k a_k(x1) b_k(x2)
/// from decimated orbitals; uses the signed field when Psi is real.
void build_component(const std::vector<std::vector<Complex>>& a,
                     const std::vector<std::vector<Complex>>& b,
                     const std::vector<Complex>& coef, int n,
                     std::vector<double>& amp2, std::vector<double>& rho2) {
  std::vector<Complex> psi_row(n);
  amp2.assign(static_cast<size_t>(n) * n, 0.0);
  rho2.assign(static_cast<size_t>(n) * n, 0.0);
  bool is_real = true;
  for (size_t k = 0; k < coef.size(); ++k)
    if (std::abs(coef[k].imag()) > 1e-14) is_real = false;
  if (is_real)
    for (size_t k = 0; k < a.size(); ++k)
      for (int j = 0; j < n && is_real; ++j)
        if (std::abs(a[k][j].imag()) > 1e-12 || std::abs(b[k][j].imag()) > 1e-12)
          is_real = false;

  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Complex psi = 0.0;
      for (size_t k = 0; k < coef.size(); ++k) psi += coef[k] * a[k][i] * b[k][j];
      const size_t id = static_cast<size_t>(i) * n + j;
      rho2[id] = std::norm(psi);
      amp2[id] = is_real ? psi.real() : std::abs(psi);
    }
  }
}

}  // namespace

BohmField two_body_bohm(const ManyBodyState& state, double eps_rel,
                        int max_points) {
  const Grid1D& fine = state.orbitals[0].grid;
  const int stride = decimation_stride(fine, max_points);
  const Grid1D sub = fine.decimated(stride);
  const int n = sub.n;

  std::vector<std::vector<Complex>> dec;
  for (const auto& orb : state.orbitals) dec.push_back(orb.decimated(stride).values);

  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  TwoBodyAccum acc{std::vector<double>(n, 0.0), std::vector<double>(n, 0.0)};
  std::vector<double> amp2, rho2;

  switch (state.kind) {
    case StateKind::SF:
      // 2-particle product of the condensate orbital (brute-force oracle).
      build_component({dec[0]}, {dec[0]}, {Complex(1.0)}, n, amp2, rho2);
      accumulate_two_body(amp2, rho2, n, sub.dx, 1.0, acc);
      break;
    case StateKind::MI: {
      if (state.orbitals.size() != 2 || state.total_particles() != 2)
        throw ConfigError("two_body_bohm: MI supported only as |11> over two orbitals");
      build_component({dec[0], dec[1]}, {dec[1], dec[0]},
                      {Complex(inv_sqrt2), Complex(inv_sqrt2)}, n, amp2, rho2);
      accumulate_two_body(amp2, rho2, n, sub.dx, 1.0, acc);
      break;
    }
    case StateKind::NOON: {
      if (state.total_particles() != 2)
        throw ConfigError("two_body_bohm: NOON supported only for N=2");
      const Complex phase = std::exp(Complex(0.0, state.noon_phase));
      build_component({dec[0], dec[1]}, {dec[0], dec[1]},
                      {Complex(inv_sqrt2), phase * inv_sqrt2}, n, amp2, rho2);
      accumulate_two_body(amp2, rho2, n, sub.dx, 1.0, acc);
      break;
    }
    case StateKind::Mixture: {
      if (state.total_particles() != 2)
        throw ConfigError("two_body_bohm: mixture supported only for N=2");
      // Incoherent average of the two product components.
      for (int k = 0; k < 2; ++k) {
        build_component({dec[k]}, {dec[k]}, {Complex(1.0)}, n, amp2, rho2);
        accumulate_two_body(amp2, rho2, n, sub.dx, 0.5, acc);
      }
      break;
    }
  }

  const double marg_max = *std::max_element(acc.marg.begin(), acc.marg.end());
  const double eps = eps_rel * marg_max;

  BohmField field;
  field.grid = sub;
  field.state_kind = state.kind;
  field.q.assign(n, 0.0);
  field.mask_q.assign(n, false);
  for (int i = 2; i < n - 2; ++i) {
    if (acc.marg[i] <= eps) continue;
    field.q[i] = acc.num[i] / acc.marg[i];
    field.mask_q[i] = true;
  }
  bohm_force(field);
  return field;
}

BohmField averaged_quantum_potential(const ManyBodyState& state, double eps_rel,
                                     int max_points) {
  if (state.kind == StateKind::SF) {
    BohmField field = quantum_potential_single(state.orbitals[0], eps_rel);
    field.state_kind = StateKind::SF;
    const int n_particles = state.total_particles();
    if (n_particles > 1) {
      // q(x) = Q(x) + (N-1) <Q>; additive constant, force unaffected.
      const auto rho = state.orbitals[0].density();
      double qbar = 0.0, w = 0.0;
      for (int j = 0; j < field.grid.n; ++j) {
        if (!field.mask_q[j]) continue;
        qbar += field.q[j] * rho[j];
        w += rho[j];
      }
      qbar /= w;
      for (int j = 0; j < field.grid.n; ++j)
        if (field.mask_q[j]) field.q[j] += (n_particles - 1) * qbar;
    }
    return field;
  }
  if (state.kind == StateKind::MI && state.orbitals.size() != 2)
    throw ConfigError(
        "averaged_quantum_potential: MI with 3+ distinct orbitals is unsupported");
  return two_body_bohm(state, eps_rel, max_points);
}

}  // namespace cohsim
