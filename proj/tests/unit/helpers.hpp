#pragma once

// Test-only oracles, independent of the library's closed-form paths:
// brute-force one-body RDMs by direct integration of two-body wavefunctions
// and an exact two-body split-step propagator on the configuration grid.

#include <complex>
#include <numbers>
#include <vector>

#include <Eigen/Dense>
#include <fftw3.h>

#include "cohsim/fft.hpp"
#include "cohsim/grid.hpp"
#include "cohsim/orbital.hpp"
#include "cohsim/potential.hpp"

namespace oracle {

using cohsim::Complex;
using cohsim::Grid1D;
using cohsim::Orbital;

/// Psi(x1,x2) = sum_k c_k a_k(x1) b_k(x2) as a dense matrix.
inline Eigen::MatrixXcd two_body_wavefunction(
    const std::vector<const Orbital*>& a, const std::vector<const Orbital*>& b,
    const std::vector<Complex>& coef) {
  const int n = a[0]->grid.n;
  Eigen::MatrixXcd psi = Eigen::MatrixXcd::Zero(n, n);
  for (size_t k = 0; k < coef.size(); ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        psi(i, j) += coef[k] * a[k]->values[i] * b[k]->values[j];
  return psi;
}

/// rho1(x,x') = integral Psi(x,y) conj(Psi(x',y)) dy by direct quadrature.
inline Eigen::MatrixXcd brute_force_rdm(const Eigen::MatrixXcd& psi, double dx) {
  return psi * psi.adjoint() * dx;
}

/// Exact two-body evolution under H = -1/2 (d1^2 + d2^2) + V(x1) + V(x2)
/// by Strang splitting with 2D FFTs; periodic box.
inline void evolve_two_body(Eigen::MatrixXcd& psi, const Grid1D& grid,
                            const cohsim::Potential& v, double dt, int n_steps) {
  const int n = grid.n;
  std::vector<double> vs;
  v.sample(grid, 0.0, vs);
  const auto ks = grid.wavenumbers();

  fftw_plan fwd, bwd;
  {
    std::lock_guard<std::mutex> lock(cohsim::fftw_plan_mutex());
    auto* p = reinterpret_cast<fftw_complex*>(psi.data());
    fwd = fftw_plan_dft_2d(n, n, p, p, FFTW_FORWARD, FFTW_ESTIMATE);
    bwd = fftw_plan_dft_2d(n, n, p, p, FFTW_BACKWARD, FFTW_ESTIMATE);
  }

  Eigen::MatrixXcd half(n, n), kin(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      half(i, j) = std::exp(Complex(0.0, -0.5 * dt * (vs[i] + vs[j])));
      kin(i, j) = std::exp(Complex(0.0, -0.5 * dt * (ks[i] * ks[i] + ks[j] * ks[j]))) /
                  (static_cast<double>(n) * n);
    }
  // Column-major Eigen: psi(i,j) at i + j*n; fftw sees a [n x n] row-major
  // array, so fftw's "row" index is Eigen's column j. kin/half are symmetric
  // in (i,j), so the layout mismatch is harmless.
  for (int s = 0; s < n_steps; ++s) {
    psi.array() *= half.array();
    fftw_execute(fwd);
    psi.array() *= kin.array();
    fftw_execute(bwd);
    psi.array() *= half.array();
  }
  {
    std::lock_guard<std::mutex> lock(cohsim::fftw_plan_mutex());
    fftw_destroy_plan(fwd);
    fftw_destroy_plan(bwd);
  }
}

/// 2x2 Loewdin S^{-1/2} closed form for a symmetric overlap s.
struct Lowdin2x2 {
  double a;  // diagonal coefficient
  double b;  // off-diagonal coefficient
};
inline Lowdin2x2 lowdin_2x2(double s) {
  const double u = 1.0 / std::sqrt(1.0 + s);
  const double v = 1.0 / std::sqrt(1.0 - s);
  return {0.5 * (u + v), 0.5 * (u - v)};
}

}  // namespace oracle
