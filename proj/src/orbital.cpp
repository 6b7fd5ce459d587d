#include "cohsim/orbital.hpp"

#include <algorithm>
#include <cmath>

#include "cohsim/errors.hpp"
#include "cohsim/fft.hpp"

namespace cohsim {

double Orbital::norm() const {
  double s = 0.0;
  for (const auto& v : values) s += std::norm(v);
  return std::sqrt(s * grid.dx);
}

std::vector<double> Orbital::density() const {
  std::vector<double> rho(values.size());
  for (size_t j = 0; j < values.size(); ++j) rho[j] = std::norm(values[j]);
  return rho;
}

bool Orbital::is_real() const {
  double peak = 0.0, im = 0.0;
  for (const auto& v : values) {
    peak = std::max(peak, std::abs(v));
    im = std::max(im, std::abs(v.imag()));
  }
  return im <= 1e-12 * peak;
}

Orbital Orbital::decimated(int stride) const {
  Orbital out;
  out.grid = grid.decimated(stride);
  out.values.resize(out.grid.n);
  for (int j = 0; j < out.grid.n; ++j) out.values[j] = values[j * stride];
  return out;
}

Orbital make_orbital(const Grid1D& grid, std::vector<Complex> values,
                     bool normalize) {
  if (static_cast<int>(values.size()) != grid.n)
    throw ConfigError("make_orbital: sample count does not match grid");
  Orbital phi{grid, std::move(values)};
  const double n = phi.norm();
  if (!(n > 0.0) || !std::isfinite(n))
    throw ConfigError("make_orbital: zero or non-finite norm");
  if (normalize) {
    for (auto& v : phi.values) v /= n;
  } else if (std::abs(n - 1.0) > 1e-10) {
    throw ConfigError("make_orbital: input not normalized");
  }
  return phi;
}

Complex inner_product(const Orbital& a, const Orbital& b) {
  if (a.grid != b.grid) throw ConfigError("inner_product: grid mismatch");
  Complex s = 0.0;
  for (int j = 0; j < a.grid.n; ++j) s += std::conj(a.values[j]) * b.values[j];
  return s * a.grid.dx;
}

std::vector<Complex> second_derivative(const Orbital& phi) {
  const int n = phi.grid.n;
  Fft1D fft(n);
  std::vector<Complex> work = phi.values;
  fft.forward(work.data());
  const auto ks = phi.grid.wavenumbers();
  for (int j = 0; j < n; ++j) work[j] *= -ks[j] * ks[j] / n;
  fft.backward(work.data());
  return work;
}

double kinetic_energy(const Orbital& phi) {
  const int n = phi.grid.n;
  Fft1D fft(n);
  std::vector<Complex> work = phi.values;
  fft.forward(work.data());
  const auto ks = phi.grid.wavenumbers();
  double s = 0.0;
  for (int j = 0; j < n; ++j) s += 0.5 * ks[j] * ks[j] * std::norm(work[j]);
  return s * phi.grid.dx / n;
}

double total_energy(const Orbital& phi, std::span<const double> potential) {
  if (static_cast<int>(potential.size()) != phi.grid.n)
    throw ConfigError("total_energy: potential size mismatch");
  double pot = 0.0;
  for (int j = 0; j < phi.grid.n; ++j)
    pot += potential[j] * std::norm(phi.values[j]);
  return kinetic_energy(phi) + pot * phi.grid.dx;
}

}  // namespace cohsim
