#include "cohsim/fft.hpp"

#include <vector>

#include "cohsim/errors.hpp"

namespace cohsim {

std::mutex& fftw_plan_mutex() {
  static std::mutex m;
  return m;
}

Fft1D::Fft1D(int n) : n_(n) {
  if (n < 2) throw ConfigError("Fft1D: size must be >= 2");
  std::vector<std::complex<double>> scratch(n);
  auto* p = reinterpret_cast<fftw_complex*>(scratch.data());
  std::lock_guard<std::mutex> lock(fftw_plan_mutex());
  fwd_ = fftw_plan_dft_1d(n, p, p, FFTW_FORWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
  bwd_ = fftw_plan_dft_1d(n, p, p, FFTW_BACKWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
  if (!fwd_ || !bwd_) throw NumericalError("Fft1D: fftw plan creation failed");
}

Fft1D::~Fft1D() {
  std::lock_guard<std::mutex> lock(fftw_plan_mutex());
  fftw_destroy_plan(fwd_);
  fftw_destroy_plan(bwd_);
}

void Fft1D::forward(std::complex<double>* data) const {
  auto* p = reinterpret_cast<fftw_complex*>(data);
  fftw_execute_dft(fwd_, p, p);
}

void Fft1D::backward(std::complex<double>* data) const {
  auto* p = reinterpret_cast<fftw_complex*>(data);
  fftw_execute_dft(bwd_, p, p);
}

}  // namespace cohsim
