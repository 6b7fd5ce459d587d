#pragma once

#include <complex>
#include <mutex>

#include <fftw3.h>

namespace cohsim {

/// Serializes FFTW plan creation/destruction (plan functions are not
/// thread safe; execution via the new-array interface is).
std::mutex& fftw_plan_mutex();

/// In-place complex 1D FFT pair of fixed size. Plans are created with
/// FFTW_ESTIMATE so planning is deterministic run to run.
class Fft1D {
 public:
  explicit Fft1D(int n);
  ~Fft1D();
  Fft1D(const Fft1D&) = delete;
  Fft1D& operator=(const Fft1D&) = delete;

  int size() const { return n_; }

  /// Unnormalized transforms; a forward+backward round trip scales by n.
  void forward(std::complex<double>* data) const;
  void backward(std::complex<double>* data) const;

 private:
  int n_;
  fftw_plan fwd_;
  fftw_plan bwd_;
};

}  // namespace cohsim
