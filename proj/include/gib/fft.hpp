#pragma once

#include <complex>
#include <span>

// Real-to-complex FFT wrapper around FFTW.
//
// Plans are built with FFTW_ESTIMATE so the algorithm choice (and therefore
// the rounding) is reproducible run to run. The planner is not thread-safe;
// plan creation is serialized behind a global mutex and each thread keeps its
// own plan/buffer set (see fft_for), so execution needs no locking.

namespace gib {

class RealFft {
 public:
  explicit RealFft(int n);
  ~RealFft();
  RealFft(const RealFft&) = delete;
  RealFft& operator=(const RealFft&) = delete;

  int size() const noexcept { return n_; }
  int spectrum_size() const noexcept { return n_ / 2 + 1; }

  // Unnormalized forward transform; out must have spectrum_size() entries.
  void forward(std::span<const double> in, std::span<std::complex<double>> out);
  // Inverse transform with 1/n normalization; out must have size() entries.
  void inverse(std::span<const std::complex<double>> in, std::span<double> out);

 private:
  int n_;
  double* real_buf_;
  void* cplx_buf_;  // fftw_complex*
  void* fwd_plan_;  // fftw_plan
  void* inv_plan_;
};

// Thread-local transform for the given size.
RealFft& fft_for(int n);

}  // namespace gib
