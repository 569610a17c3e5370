#include "gib/fft.hpp"

#include <fftw3.h>

#include <cstring>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace gib {

namespace {
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

RealFft::RealFft(int n) : n_(n) {
  if (n < 2) throw std::invalid_argument("RealFft: size must be at least 2");
  real_buf_ = fftw_alloc_real(static_cast<std::size_t>(n));
  auto* cb = fftw_alloc_complex(static_cast<std::size_t>(n / 2 + 1));
  cplx_buf_ = cb;
  std::lock_guard<std::mutex> lock(planner_mutex());
  fwd_plan_ = fftw_plan_dft_r2c_1d(n, real_buf_, cb, FFTW_ESTIMATE);
  inv_plan_ = fftw_plan_dft_c2r_1d(n, cb, real_buf_, FFTW_ESTIMATE);
}

RealFft::~RealFft() {
  std::lock_guard<std::mutex> lock(planner_mutex());
  fftw_destroy_plan(static_cast<fftw_plan>(fwd_plan_));
  fftw_destroy_plan(static_cast<fftw_plan>(inv_plan_));
  fftw_free(real_buf_);
  fftw_free(static_cast<fftw_complex*>(cplx_buf_));
}

void RealFft::forward(std::span<const double> in,
                      std::span<std::complex<double>> out) {
  std::memcpy(real_buf_, in.data(), sizeof(double) * in.size());
  fftw_execute(static_cast<fftw_plan>(fwd_plan_));
  std::memcpy(out.data(), cplx_buf_, sizeof(fftw_complex) * out.size());
}

void RealFft::inverse(std::span<const std::complex<double>> in,
                      std::span<double> out) {
  std::memcpy(cplx_buf_, in.data(), sizeof(fftw_complex) * in.size());
  fftw_execute(static_cast<fftw_plan>(inv_plan_));
  const double scale = 1.0 / static_cast<double>(n_);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = real_buf_[i] * scale;
}

RealFft& fft_for(int n) {
  thread_local std::map<int, std::unique_ptr<RealFft>> cache;
  auto it = cache.find(n);
  if (it == cache.end())
    it = cache.emplace(n, std::make_unique<RealFft>(n)).first;
  return *it->second;
}

}  // namespace gib
