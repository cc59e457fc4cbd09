// Copyright 2026 tfadapt authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Thin complex-to-complex FFTW wrapper with a per-size plan cache.
// Forward: X[l] = sum_t x[t] e^{-2pi i l t / N}. Backward is unnormalized.

#ifndef TFA_FFT_HPP
#define TFA_FFT_HPP

#include <fftw3.h>

#include <complex>
#include <map>
#include <mutex>
#include <vector>

namespace tfa {
namespace fft {

namespace detail {

struct PlanPair {
  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;
  std::size_t size = 0;
  ~PlanPair() {
    if (forward) fftw_destroy_plan(forward);
    if (backward) fftw_destroy_plan(backward);
  }
};

// FFTW planning is not thread safe; execution via fftw_execute_dft is.
inline PlanPair& plans_for(std::size_t n) {
  static std::map<std::size_t, PlanPair> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(n);
  if (it == cache.end()) {
    std::vector<std::complex<double>> tmp(n);
    auto* p = reinterpret_cast<fftw_complex*>(tmp.data());
    PlanPair& pp = cache[n];
    pp.size = n;
    pp.forward = fftw_plan_dft_1d(static_cast<int>(n), p, p, FFTW_FORWARD,
                                  FFTW_ESTIMATE | FFTW_UNALIGNED);
    pp.backward = fftw_plan_dft_1d(static_cast<int>(n), p, p, FFTW_BACKWARD,
                                   FFTW_ESTIMATE | FFTW_UNALIGNED);
    return pp;
  }
  return it->second;
}

}  // namespace detail

/// In-place forward DFT.
inline void forward(std::vector<std::complex<double>>& x) {
  auto& pp = detail::plans_for(x.size());
  auto* p = reinterpret_cast<fftw_complex*>(x.data());
  fftw_execute_dft(pp.forward, p, p);
}

/// In-place unnormalized inverse DFT: x[t] = sum_l X[l] e^{+2pi i l t / N}.
inline void backward(std::vector<std::complex<double>>& x) {
  auto& pp = detail::plans_for(x.size());
  auto* p = reinterpret_cast<fftw_complex*>(x.data());
  fftw_execute_dft(pp.backward, p, p);
}

/// Normalized inverse DFT.
inline void inverse(std::vector<std::complex<double>>& x) {
  backward(x);
  const double scale = 1.0 / static_cast<double>(x.size());
  for (auto& v : x) v *= scale;
}

}  // namespace fft
}  // namespace tfa

#endif  // TFA_FFT_HPP
