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

// Analysis and synthesis against an NsgfPlan.
//
// Coefficients use an absolute-time phase convention:
//   c[k][l] = sum_t f(t) g_k(t - a_k) e^{-2 pi i l t / M_k}
// so atoms from plans with different scales share one global frequency
// reference. Per frame this is an M_k-point FFT of the windowed slice times
// e^{-2 pi i l a_k / M_k}.

#ifndef TFA_TRANSFORM_HPP
#define TFA_TRANSFORM_HPP

#include <cmath>
#include <complex>
#include <memory>
#include <vector>

#include "tfa/error.hpp"
#include "tfa/fft.hpp"
#include "tfa/frame.hpp"
#include "tfa/signal.hpp"

namespace tfa {

using Complex = std::complex<double>;

/// Jagged coefficient array; row k holds M_k coefficients of plan element k.
struct CoefficientGrid {
  std::vector<std::vector<Complex>> rows;
  std::shared_ptr<const NsgfPlan> plan;

  void validate() const {
    if (!plan) throw Error(ErrorCode::kInvalidArgument, "grid has no plan");
    if (rows.size() != plan->size())
      throw Error(ErrorCode::kSizeMismatch, "row count != plan element count");
    for (std::size_t k = 0; k < rows.size(); ++k)
      if (rows[k].size() != plan->elements[k].channels)
        throw Error(ErrorCode::kSizeMismatch, "row length != channel count");
  }
};

namespace detail {

inline Complex phase_factor(double turns) {
  // turns in units of full revolutions
  const double a = -2.0 * M_PI * turns;
  return {std::cos(a), std::sin(a)};
}

template <typename Sample>
CoefficientGrid analyze_impl(const std::vector<Sample>& f,
                             std::shared_ptr<const NsgfPlan> plan) {
  plan->validate();
  if (f.size() != plan->signal_length)
    throw Error(ErrorCode::kSizeMismatch, "plan/signal length mismatch");
  const std::size_t n = f.size();
  CoefficientGrid grid;
  grid.plan = plan;
  grid.rows.reserve(plan->size());
  for (const auto& el : plan->elements) {
    const std::size_t m = el.channels;
    std::vector<Complex> buf(m, Complex{0.0, 0.0});
    for (std::size_t j = 0; j < el.window.size(); ++j)
      buf[j] = Complex(f[(el.position + j) % n]) * el.window.values[j];
    fft::forward(buf);
    // absolute-time phase reference
    for (std::size_t l = 0; l < m; ++l)
      buf[l] *= phase_factor(static_cast<double>(l) *
                             static_cast<double>(el.position) /
                             static_cast<double>(m));
    grid.rows.push_back(std::move(buf));
  }
  return grid;
}

}  // namespace detail

inline CoefficientGrid analyze(const Signal& f,
                               std::shared_ptr<const NsgfPlan> plan) {
  return detail::analyze_impl(f.samples, plan);
}

/// Complex-signal variant (used by tests and diagnostics).
inline CoefficientGrid analyze(const std::vector<Complex>& f,
                               std::shared_ptr<const NsgfPlan> plan) {
  return detail::analyze_impl(f, plan);
}

/// Adds the dual-frame expansion of `coeffs` into `out` (length N complex).
inline void accumulate_synthesis(const CoefficientGrid& coeffs,
                                 const DualPlan& dual,
                                 std::vector<Complex>& out) {
  coeffs.validate();
  if (coeffs.plan.get() != dual.plan.get())
    throw Error(ErrorCode::kSizeMismatch, "grid/plan mismatch");
  const NsgfPlan& plan = *dual.plan;
  const std::size_t n = plan.signal_length;
  if (out.size() != n)
    throw Error(ErrorCode::kSizeMismatch, "output buffer length mismatch");
  std::vector<Complex> buf;
  for (std::size_t k = 0; k < plan.size(); ++k) {
    const auto& el = plan.elements[k];
    const std::size_t m = el.channels;
    buf = coeffs.rows[k];
    // undo the absolute-time phase, then unnormalized inverse FFT gives
    // x[j] = sum_l c[k][l] e^{+2 pi i l (a_k + j) / m}
    for (std::size_t l = 0; l < m; ++l)
      buf[l] *= std::conj(detail::phase_factor(static_cast<double>(l) *
                                               static_cast<double>(el.position) /
                                               static_cast<double>(m)));
    fft::backward(buf);
    const auto& d = dual.duals[k];
    for (std::size_t j = 0; j < d.size(); ++j)
      out[(el.position + j) % n] += buf[j % m] * d[j];
  }
}

inline std::vector<Complex> synthesize_complex(const CoefficientGrid& coeffs,
                                               const DualPlan& dual) {
  std::vector<Complex> out(dual.plan->signal_length, Complex{0.0, 0.0});
  accumulate_synthesis(coeffs, dual, out);
  return out;
}

/// Real-signal synthesis; the imaginary residue (for coefficients that came
/// from a real analysis) is discarded. Pass `imag_residue` to inspect it.
inline Signal synthesize(const CoefficientGrid& coeffs, const DualPlan& dual,
                         double* imag_residue = nullptr) {
  auto y = synthesize_complex(coeffs, dual);
  std::vector<double> re(y.size());
  double worst = 0.0;
  for (std::size_t t = 0; t < y.size(); ++t) {
    re[t] = y[t].real();
    worst = std::max(worst, std::abs(y[t].imag()));
  }
  if (imag_residue) *imag_residue = worst;
  return Signal(std::move(re), dual.plan->sample_rate);
}

}  // namespace tfa

#endif  // TFA_TRANSFORM_HPP
