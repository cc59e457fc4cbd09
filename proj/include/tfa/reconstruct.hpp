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

// Multi-band analysis-weighting reconstruction. Each band expands its
// weighted coefficients in its own dual frame with the weights divided back
// out where active; the band sums pass through one global FFT where every
// bin is divided by the number of active bands p(nu). For complementary
// binary masks p(nu) = 1 everywhere and the global pass is the identity.

#ifndef TFA_RECONSTRUCT_HPP
#define TFA_RECONSTRUCT_HPP

#include <cmath>
#include <functional>
#include <vector>

#include "tfa/band_weights.hpp"
#include "tfa/error.hpp"
#include "tfa/fft.hpp"
#include "tfa/signal.hpp"
#include "tfa/transform.hpp"

namespace tfa {

/// One band's contribution: weighted coefficients bound to their dual plan.
struct BandExpansion {
  CoefficientGrid coeffs;  // already weighted (w^p applied)
  DualPlan dual;
  std::size_t band = 0;
};

struct WeightedRecon {
  Signal signal;
  double dropped_energy = 0.0;  // energy found in p(nu) = 0 bins, zeroed
};

inline WeightedRecon reconstruct_weighted(const std::vector<BandExpansion>& bands,
                                          const BandWeightSet& weights) {
  if (bands.empty())
    throw Error(ErrorCode::kInvalidArgument, "no bands to reconstruct");
  const std::size_t n = bands.front().dual.plan->signal_length;
  const double fs = bands.front().dual.plan->sample_rate;
  for (const auto& b : bands)
    if (b.dual.plan->signal_length != n || b.dual.plan->sample_rate != fs)
      throw Error(ErrorCode::kSizeMismatch, "band signal dimensions differ");

  std::vector<Complex> acc(n, Complex{0.0, 0.0});
  for (const auto& b : bands) {
    b.coeffs.validate();
    const NsgfPlan& plan = *b.dual.plan;
    // divide the weights back out where active, zero elsewhere
    CoefficientGrid unweighted = b.coeffs;
    for (std::size_t k = 0; k < unweighted.rows.size(); ++k) {
      for (std::size_t l = 0; l < unweighted.rows[k].size(); ++l) {
        const double w = weights.weight(b.band, plan.bin_frequency(k, l));
        if (w >= weights.epsilon)
          unweighted.rows[k][l] /= w;
        else
          unweighted.rows[k][l] = 0.0;
      }
    }
    accumulate_synthesis(unweighted, b.dual, acc);
  }

  // global normalization by the active-band count p(nu)
  fft::forward(acc);
  double dropped = 0.0;
  for (std::size_t m = 0; m < n; ++m) {
    const std::size_t ma = std::min(m, n - m);
    const double nu = static_cast<double>(ma) * fs / static_cast<double>(n);
    const std::size_t active = count_active(weights, nu);
    if (active == 0) {
      dropped += std::norm(acc[m]) / static_cast<double>(n);
      acc[m] = 0.0;
    } else if (active > 1) {
      acc[m] /= static_cast<double>(active);
    }
  }
  fft::inverse(acc);

  std::vector<double> re(n);
  for (std::size_t t = 0; t < n; ++t) re[t] = acc[t].real();
  return {Signal(std::move(re), fs), dropped};
}

struct ReconError {
  double max_abs = 0.0;
  double rms = 0.0;
  Signal error_signal;
};

inline ReconError error_metrics(const Signal& original, const Signal& approx) {
  if (original.size() != approx.size())
    throw Error(ErrorCode::kSizeMismatch, "signal lengths differ");
  ReconError e;
  std::vector<double> diff(original.size());
  double sq = 0.0;
  for (std::size_t t = 0; t < diff.size(); ++t) {
    diff[t] = approx.samples[t] - original.samples[t];
    e.max_abs = std::max(e.max_abs, std::abs(diff[t]));
    sq += diff[t] * diff[t];
  }
  e.rms = std::sqrt(sq / diff.size());
  e.error_signal = Signal(std::move(diff), original.sample_rate);
  return e;
}

/// Fraction of `err` energy within +-band_hz of cut_hz (spectral view).
inline double error_energy_near_cut(const Signal& err, double cut_hz,
                                    double band_hz) {
  const std::size_t n = err.size();
  std::vector<Complex> spec(err.samples.begin(), err.samples.end());
  fft::forward(spec);
  double total = 0.0, near = 0.0;
  for (std::size_t m = 0; m < n; ++m) {
    const std::size_t ma = std::min(m, n - m);
    const double nu =
        static_cast<double>(ma) * err.sample_rate / static_cast<double>(n);
    const double e = std::norm(spec[m]);
    total += e;
    if (std::abs(nu - cut_hz) <= band_hz) near += e;
  }
  return total > 0.0 ? near / total : 0.0;
}

enum class DisplayMode { kMean, kEnergy };

/// Nearest-frame / nearest-bin regrid of a coefficient grid onto the lattice
/// of `reference` (for display merging across bands).
inline CoefficientGrid regrid_nearest(const CoefficientGrid& grid,
                                      std::shared_ptr<const NsgfPlan> reference) {
  grid.validate();
  const NsgfPlan& src = *grid.plan;
  CoefficientGrid out;
  out.plan = reference;
  out.rows.reserve(reference->size());
  for (const auto& el : reference->elements) {
    // nearest source frame by position
    std::size_t best_k = 0;
    long long best_d = -1;
    for (std::size_t k = 0; k < src.size(); ++k) {
      const long long d =
          std::llabs(static_cast<long long>(src.elements[k].position) -
                     static_cast<long long>(el.position));
      if (best_d < 0 || d < best_d) { best_k = k; best_d = d; }
    }
    const std::size_t m_src = src.elements[best_k].channels;
    std::vector<Complex> row(el.channels);
    for (std::size_t l = 0; l < el.channels; ++l) {
      const auto l_src = static_cast<std::size_t>(
          std::llround(static_cast<double>(l) * static_cast<double>(m_src) /
                       static_cast<double>(el.channels))) % m_src;
      row[l] = grid.rows[best_k][l_src];
    }
    out.rows.push_back(std::move(row));
  }
  return out;
}

/// Display merge of per-band weighted grids sharing one lattice:
/// mean mode: |sum_p c^p| / sum_p w^p ; energy: sqrt(sum_p |c^p|^2) / sum w.
/// Cells where the weights sum to zero render as 0.
inline std::vector<std::vector<double>> display_coefficients(
    const std::vector<CoefficientGrid>& bands,
    const std::function<double(std::size_t band, double nu_hz)>& weight,
    DisplayMode mode) {
  if (bands.empty())
    throw Error(ErrorCode::kInvalidArgument, "no bands to display");
  const NsgfPlan& plan = *bands.front().plan;
  for (const auto& b : bands)
    if (b.rows.size() != plan.size())
      throw Error(ErrorCode::kSizeMismatch, "bands not on a common lattice");
  std::vector<std::vector<double>> out(plan.size());
  for (std::size_t k = 0; k < plan.size(); ++k) {
    out[k].resize(plan.elements[k].channels, 0.0);
    for (std::size_t l = 0; l < out[k].size(); ++l) {
      double wsum = 0.0;
      Complex csum{0.0, 0.0};
      double esum = 0.0;
      for (std::size_t p = 0; p < bands.size(); ++p) {
        wsum += weight(p, plan.bin_frequency(k, l));
        csum += bands[p].rows[k][l];
        esum += std::norm(bands[p].rows[k][l]);
      }
      if (wsum > 0.0)
        out[k][l] = (mode == DisplayMode::kMean) ? std::abs(csum) / wsum
                                                 : std::sqrt(esum) / wsum;
    }
  }
  return out;
}

}  // namespace tfa

#endif  // TFA_RECONSTRUCT_HPP
