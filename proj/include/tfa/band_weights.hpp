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

// Per-band frequency weights for the analysis-weighting reconstruction:
// a complementary pair w1/w2 split at a cut frequency, either as a hard
// binary mask (w1 = 1 for nu <= cut) or with a raised-cosine crossover.

#ifndef TFA_BAND_WEIGHTS_HPP
#define TFA_BAND_WEIGHTS_HPP

#include <cmath>
#include <cstddef>

#include "tfa/error.hpp"
#include "tfa/transform.hpp"

namespace tfa {

enum class WeightKind { kBinary, kRaisedCosine };

struct BandWeightSet {
  std::size_t num_bands = 2;
  WeightKind kind = WeightKind::kBinary;
  double cut_hz = 300.0;
  double transition_hz = 0.0;  // raised-cosine full transition width
  double epsilon = 1e-3;       // activity threshold for p(nu)

  /// Weight of band p (0 = low, 1 = high) at magnitude frequency nu.
  double weight(std::size_t band, double nu_hz) const {
    double w1;
    if (kind == WeightKind::kBinary) {
      w1 = (nu_hz <= cut_hz) ? 1.0 : 0.0;
    } else {
      const double lo = cut_hz - transition_hz / 2.0;
      if (nu_hz <= lo) w1 = 1.0;
      else if (nu_hz >= lo + transition_hz) w1 = 0.0;
      else w1 = 0.5 * (1.0 + std::cos(M_PI * (nu_hz - lo) / transition_hz));
    }
    return band == 0 ? w1 : 1.0 - w1;
  }
};

inline BandWeightSet make_band_weights(WeightKind kind, double cut_hz,
                                       double nyquist_hz,
                                       double transition_hz = 0.0,
                                       double epsilon = 1e-3) {
  if (!(cut_hz > 0.0) || cut_hz >= nyquist_hz)
    throw Error(ErrorCode::kInvalidArgument, "cut must be in (0, Nyquist)");
  if (kind == WeightKind::kRaisedCosine) {
    if (!(transition_hz > 0.0) || cut_hz - transition_hz / 2.0 <= 0.0 ||
        cut_hz + transition_hz / 2.0 >= nyquist_hz)
      throw Error(ErrorCode::kInvalidArgument,
                  "transition band must lie inside (0, Nyquist)");
  }
  if (!(epsilon > 0.0))
    throw Error(ErrorCode::kInvalidArgument, "epsilon must be > 0");
  BandWeightSet s;
  s.kind = kind;
  s.cut_hz = cut_hz;
  s.transition_hz = (kind == WeightKind::kRaisedCosine) ? transition_hz : 0.0;
  s.epsilon = epsilon;
  return s;
}

/// p(nu): number of bands active (weight >= epsilon) at frequency nu.
inline std::size_t count_active(const BandWeightSet& s, double nu_hz) {
  std::size_t n = 0;
  for (std::size_t p = 0; p < s.num_bands; ++p)
    if (s.weight(p, nu_hz) >= s.epsilon) ++n;
  return n;
}

/// Multiplies every coefficient by its bin's band weight; bin frequencies are
/// the aliased magnitude frequencies min(l, M_k - l) * b_k.
inline CoefficientGrid weight_coefficients(const CoefficientGrid& coeffs,
                                           const BandWeightSet& s,
                                           std::size_t band) {
  coeffs.validate();
  CoefficientGrid out = coeffs;
  for (std::size_t k = 0; k < out.rows.size(); ++k)
    for (std::size_t l = 0; l < out.rows[k].size(); ++l)
      out.rows[k][l] *= s.weight(band, coeffs.plan->bin_frequency(k, l));
  return out;
}

}  // namespace tfa

#endif  // TFA_BAND_WEIGHTS_HPP
