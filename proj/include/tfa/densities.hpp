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

// Synthetic spectrogram density models for studying the entropy order:
// a step model (M large coefficients, the rest attenuated 20x) and a
// peak/partials/noise model with a sweepable noise level.

#ifndef TFA_DENSITIES_HPP
#define TFA_DENSITIES_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "tfa/entropy.hpp"
#include "tfa/error.hpp"

namespace tfa {

/// Normalized nonnegative density (unit sum).
struct SyntheticDensity {
  std::vector<double> values;

  SpectrogramGrid as_grid() const {
    SpectrogramGrid z;
    z.cells = {values};
    z.cell_area = {1.0};
    return z;
  }

  double entropy(double alpha) const {
    EntropyQuery q;
    q.alpha = alpha;
    return renyi_entropy(as_grid(), q);
  }
};

namespace detail {

/// Base vector: |standard normal| draws rescaled to max 1, in (0,1].
/// Box-Muller on top of mt19937_64 keeps the stream identical across
/// platforms (std::normal_distribution is implementation defined).
inline std::vector<double> base_vector(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  std::vector<double> d(n);
  for (auto& v : d) {
    double u1 = uni(rng);
    const double u2 = uni(rng);
    while (u1 <= 0.0) u1 = uni(rng);
    v = std::abs(std::sqrt(-2.0 * std::log(u1)) *
                 std::cos(2.0 * M_PI * u2));
  }
  double peak = 0.0;
  for (double v : d) peak = std::max(peak, v);
  for (auto& v : d) v = std::max(v / peak, 1e-12);  // keep strictly positive
  return d;
}

inline void normalize(std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  for (auto& x : v) x /= s;
}

}  // namespace detail

/// Step model: first M entries at full level, the rest attenuated by 20.
inline SyntheticDensity make_DM(std::size_t n, std::size_t m,
                                std::uint64_t seed) {
  if (m < 1 || m > n)
    throw Error(ErrorCode::kInvalidArgument, "need 1 <= M <= N");
  auto d = detail::base_vector(n, seed);
  for (std::size_t k = m; k < n; ++k) d[k] /= 20.0;
  detail::normalize(d);
  return {std::move(d)};
}

/// Peak model: one main peak, partials reduced by R_part, noise floor at
/// R_noise = R_part / L with L in [1/16, 1].
inline SyntheticDensity make_DL(std::size_t n, std::size_t n_part,
                                double r_part, double noise_level,
                                std::uint64_t seed) {
  if (n_part < 1 || n_part > n || !(r_part >= 1.0))
    throw Error(ErrorCode::kInvalidArgument, "invalid N_part/R_part");
  if (!(noise_level >= 1.0 / 16.0 && noise_level <= 1.0))
    throw Error(ErrorCode::kInvalidArgument, "L must be in [1/16, 1]");
  const double r_noise = r_part / noise_level;
  auto d = detail::base_vector(n, seed);
  d[0] = 1.0;
  for (std::size_t k = 1; k < n; ++k)
    d[k] /= (k < n_part) ? r_part : r_noise;
  detail::normalize(d);
  return {std::move(d)};
}

struct EntropySurface {
  std::vector<double> alphas;       // rows
  std::vector<double> sweep;        // columns (M values or L values)
  std::vector<std::vector<double>> bits;  // bits[alpha][sweep]

  std::string to_csv() const {
    std::ostringstream os;
    os.precision(12);
    os << "alpha";
    for (double s : sweep) os << "," << s;
    os << "\n";
    for (std::size_t i = 0; i < alphas.size(); ++i) {
      os << alphas[i];
      for (double b : bits[i]) os << "," << b;
      os << "\n";
    }
    return os.str();
  }
};

inline std::vector<double> default_alpha_grid() {
  std::vector<double> a;
  for (int i = 0; i <= 30; ++i) a.push_back(i / 10.0);
  return a;
}

/// Entropy-vs-alpha surface for the step model, sweeping M = 1..N.
/// One base vector D is drawn per seed and shared across the sweep.
inline EntropySurface dm_surface(std::size_t n = 100, std::uint64_t seed = 1,
                                 std::vector<double> alphas = default_alpha_grid()) {
  EntropySurface s;
  s.alphas = std::move(alphas);
  for (std::size_t m = 1; m <= n; ++m) s.sweep.push_back(static_cast<double>(m));
  std::vector<SyntheticDensity> densities;
  densities.reserve(n);
  for (std::size_t m = 1; m <= n; ++m) densities.push_back(make_DM(n, m, seed));
  for (double a : s.alphas) {
    std::vector<double> row;
    row.reserve(n);
    for (const auto& d : densities) row.push_back(d.entropy(a));
    s.bits.push_back(std::move(row));
  }
  return s;
}

/// Surface for the peak model, sweeping the noise level L over [1/16, 1].
inline EntropySurface dl_surface(std::size_t n = 100, std::size_t n_part = 5,
                                 double r_part = 2.0, std::uint64_t seed = 1,
                                 std::size_t l_steps = 16,
                                 std::vector<double> alphas = default_alpha_grid()) {
  EntropySurface s;
  s.alphas = std::move(alphas);
  std::vector<SyntheticDensity> densities;
  for (std::size_t j = 1; j <= l_steps; ++j) {
    const double level = static_cast<double>(j) / static_cast<double>(l_steps);
    s.sweep.push_back(level);
    densities.push_back(make_DL(n, n_part, r_part, level, seed));
  }
  for (double a : s.alphas) {
    std::vector<double> row;
    for (const auto& d : densities) row.push_back(d.entropy(a));
    s.bits.push_back(std::move(row));
  }
  return s;
}

}  // namespace tfa

#endif  // TFA_DENSITIES_HPP
