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

// Renyi entropy of (optionally weighted) discrete spectrograms, in bits:
//   H_a = 1/(1-a) log2 sum (z/sum z)^a + log2(ab)
// a = 1 takes the Shannon branch, a = 0 counts strictly positive cells.
// Lower entropy = more concentrated = sparser analysis.

#ifndef TFA_ENTROPY_HPP
#define TFA_ENTROPY_HPP

#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <vector>

#include "tfa/error.hpp"
#include "tfa/transform.hpp"

namespace tfa {

/// |c|^2 cells with the per-row time-frequency cell area a_k * b_k
/// (dimensionless: hop_k / M_k).
struct SpectrogramGrid {
  std::vector<std::vector<double>> cells;
  std::vector<double> cell_area;

  void validate() const {
    if (cells.size() != cell_area.size())
      throw Error(ErrorCode::kSizeMismatch, "cell_area row count mismatch");
    for (const auto& row : cells)
      for (double v : row)
        if (!(v >= 0.0) || !std::isfinite(v))
          throw Error(ErrorCode::kInvalidArgument,
                      "spectrogram cells must be finite and >= 0");
  }
};

inline SpectrogramGrid spectrogram(const CoefficientGrid& coeffs) {
  coeffs.validate();
  SpectrogramGrid z;
  z.cells.reserve(coeffs.rows.size());
  for (std::size_t k = 0; k < coeffs.rows.size(); ++k) {
    std::vector<double> row(coeffs.rows[k].size());
    for (std::size_t l = 0; l < row.size(); ++l)
      row[l] = std::norm(coeffs.rows[k][l]);
    z.cells.push_back(std::move(row));
    z.cell_area.push_back(static_cast<double>(coeffs.plan->hop(k)) /
                          static_cast<double>(coeffs.plan->elements[k].channels));
  }
  return z;
}

/// z*[k][l] = w(k,l) z[k][l]; areas unchanged.
inline SpectrogramGrid weighted_spectrogram(
    const SpectrogramGrid& z,
    const std::function<double(std::size_t, std::size_t)>& w) {
  SpectrogramGrid out;
  out.cell_area = z.cell_area;
  out.cells.reserve(z.cells.size());
  for (std::size_t k = 0; k < z.cells.size(); ++k) {
    std::vector<double> row(z.cells[k].size());
    for (std::size_t l = 0; l < row.size(); ++l) {
      const double wv = w(k, l);
      if (!(wv >= 0.0) || !std::isfinite(wv))
        throw Error(ErrorCode::kInvalidArgument,
                    "weights must be finite and >= 0");
      row[l] = wv * z.cells[k][l];
    }
    out.cells.push_back(std::move(row));
  }
  return out;
}

/// Index rectangle [k1,k2] x [l1,l2], inclusive, clipped to each row.
struct EntropyQuery {
  double alpha = 0.7;
  std::size_t k1 = 0, k2 = std::numeric_limits<std::size_t>::max();
  std::size_t l1 = 0, l2 = std::numeric_limits<std::size_t>::max();
  std::function<double(std::size_t, std::size_t)> weight;  // optional
  bool allow_mixed_area = false;  // experimental per-row area weighting
};

inline double renyi_entropy(const SpectrogramGrid& z, const EntropyQuery& q) {
  if (q.alpha < 0.0)
    throw Error(ErrorCode::kInvalidArgument, "alpha must be >= 0");
  if (z.cells.empty()) throw Error(ErrorCode::kEmptyRegion, "empty grid");

  const std::size_t k_hi = std::min(q.k2, z.cells.size() - 1);
  if (q.k1 > k_hi) throw Error(ErrorCode::kEmptyRegion, "empty region");

  double total = 0.0;
  double area = -1.0;
  bool uniform_area = true;
  for (std::size_t k = q.k1; k <= k_hi; ++k) {
    if (area < 0.0) area = z.cell_area[k];
    else if (std::abs(z.cell_area[k] - area) > 1e-12 * area)
      uniform_area = false;
    if (z.cells[k].empty()) continue;
    const std::size_t l_hi = std::min(q.l2, z.cells[k].size() - 1);
    for (std::size_t l = q.l1; l <= l_hi; ++l) {
      const double v = q.weight ? q.weight(k, l) * z.cells[k][l] : z.cells[k][l];
      if (!(v >= 0.0) || !std::isfinite(v))
        throw Error(ErrorCode::kInvalidArgument, "bad cell value");
      total += v;
    }
  }
  if (!(total > 0.0))
    throw Error(ErrorCode::kEmptyRegion, "region has no positive cell");
  if (!uniform_area && !q.allow_mixed_area)
    throw Error(ErrorCode::kInvalidArgument,
                "mixed cell areas in region (set allow_mixed_area)");

  auto each = [&](auto&& fn) {
    for (std::size_t k = q.k1; k <= k_hi; ++k) {
      if (z.cells[k].empty()) continue;
      const std::size_t l_hi = std::min(q.l2, z.cells[k].size() - 1);
      for (std::size_t l = q.l1; l <= l_hi; ++l) {
        const double v =
            q.weight ? q.weight(k, l) * z.cells[k][l] : z.cells[k][l];
        fn(v / total, z.cell_area[k]);
      }
    }
  };

  if (!uniform_area) {
    // experimental generalization: sum a_k b_k p^alpha
    if (q.alpha == 1.0 || q.alpha == 0.0)
      throw Error(ErrorCode::kInvalidArgument,
                  "mixed-area evaluation requires alpha not in {0, 1}");
    double s = 0.0;
    each([&](double p, double a) { if (p > 0.0) s += a * std::pow(p, q.alpha); });
    return std::log2(s) / (1.0 - q.alpha);
  }

  const double area_term = std::log2(area);
  if (q.alpha == 0.0) {
    std::size_t positive = 0;
    each([&](double p, double) { if (p > 0.0) ++positive; });
    return std::log2(static_cast<double>(positive)) + area_term;
  }
  if (q.alpha == 1.0) {
    double h = 0.0;  // 0 log 0 = 0
    each([&](double p, double) { if (p > 0.0) h -= p * std::log2(p); });
    return h + area_term;
  }
  double s = 0.0;
  each([&](double p, double) { if (p > 0.0) s += std::pow(p, q.alpha); });
  return std::log2(s) / (1.0 - q.alpha) + area_term;
}

/// Gap between the order-alpha entropy and the Shannon entropy of the same
/// grid; goes to zero as alpha -> 1.
inline double shannon_limit_gap(const SpectrogramGrid& z, double alpha) {
  EntropyQuery q;
  q.alpha = alpha;
  const double h = renyi_entropy(z, q);
  q.alpha = 1.0;
  return std::abs(h - renyi_entropy(z, q));
}

}  // namespace tfa

#endif  // TFA_ENTROPY_HPP
