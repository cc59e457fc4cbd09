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

// Nonstationary Gabor frames of compactly supported windows, painless case
// (channels >= window length). The frame operator is then diagonal and duals
// are obtained by pointwise division.

#ifndef TFA_FRAME_HPP
#define TFA_FRAME_HPP

#include <algorithm>
#include <cstddef>
#include <memory>
#include <vector>

#include "tfa/error.hpp"
#include "tfa/window.hpp"

namespace tfa {

/// One frame: window at a time position with its channel count.
/// The frequency step is sample_rate / channels.
struct FrameElement {
  Window window;
  std::size_t position = 0;  // samples, start of window support
  std::size_t channels = 0;  // FFT size M_k

  FrameElement(Window w, std::size_t pos, std::size_t m)
      : window(std::move(w)), position(pos), channels(m) {
    if (channels < window.size())
      throw Error(ErrorCode::kInvalidArgument,
                  "painless condition violated: channels < window length");
  }
};

struct NsgfPlan {
  std::vector<FrameElement> elements;
  std::size_t signal_length = 0;
  double sample_rate = 0.0;
  // boundary mode: periodic (the only supported mode)

  std::size_t size() const { return elements.size(); }

  /// Hop to the next element (wraps periodically for the last one).
  std::size_t hop(std::size_t k) const {
    if (k + 1 < elements.size())
      return elements[k + 1].position - elements[k].position;
    return signal_length - elements.back().position + elements.front().position;
  }

  /// Frequency step b_k of element k, in Hz.
  double freq_step(std::size_t k) const {
    return sample_rate / static_cast<double>(elements[k].channels);
  }

  /// Frequency of bin l in element k as an aliased magnitude frequency, Hz.
  double bin_frequency(std::size_t k, std::size_t l) const {
    const std::size_t m = elements[k].channels;
    const std::size_t la = std::min(l, m - l);
    return static_cast<double>(la) * sample_rate / static_cast<double>(m);
  }

  void validate() const {
    if (elements.empty())
      throw Error(ErrorCode::kInvalidArgument, "empty plan");
    if (signal_length == 0 || !(sample_rate > 0.0))
      throw Error(ErrorCode::kInvalidArgument, "bad plan dimensions");
    for (std::size_t k = 0; k + 1 < elements.size(); ++k)
      if (elements[k + 1].position <= elements[k].position)
        throw Error(ErrorCode::kInvalidArgument,
                    "positions must be strictly increasing");
    if (elements.back().position >= signal_length)
      throw Error(ErrorCode::kInvalidArgument, "position beyond signal end");
  }
};

/// Diagonal of the frame operator: S(t) = sum_k M_k |g_k(t - a_k)|^2, with
/// periodic wrap. In the painless case this *is* the frame operator.
inline std::vector<double> frame_operator_diagonal(const NsgfPlan& plan) {
  plan.validate();
  const std::size_t n = plan.signal_length;
  std::vector<double> diag(n, 0.0);
  for (const auto& el : plan.elements) {
    const double m = static_cast<double>(el.channels);
    for (std::size_t j = 0; j < el.window.size(); ++j) {
      const double v = el.window.values[j];
      diag[(el.position + j) % n] += m * v * v;
    }
  }
  return diag;
}

/// Dual windows: tilde g_k = g_k / S on each window's support.
struct DualPlan {
  std::shared_ptr<const NsgfPlan> plan;
  std::vector<std::vector<double>> duals;  // aligned with plan->elements
  std::vector<double> diagonal;
};

inline constexpr double kCoverageFloorRel = 1e-6;

inline DualPlan dual_plan(std::shared_ptr<const NsgfPlan> plan,
                          double coverage_floor_rel = kCoverageFloorRel) {
  auto diag = frame_operator_diagonal(*plan);
  const double peak = *std::max_element(diag.begin(), diag.end());
  const double floor = coverage_floor_rel * peak;
  for (double v : diag)
    if (v < floor)
      throw Error(ErrorCode::kCoverageGap,
                  "frame operator diagonal below coverage floor; plan is not "
                  "invertible");
  DualPlan out;
  out.plan = plan;
  out.duals.reserve(plan->size());
  const std::size_t n = plan->signal_length;
  for (const auto& el : plan->elements) {
    std::vector<double> d(el.window.size());
    for (std::size_t j = 0; j < d.size(); ++j)
      d[j] = el.window.values[j] / diag[(el.position + j) % n];
    out.duals.push_back(std::move(d));
  }
  out.diagonal = std::move(diag);
  return out;
}

/// Plan from an explicit window sequence with the half-min-overlap hop rule:
/// a_{k+1} - a_k = min(L_k, L_{k+1}) / 2, channels M_k = L_k.
inline std::shared_ptr<const NsgfPlan> build_plan(
    const std::vector<Window>& windows, std::size_t signal_length,
    double sample_rate) {
  if (windows.empty())
    throw Error(ErrorCode::kInvalidArgument, "no windows given");
  auto plan = std::make_shared<NsgfPlan>();
  plan->signal_length = signal_length;
  plan->sample_rate = sample_rate;
  std::size_t pos = 0;
  for (std::size_t k = 0; k < windows.size(); ++k) {
    if (windows[k].size() > signal_length)
      throw Error(ErrorCode::kInvalidArgument, "window longer than signal");
    plan->elements.emplace_back(windows[k], pos, windows[k].size());
    if (k + 1 < windows.size())
      pos += std::min(windows[k].size(), windows[k + 1].size()) / 2;
  }
  plan->validate();
  // Reject plans with coverage gaps outright.
  auto diag = frame_operator_diagonal(*plan);
  const double peak = *std::max_element(diag.begin(), diag.end());
  for (double v : diag)
    if (v < kCoverageFloorRel * peak)
      throw Error(ErrorCode::kCoverageGap, "plan does not cover the signal");
  return plan;
}

/// Uniform plan: one window repeated with constant hop. The hop must divide
/// the signal length (periodic boundary).
inline std::shared_ptr<const NsgfPlan> make_uniform_plan(
    const Window& window, std::size_t hop, std::size_t signal_length,
    double sample_rate, std::size_t channels = 0) {
  if (hop == 0 || signal_length % hop != 0)
    throw Error(ErrorCode::kInvalidArgument,
                "hop must be nonzero and divide the signal length");
  if (channels == 0) channels = window.size();
  auto plan = std::make_shared<NsgfPlan>();
  plan->signal_length = signal_length;
  plan->sample_rate = sample_rate;
  for (std::size_t pos = 0; pos < signal_length; pos += hop)
    plan->elements.emplace_back(window, pos, channels);
  plan->validate();
  return plan;
}

}  // namespace tfa

#endif  // TFA_FRAME_HPP
