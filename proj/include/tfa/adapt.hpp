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

// Automatic per-segment window-scale selection by Renyi entropy
// minimization. The signal is cut into overlapping segments (measured in
// frames of the largest window); each candidate scale analyzes the segment
// with a uniform 50%-overlap frame, the masked spectrogram entropy is
// evaluated, and the scale with minimum entropy wins. Per-segment decisions
// are mapped to analysis frames by nearest segment center and assembled into
// a nonstationary plan.

#ifndef TFA_ADAPT_HPP
#define TFA_ADAPT_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "tfa/band_weights.hpp"
#include "tfa/entropy.hpp"
#include "tfa/error.hpp"
#include "tfa/frame.hpp"
#include "tfa/signal.hpp"
#include "tfa/transform.hpp"

namespace tfa {

struct AdaptationConfig {
  std::vector<std::size_t> scales{512, 1024, 2048, 4096};  // ascending
  double alpha = 0.7;
  int segment_frames = 4;   // in frames of the largest window
  int overlap_frames = 3;
  WindowFamily family = WindowFamily::kHann;

  std::size_t largest() const { return scales.back(); }
  std::size_t smallest() const { return scales.front(); }

  void validate() const {
    if (scales.empty())
      throw Error(ErrorCode::kInvalidArgument, "scale set empty");
    if (!std::is_sorted(scales.begin(), scales.end()))
      throw Error(ErrorCode::kInvalidArgument, "scales must be ascending");
    if (overlap_frames >= segment_frames || segment_frames < 1 ||
        overlap_frames < 0)
      throw Error(ErrorCode::kInvalidArgument,
                  "need 0 <= overlap_frames < segment_frames");
    if (alpha < 0.0)
      throw Error(ErrorCode::kInvalidArgument, "alpha must be >= 0");
  }
};

/// Frequency mask applied to the spectrogram for the entropy evaluation only
/// (the analysis and resynthesis are untouched).
struct BandMask {
  std::string name = "none";
  std::function<double(double hz)> weight;  // empty = all-pass
};

inline BandMask mask_none() { return {"none", {}}; }
inline BandMask mask_low(double cut_hz) {
  return {"low", [cut_hz](double hz) { return hz <= cut_hz ? 1.0 : 0.0; }};
}
inline BandMask mask_high(double cut_hz) {
  return {"high", [cut_hz](double hz) { return hz > cut_hz ? 1.0 : 0.0; }};
}

struct Segment {
  std::size_t start = 0;
  std::size_t end = 0;  // exclusive
  std::size_t length() const { return end - start; }
  std::size_t center() const { return (start + end) / 2; }
};

/// Overlapping segment layout: length (segment_frames + 1) * hop of the
/// largest window (one hop of boundary allowance), advancing by
/// (segment_frames - overlap_frames) largest-window frames.
inline std::vector<Segment> segment_grid(std::size_t signal_length,
                                         const AdaptationConfig& cfg) {
  cfg.validate();
  const std::size_t hop = cfg.largest() / 2;
  const std::size_t seg_len = (cfg.segment_frames + 1) * hop;
  const std::size_t advance = (cfg.segment_frames - cfg.overlap_frames) * hop;
  if (signal_length < seg_len)
    throw Error(ErrorCode::kInvalidArgument, "signal shorter than one segment");
  std::vector<Segment> out;
  std::size_t s = 0;
  while (true) {
    out.push_back({s, std::min(s + seg_len, signal_length)});
    if (s + seg_len >= signal_length) break;
    s += advance;
  }
  return out;
}

/// Entropy (bits) of the segment analyzed with a uniform frame at `scale`
/// (hop = scale/2, channels = scale), after applying the band mask.
/// Throws kEmptyRegion if the masked spectrogram is all zero.
inline double evaluate_segment(const Signal& f, const Segment& seg,
                               std::size_t scale, const AdaptationConfig& cfg,
                               const BandMask& mask) {
  if (scale > seg.length())
    throw Error(ErrorCode::kInvalidArgument, "window larger than segment");
  const std::size_t hop = scale / 2;
  // zero-pad the slice to a hop multiple so it tiles periodically
  std::size_t len = seg.length();
  if (len % hop != 0) len += hop - (len % hop);
  std::vector<double> slice(len, 0.0);
  std::copy(f.samples.begin() + seg.start, f.samples.begin() + seg.end,
            slice.begin());
  auto plan = make_uniform_plan(make_window(cfg.family, scale), hop, len,
                                f.sample_rate);
  auto z = spectrogram(analyze(Signal(std::move(slice), f.sample_rate), plan));
  EntropyQuery q;
  q.alpha = cfg.alpha;
  if (mask.weight) {
    const NsgfPlan& p = *plan;
    q.weight = [&p, &mask](std::size_t k, std::size_t l) {
      return mask.weight(p.bin_frequency(k, l));
    };
  }
  return renyi_entropy(z, q);
}

/// Argmin over candidate scales; ties go to the smallest scale.
inline std::size_t select_scale(const std::map<std::size_t, double>& entropies) {
  if (entropies.empty())
    throw Error(ErrorCode::kInvalidArgument, "no candidate entropies");
  std::size_t best = entropies.begin()->first;
  double best_h = entropies.begin()->second;
  for (const auto& [scale, h] : entropies)
    if (h < best_h) { best = scale; best_h = h; }
  return best;
}

struct SegmentDecision {
  Segment segment;
  std::size_t chosen_scale = 0;
  std::map<std::size_t, double> entropy_bits;  // per candidate scale
  bool silent = false;  // masked spectrogram was all zero; decision inherited
};

struct BandAdaptation {
  std::string mask_name;
  std::vector<SegmentDecision> decisions;
  std::shared_ptr<const NsgfPlan> plan;

  std::size_t scale_at(std::size_t position) const {
    // nearest segment center
    std::size_t best = 0;
    long long best_d = -1;
    for (std::size_t i = 0; i < decisions.size(); ++i) {
      const long long d = std::llabs(
          static_cast<long long>(decisions[i].segment.center()) -
          static_cast<long long>(position));
      if (best_d < 0 || d < best_d) { best = i; best_d = d; }
    }
    return decisions[best].chosen_scale;
  }
};

struct AdaptationResult {
  std::vector<BandAdaptation> bands;
};

namespace detail {

inline std::shared_ptr<const NsgfPlan> assemble_plan(
    const BandAdaptation& band, const AdaptationConfig& cfg,
    std::size_t signal_length, double sample_rate) {
  std::vector<Window> windows;
  std::size_t pos = 0;
  std::size_t len = band.scale_at(0);
  while (true) {
    windows.push_back(make_window(cfg.family, len));
    // next frame's scale determines the hop; the decision grid is piecewise
    // constant, so one refinement reaches the fixed point
    std::size_t next_len = band.scale_at(std::min(pos + len / 2, signal_length - 1));
    std::size_t hop = std::min(len, next_len) / 2;
    const std::size_t check = band.scale_at(std::min(pos + hop, signal_length - 1));
    if (check != next_len) {
      next_len = check;
      hop = std::min(len, next_len) / 2;
    }
    if (pos + hop >= signal_length) break;
    pos += hop;
    len = next_len;
  }
  return build_plan(windows, signal_length, sample_rate);
}

}  // namespace detail

/// Full adaptation: per band and segment, evaluate all fitting scales, pick
/// the sparsest, and assemble the nonstationary plan. All-silent segments
/// inherit the previous decision (largest scale for the first segment).
/// The signal length must be a multiple of largest()/2.
inline AdaptationResult adapt(const Signal& f, const AdaptationConfig& cfg,
                              const std::vector<BandMask>& masks) {
  cfg.validate();
  f.validate();
  if (f.size() % (cfg.largest() / 2) != 0)
    throw Error(ErrorCode::kInvalidArgument,
                "signal length must be a multiple of largest scale / 2 "
                "(zero-pad first)");
  const auto segments = segment_grid(f.size(), cfg);
  AdaptationResult result;
  for (const auto& mask : masks) {
    BandAdaptation band;
    band.mask_name = mask.name;
    std::size_t previous = cfg.largest();
    for (const auto& seg : segments) {
      SegmentDecision dec;
      dec.segment = seg;
      for (std::size_t scale : cfg.scales) {
        if (scale > seg.length()) continue;
        try {
          dec.entropy_bits[scale] = evaluate_segment(f, seg, scale, cfg, mask);
        } catch (const Error& e) {
          if (e.code() != ErrorCode::kEmptyRegion) throw;
        }
      }
      if (dec.entropy_bits.empty()) {
        dec.silent = true;
        dec.chosen_scale = previous;
      } else {
        dec.chosen_scale = select_scale(dec.entropy_bits);
      }
      previous = dec.chosen_scale;
      band.decisions.push_back(std::move(dec));
    }
    band.plan = detail::assemble_plan(band, cfg, f.size(), f.sample_rate);
    result.bands.push_back(std::move(band));
  }
  return result;
}

/// Zero-pads to the next multiple of `m` (no-op when already aligned).
inline Signal pad_to_multiple(const Signal& f, std::size_t m) {
  if (m == 0 || f.size() % m == 0) return f;
  std::vector<double> x = f.samples;
  x.resize(f.size() + (m - f.size() % m), 0.0);
  return Signal(std::move(x), f.sample_rate);
}

}  // namespace tfa

#endif  // TFA_ADAPT_HPP
