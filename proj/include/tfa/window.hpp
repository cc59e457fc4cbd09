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

#ifndef TFA_WINDOW_HPP
#define TFA_WINDOW_HPP

#include <cmath>
#include <string>
#include <vector>

#include "tfa/error.hpp"

namespace tfa {

enum class WindowFamily { kHann, kHamming, kBlackman, kRect };

inline const char* family_name(WindowFamily f) {
  switch (f) {
    case WindowFamily::kHann: return "hann";
    case WindowFamily::kHamming: return "hamming";
    case WindowFamily::kBlackman: return "blackman";
    case WindowFamily::kRect: return "rect";
  }
  return "?";
}

inline WindowFamily family_from_name(const std::string& s) {
  if (s == "hann") return WindowFamily::kHann;
  if (s == "hamming") return WindowFamily::kHamming;
  if (s == "blackman") return WindowFamily::kBlackman;
  if (s == "rect") return WindowFamily::kRect;
  throw Error(ErrorCode::kInvalidArgument, "unknown window family: " + s);
}

/// Symmetric analysis window. `amplitude` is a uniform factor applied on top
/// of the family's closed form (used by scale_window to preserve energy).
struct Window {
  std::vector<double> values;
  WindowFamily family = WindowFamily::kHann;
  std::size_t nominal_length = 0;
  double amplitude = 1.0;

  std::size_t size() const { return values.size(); }

  double energy() const {
    double e = 0.0;
    for (double v : values) e += v * v;
    return e;
  }
};

inline Window make_window(WindowFamily family, std::size_t length,
                          double amplitude = 1.0) {
  if (length == 0) throw Error(ErrorCode::kInvalidArgument, "window length 0");
  std::vector<double> v(length, amplitude);
  if (length > 1) {
    const double denom = static_cast<double>(length - 1);
    for (std::size_t i = 0; i < length; ++i) {
      const double c = std::cos(2.0 * M_PI * i / denom);
      double w = 1.0;
      switch (family) {
        case WindowFamily::kHann: w = 0.5 - 0.5 * c; break;
        case WindowFamily::kHamming: w = 0.54 - 0.46 * c; break;
        case WindowFamily::kBlackman:
          w = 0.42 - 0.5 * c + 0.08 * std::cos(4.0 * M_PI * i / denom);
          break;
        case WindowFamily::kRect: w = 1.0; break;
      }
      v[i] = amplitude * w;
    }
  }
  bool any_nonzero = false;
  for (double w : v) any_nonzero |= (w != 0.0);
  if (!any_nonzero)
    throw Error(ErrorCode::kInvalidArgument, "degenerate all-zero window");
  Window out;
  out.values = std::move(v);
  out.family = family;
  out.nominal_length = length;
  out.amplitude = amplitude;
  return out;
}

/// Scaled window: regenerated at length round(s*L) with a 1/sqrt(s) factor so
/// the discrete energy is approximately preserved.
inline Window scale_window(const Window& g, double s) {
  if (!(s > 0.0)) throw Error(ErrorCode::kInvalidArgument, "scale must be > 0");
  const auto new_len =
      static_cast<std::size_t>(std::llround(s * static_cast<double>(g.size())));
  if (new_len == 0)
    throw Error(ErrorCode::kInvalidArgument, "scaled window length 0");
  return make_window(g.family, new_len, g.amplitude / std::sqrt(s));
}

}  // namespace tfa

#endif  // TFA_WINDOW_HPP
