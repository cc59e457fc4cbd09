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

#ifndef TFA_SIGNAL_HPP
#define TFA_SIGNAL_HPP

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "tfa/error.hpp"

namespace tfa {

/// Sampled real waveform, double precision, nominal range [-1,1].
struct Signal {
  std::vector<double> samples;
  double sample_rate = 0.0;

  Signal() = default;
  Signal(std::vector<double> s, double rate)
      : samples(std::move(s)), sample_rate(rate) {
    validate();
  }

  std::size_t size() const { return samples.size(); }

  void validate() const {
    if (samples.empty())
      throw Error(ErrorCode::kEmptyAudio, "signal has no samples");
    if (!(sample_rate > 0.0))
      throw Error(ErrorCode::kInvalidArgument, "sample_rate must be > 0");
    for (double v : samples)
      if (!std::isfinite(v))
        throw Error(ErrorCode::kInvalidArgument, "non-finite sample");
  }

  double peak() const {
    double m = 0.0;
    for (double v : samples) m = std::max(m, std::abs(v));
    return m;
  }

  double rms() const {
    double s = 0.0;
    for (double v : samples) s += v * v;
    return std::sqrt(s / samples.size());
  }
};

enum class TestSignalKind { kSine, kImpulseTrain, kChirp, kTwoBandMix };

struct TestSignalParams {
  double frequency = 440.0;      // sine / chirp start, Hz
  double frequency_end = 0.0;    // chirp end, Hz (0 -> Nyquist/2)
  double amplitude = 1.0;
  double phase = 0.0;            // radians
  std::size_t period = 4096;     // impulse train, samples
  double tone_hz = 80.0;         // two-band mix, low tone
  double click_rate_hz = 2000.0; // two-band mix, click repetition
};

inline Signal make_test_signal(TestSignalKind kind, const TestSignalParams& p,
                               std::size_t length, double sample_rate) {
  if (length == 0)
    throw Error(ErrorCode::kInvalidArgument, "length must be >= 1");
  if (!(sample_rate > 0.0))
    throw Error(ErrorCode::kInvalidArgument, "sample_rate must be > 0");
  std::vector<double> x(length, 0.0);
  const double nyquist = sample_rate / 2.0;
  switch (kind) {
    case TestSignalKind::kSine: {
      if (!(p.frequency > 0.0) || p.frequency >= nyquist)
        throw Error(ErrorCode::kInvalidArgument, "sine frequency out of range");
      const double w = 2.0 * M_PI * p.frequency / sample_rate;
      for (std::size_t t = 0; t < length; ++t)
        x[t] = p.amplitude * std::sin(w * t + p.phase);
      break;
    }
    case TestSignalKind::kImpulseTrain: {
      if (p.period == 0)
        throw Error(ErrorCode::kInvalidArgument, "impulse period must be >= 1");
      for (std::size_t t = 0; t < length; t += p.period) x[t] = p.amplitude;
      break;
    }
    case TestSignalKind::kChirp: {
      const double f1 = p.frequency_end > 0.0 ? p.frequency_end : nyquist / 2.0;
      if (!(p.frequency > 0.0) || p.frequency >= nyquist || f1 >= nyquist)
        throw Error(ErrorCode::kInvalidArgument, "chirp frequencies out of range");
      const double dur = static_cast<double>(length) / sample_rate;
      const double rate = (f1 - p.frequency) / dur;
      for (std::size_t t = 0; t < length; ++t) {
        const double tt = static_cast<double>(t) / sample_rate;
        x[t] = p.amplitude *
               std::sin(2.0 * M_PI * (p.frequency * tt + 0.5 * rate * tt * tt) +
                        p.phase);
      }
      break;
    }
    case TestSignalKind::kTwoBandMix: {
      // Low tone plus a broadband click train, half amplitude each.
      if (!(p.tone_hz > 0.0) || p.tone_hz >= nyquist ||
          !(p.click_rate_hz > 0.0))
        throw Error(ErrorCode::kInvalidArgument, "two-band-mix params invalid");
      const std::size_t period = static_cast<std::size_t>(
          std::llround(sample_rate / p.click_rate_hz));
      if (period == 0)
        throw Error(ErrorCode::kInvalidArgument, "click rate too high");
      const double w = 2.0 * M_PI * p.tone_hz / sample_rate;
      for (std::size_t t = 0; t < length; ++t)
        x[t] = 0.5 * p.amplitude * std::sin(w * t + p.phase);
      for (std::size_t t = 0; t < length; t += period)
        x[t] += 0.5 * p.amplitude;
      break;
    }
  }
  return Signal(std::move(x), sample_rate);
}

}  // namespace tfa

#endif  // TFA_SIGNAL_HPP
