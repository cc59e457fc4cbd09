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

// Minimal RIFF/WAVE reader and writer: PCM16 and IEEE float32 only.
// Multichannel input is mixed to mono by averaging. 16-bit samples map to
// [-1,1) by division by 32768.

#ifndef TFA_WAV_HPP
#define TFA_WAV_HPP

#include <cstdint>
#include <cstring>
#include <fstream>
#include <string>
#include <vector>

#include "tfa/error.hpp"
#include "tfa/signal.hpp"

namespace tfa {

enum class WavFormat { kPcm16, kFloat32 };

namespace detail {

inline std::uint32_t read_u32(const unsigned char* p) {
  return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}
inline std::uint16_t read_u16(const unsigned char* p) {
  return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}
inline void put_u32(std::vector<unsigned char>& v, std::uint32_t x) {
  v.push_back(x & 0xff); v.push_back((x >> 8) & 0xff);
  v.push_back((x >> 16) & 0xff); v.push_back((x >> 24) & 0xff);
}
inline void put_u16(std::vector<unsigned char>& v, std::uint16_t x) {
  v.push_back(x & 0xff); v.push_back((x >> 8) & 0xff);
}

}  // namespace detail

inline Signal read_wav(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kFileUnreadable, "cannot open " + path);
  std::vector<unsigned char> buf((std::istreambuf_iterator<char>(in)),
                                 std::istreambuf_iterator<char>());
  if (buf.size() < 12 || std::memcmp(buf.data(), "RIFF", 4) != 0 ||
      std::memcmp(buf.data() + 8, "WAVE", 4) != 0)
    throw Error(ErrorCode::kUnsupportedFormat, "not a RIFF/WAVE file: " + path);

  std::uint16_t format_tag = 0, channels = 0, bits = 0;
  std::uint32_t sample_rate = 0;
  const unsigned char* data = nullptr;
  std::size_t data_len = 0;

  std::size_t pos = 12;
  while (pos + 8 <= buf.size()) {
    const char* id = reinterpret_cast<const char*>(buf.data() + pos);
    std::uint32_t len = detail::read_u32(buf.data() + pos + 4);
    pos += 8;
    if (pos + len > buf.size()) len = static_cast<std::uint32_t>(buf.size() - pos);
    if (std::memcmp(id, "fmt ", 4) == 0 && len >= 16) {
      format_tag = detail::read_u16(buf.data() + pos);
      channels = detail::read_u16(buf.data() + pos + 2);
      sample_rate = detail::read_u32(buf.data() + pos + 4);
      bits = detail::read_u16(buf.data() + pos + 14);
    } else if (std::memcmp(id, "data", 4) == 0) {
      data = buf.data() + pos;
      data_len = len;
    }
    pos += len + (len & 1);  // chunks are word aligned
  }

  if (format_tag == 0 || channels == 0)
    throw Error(ErrorCode::kUnsupportedFormat, "missing fmt chunk: " + path);
  const bool pcm16 = (format_tag == 1 && bits == 16);
  const bool f32 = (format_tag == 3 && bits == 32);
  if (!pcm16 && !f32)
    throw Error(ErrorCode::kUnsupportedFormat,
                "unsupported codec (want PCM16 or float32): " + path);
  const std::size_t bytes_per = bits / 8;
  const std::size_t frames = data ? data_len / (bytes_per * channels) : 0;
  if (frames == 0)
    throw Error(ErrorCode::kEmptyAudio, "zero-length audio: " + path);

  std::vector<double> mono(frames, 0.0);
  for (std::size_t i = 0; i < frames; ++i) {
    double acc = 0.0;
    for (std::uint16_t c = 0; c < channels; ++c) {
      const unsigned char* p = data + (i * channels + c) * bytes_per;
      if (pcm16) {
        std::int16_t s = static_cast<std::int16_t>(detail::read_u16(p));
        acc += s / 32768.0;
      } else {
        float f;
        std::memcpy(&f, p, 4);
        acc += f;
      }
    }
    mono[i] = acc / channels;
  }
  return Signal(std::move(mono), static_cast<double>(sample_rate));
}

/// Returns the number of samples clipped (pcm16 only; float32 is lossless).
inline std::size_t write_wav(const Signal& signal, const std::string& path,
                             WavFormat format = WavFormat::kFloat32) {
  signal.validate();
  const std::size_t n = signal.size();
  const bool pcm = (format == WavFormat::kPcm16);
  const std::uint16_t bytes_per = pcm ? 2 : 4;
  const std::uint32_t data_len = static_cast<std::uint32_t>(n * bytes_per);

  std::vector<unsigned char> out;
  out.reserve(44 + data_len);
  out.insert(out.end(), {'R', 'I', 'F', 'F'});
  detail::put_u32(out, 36 + data_len);
  out.insert(out.end(), {'W', 'A', 'V', 'E', 'f', 'm', 't', ' '});
  detail::put_u32(out, 16);
  detail::put_u16(out, pcm ? 1 : 3);
  detail::put_u16(out, 1);  // mono
  const std::uint32_t rate = static_cast<std::uint32_t>(signal.sample_rate);
  detail::put_u32(out, rate);
  detail::put_u32(out, rate * bytes_per);
  detail::put_u16(out, bytes_per);
  detail::put_u16(out, pcm ? 16 : 32);
  out.insert(out.end(), {'d', 'a', 't', 'a'});
  detail::put_u32(out, data_len);

  std::size_t clipped = 0;
  for (double v : signal.samples) {
    if (pcm) {
      if (v >= 1.0 || v < -1.0) ++clipped;
      long q = std::lrint(v * 32768.0);
      if (q > 32767) q = 32767;
      if (q < -32768) q = -32768;
      detail::put_u16(out, static_cast<std::uint16_t>(static_cast<std::int16_t>(q)));
    } else {
      float f = static_cast<float>(v);
      unsigned char b[4];
      std::memcpy(b, &f, 4);
      out.insert(out.end(), b, b + 4);
    }
  }

  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error(ErrorCode::kIoFailure, "cannot write " + path);
  os.write(reinterpret_cast<const char*>(out.data()),
           static_cast<std::streamsize>(out.size()));
  if (!os) throw Error(ErrorCode::kIoFailure, "write failed: " + path);
  return clipped;
}

}  // namespace tfa

#endif  // TFA_WAV_HPP
