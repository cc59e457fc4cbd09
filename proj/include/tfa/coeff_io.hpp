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

// Chunked binary coefficient format (little endian):
//   magic "NSGC" | version u32 | sample_rate f64 | signal_length u64 |
//   element_count u64
// then per element:
//   position u64 | channels u64 | family u32 | window_length u64 |
//   window_amplitude f64 | channels x (re f64, im f64)
// Windows are regenerated from (family, length, amplitude) on load.

#ifndef TFA_COEFF_IO_HPP
#define TFA_COEFF_IO_HPP

#include <cstdint>
#include <cstring>
#include <fstream>
#include <string>

#include "tfa/error.hpp"
#include "tfa/transform.hpp"

namespace tfa {

namespace detail {

template <typename T>
void put_raw(std::ostream& os, T v) {
  os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}
template <typename T>
T get_raw(std::istream& is) {
  T v{};
  is.read(reinterpret_cast<char*>(&v), sizeof(T));
  if (!is) throw Error(ErrorCode::kIoFailure, "truncated coefficient file");
  return v;
}

}  // namespace detail

inline void write_coefficients(const CoefficientGrid& grid,
                               const std::string& path) {
  grid.validate();
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error(ErrorCode::kIoFailure, "cannot write " + path);
  os.write("NSGC", 4);
  detail::put_raw<std::uint32_t>(os, 1);
  detail::put_raw<double>(os, grid.plan->sample_rate);
  detail::put_raw<std::uint64_t>(os, grid.plan->signal_length);
  detail::put_raw<std::uint64_t>(os, grid.plan->size());
  for (std::size_t k = 0; k < grid.plan->size(); ++k) {
    const auto& el = grid.plan->elements[k];
    detail::put_raw<std::uint64_t>(os, el.position);
    detail::put_raw<std::uint64_t>(os, el.channels);
    detail::put_raw<std::uint32_t>(os, static_cast<std::uint32_t>(el.window.family));
    detail::put_raw<std::uint64_t>(os, el.window.size());
    detail::put_raw<double>(os, el.window.amplitude);
    for (const Complex& c : grid.rows[k]) {
      detail::put_raw<double>(os, c.real());
      detail::put_raw<double>(os, c.imag());
    }
  }
  if (!os) throw Error(ErrorCode::kIoFailure, "write failed: " + path);
}

inline CoefficientGrid read_coefficients(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw Error(ErrorCode::kFileUnreadable, "cannot open " + path);
  char magic[4];
  is.read(magic, 4);
  if (!is || std::memcmp(magic, "NSGC", 4) != 0)
    throw Error(ErrorCode::kUnsupportedFormat, "bad magic: " + path);
  if (detail::get_raw<std::uint32_t>(is) != 1)
    throw Error(ErrorCode::kUnsupportedFormat, "unsupported version: " + path);
  auto plan = std::make_shared<NsgfPlan>();
  plan->sample_rate = detail::get_raw<double>(is);
  plan->signal_length = detail::get_raw<std::uint64_t>(is);
  const auto count = detail::get_raw<std::uint64_t>(is);
  CoefficientGrid grid;
  grid.rows.reserve(count);
  for (std::uint64_t k = 0; k < count; ++k) {
    const auto position = detail::get_raw<std::uint64_t>(is);
    const auto channels = detail::get_raw<std::uint64_t>(is);
    const auto family =
        static_cast<WindowFamily>(detail::get_raw<std::uint32_t>(is));
    const auto win_len = detail::get_raw<std::uint64_t>(is);
    const auto amplitude = detail::get_raw<double>(is);
    plan->elements.emplace_back(make_window(family, win_len, amplitude),
                                position, channels);
    std::vector<Complex> row(channels);
    for (auto& c : row) {
      const double re = detail::get_raw<double>(is);
      const double im = detail::get_raw<double>(is);
      c = {re, im};
    }
    grid.rows.push_back(std::move(row));
  }
  plan->validate();
  grid.plan = plan;
  grid.validate();
  return grid;
}

}  // namespace tfa

#endif  // TFA_COEFF_IO_HPP
