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

#include <catch2/catch_amalgamated.hpp>

#include <complex>
#include <random>

#include "tfa/coeff_io.hpp"
#include "tfa/frame.hpp"
#include "tfa/transform.hpp"

using tfa::Complex;
using tfa::WindowFamily;

namespace {

tfa::Signal random_signal(std::size_t n, double fs, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  std::vector<double> x(n);
  for (auto& v : x) v = uni(rng);
  return tfa::Signal(std::move(x), fs);
}

// brute-force inner product <f, g_{k,l}> with the absolute-time phase
Complex direct_coefficient(const std::vector<double>& f, const tfa::NsgfPlan& plan,
                           std::size_t k, std::size_t l) {
  const auto& el = plan.elements[k];
  const std::size_t n = f.size();
  const std::size_t m = el.channels;
  Complex acc{0.0, 0.0};
  for (std::size_t j = 0; j < el.window.size(); ++j) {
    const std::size_t t = el.position + j;  // absolute, unwrapped
    const double angle = -2.0 * M_PI * static_cast<double>(l) *
                         static_cast<double>(t) / static_cast<double>(m);
    acc += f[t % n] * el.window.values[j] *
           Complex{std::cos(angle), std::sin(angle)};
  }
  return acc;
}

}  // namespace

TEST_CASE("zero signal gives zero coefficients") {
  auto w = tfa::make_window(WindowFamily::kHann, 128);
  auto plan = tfa::make_uniform_plan(w, 64, 1024, 8000.0);
  tfa::Signal zero(std::vector<double>(1024, 0.0), 8000.0);
  auto grid = tfa::analyze(zero, plan);
  for (const auto& row : grid.rows)
    for (const auto& c : row) CHECK(std::abs(c) == 0.0);
}

TEST_CASE("complex tone hits a single bin with a rect frame") {
  const std::size_t m = 64;
  auto rect = tfa::make_window(WindowFamily::kRect, m);
  auto plan = tfa::make_uniform_plan(rect, m, m, 8000.0);
  const std::size_t j = 5;
  std::vector<Complex> f(m);
  for (std::size_t t = 0; t < m; ++t) {
    const double a = 2.0 * M_PI * j * t / static_cast<double>(m);
    f[t] = {std::cos(a), std::sin(a)};
  }
  auto grid = tfa::analyze(f, plan);
  for (std::size_t l = 0; l < m; ++l) {
    const double expect = (l == j) ? static_cast<double>(m) : 0.0;
    CHECK(std::abs(grid.rows[0][l] - Complex{expect, 0.0}) < 1e-10 * m);
  }
}

TEST_CASE("unit impulse spreads |window| across every bin") {
  auto w = tfa::make_window(WindowFamily::kHamming, 128);
  auto plan = tfa::make_uniform_plan(w, 64, 512, 8000.0);
  const std::size_t t0 = 200;
  std::vector<double> x(512, 0.0);
  x[t0] = 1.0;
  auto grid = tfa::analyze(tfa::Signal(x, 8000.0), plan);
  for (std::size_t k = 0; k < plan->size(); ++k) {
    const auto& el = plan->elements[k];
    // window value at t0 - a_k, zero if outside support
    double gv = 0.0;
    for (std::size_t j = 0; j < el.window.size(); ++j)
      if ((el.position + j) % 512 == t0) gv = el.window.values[j];
    for (std::size_t l = 0; l < el.channels; ++l)
      CHECK(std::abs(grid.rows[k][l]) == Catch::Approx(std::abs(gv)).margin(1e-12));
  }
}

TEST_CASE("analysis matches the direct inner-product oracle") {
  std::vector<tfa::Window> windows;
  for (int i = 0; i < 6; ++i)
    windows.push_back(
        tfa::make_window(WindowFamily::kHann, (i % 2 == 0) ? 128 : 256));
  auto plan = tfa::build_plan(windows, 512, 8000.0);
  auto f = random_signal(512, 8000.0, 3);
  auto grid = tfa::analyze(f, plan);
  for (std::size_t k = 0; k < plan->size(); ++k)
    for (std::size_t l = 0; l < plan->elements[k].channels; l += 7) {
      const Complex oracle = direct_coefficient(f.samples, *plan, k, l);
      CHECK(std::abs(grid.rows[k][l] - oracle) < 1e-10);
    }
}

TEST_CASE("round trip reconstructs random signals") {
  for (unsigned seed : {1u, 2u, 3u}) {
    std::vector<tfa::Window> windows;
    for (int i = 0; i < 10; ++i)
      windows.push_back(
          tfa::make_window(WindowFamily::kHann, (i < 5) ? 128 : 512));
    auto plan = tfa::build_plan(windows, 1792, 8000.0);
    auto f = random_signal(1792, 8000.0, seed);
    double residue = 0.0;
    auto rebuilt =
        tfa::synthesize(tfa::analyze(f, plan), tfa::dual_plan(plan), &residue);
    double max_err = 0.0;
    for (std::size_t t = 0; t < f.size(); ++t)
      max_err = std::max(max_err, std::abs(rebuilt.samples[t] - f.samples[t]));
    CHECK(max_err <= 1e-10 * f.peak());
    CHECK(residue <= 1e-10 * f.peak());
  }
}

TEST_CASE("all-zero coefficients synthesize silence") {
  auto w = tfa::make_window(WindowFamily::kHann, 128);
  auto plan = tfa::make_uniform_plan(w, 64, 512, 8000.0);
  tfa::CoefficientGrid grid;
  grid.plan = plan;
  for (const auto& el : plan->elements)
    grid.rows.emplace_back(el.channels, Complex{0.0, 0.0});
  auto out = tfa::synthesize(grid, tfa::dual_plan(plan));
  for (double v : out.samples) CHECK(v == 0.0);
}

TEST_CASE("a single coefficient synthesizes its dual atom") {
  auto w = tfa::make_window(WindowFamily::kHann, 128);
  auto plan = tfa::make_uniform_plan(w, 64, 512, 8000.0);
  auto dual = tfa::dual_plan(plan);
  const std::size_t k = 3, l = 17;
  tfa::CoefficientGrid grid;
  grid.plan = plan;
  for (const auto& el : plan->elements)
    grid.rows.emplace_back(el.channels, Complex{0.0, 0.0});
  grid.rows[k][l] = {1.0, 0.0};
  auto atom = tfa::synthesize_complex(grid, dual);
  const auto& el = plan->elements[k];
  std::vector<Complex> expect(512, Complex{0.0, 0.0});
  for (std::size_t j = 0; j < el.window.size(); ++j) {
    const double a = 2.0 * M_PI * static_cast<double>(l) *
                     static_cast<double>(el.position + j) /
                     static_cast<double>(el.channels);
    expect[(el.position + j) % 512] +=
        dual.duals[k][j] * Complex{std::cos(a), std::sin(a)};
  }
  for (std::size_t t = 0; t < 512; ++t)
    CHECK(std::abs(atom[t] - expect[t]) < 1e-12);
}

TEST_CASE("Parseval in the orthogonal rect case") {
  auto rect = tfa::make_window(WindowFamily::kRect, 64);
  auto plan = tfa::make_uniform_plan(rect, 64, 512, 8000.0);
  auto f = random_signal(512, 8000.0, 11);
  auto grid = tfa::analyze(f, plan);
  double coeff_energy = 0.0;
  for (const auto& row : grid.rows)
    for (const auto& c : row) coeff_energy += std::norm(c);
  double sig_energy = 0.0;
  for (double v : f.samples) sig_energy += v * v;
  CHECK(coeff_energy == Catch::Approx(64.0 * sig_energy).epsilon(1e-10));
}

TEST_CASE("analysis is linear") {
  auto w = tfa::make_window(WindowFamily::kHann, 128);
  auto plan = tfa::make_uniform_plan(w, 64, 512, 8000.0);
  auto f = random_signal(512, 8000.0, 21);
  auto h = random_signal(512, 8000.0, 22);
  const double a = 0.7, b = -1.3;
  std::vector<double> mix(512);
  for (std::size_t t = 0; t < 512; ++t)
    mix[t] = a * f.samples[t] + b * h.samples[t];
  auto gm = tfa::analyze(tfa::Signal(mix, 8000.0), plan);
  auto gf = tfa::analyze(f, plan);
  auto gh = tfa::analyze(h, plan);
  for (std::size_t k = 0; k < gm.rows.size(); ++k)
    for (std::size_t l = 0; l < gm.rows[k].size(); ++l)
      CHECK(std::abs(gm.rows[k][l] - (a * gf.rows[k][l] + b * gh.rows[k][l])) <
            1e-12 * 512);
}

TEST_CASE("explicit frame operator matrix is diagonal on tiny instances") {
  const std::size_t n = 64;
  auto w = tfa::make_window(WindowFamily::kHann, 16);
  auto plan = tfa::make_uniform_plan(w, 8, n, 8000.0);
  auto diag = tfa::frame_operator_diagonal(*plan);

  // assemble S = sum_{k,l} g_{k,l} <., g_{k,l}> column by column
  std::vector<std::vector<Complex>> s(n, std::vector<Complex>(n, Complex{0, 0}));
  for (std::size_t k = 0; k < plan->size(); ++k) {
    const auto& el = plan->elements[k];
    const std::size_t m = el.channels;
    for (std::size_t l = 0; l < m; ++l) {
      std::vector<Complex> atom(n, Complex{0, 0});
      for (std::size_t j = 0; j < el.window.size(); ++j) {
        const double a = 2.0 * M_PI * static_cast<double>(l) *
                         static_cast<double>(el.position + j) /
                         static_cast<double>(m);
        atom[(el.position + j) % n] +=
            el.window.values[j] * Complex{std::cos(a), std::sin(a)};
      }
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
          s[r][c] += atom[r] * std::conj(atom[c]);
    }
  }
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      if (r == c)
        CHECK(std::abs(s[r][c] - Complex{diag[r], 0.0}) < 1e-12 * diag[r]);
      else
        CHECK(std::abs(s[r][c]) < 1e-10);
    }
}

TEST_CASE("coefficient file round trip") {
  std::vector<tfa::Window> windows;
  for (int i = 0; i < 6; ++i)
    windows.push_back(
        tfa::make_window(WindowFamily::kHann, (i % 2 == 0) ? 128 : 256));
  auto plan = tfa::build_plan(windows, 512, 8000.0);
  auto f = random_signal(512, 8000.0, 31);
  auto grid = tfa::analyze(f, plan);
  const std::string path = "/tmp/tfa_test_coeffs.nsgc";
  tfa::write_coefficients(grid, path);
  auto back = tfa::read_coefficients(path);
  REQUIRE(back.rows.size() == grid.rows.size());
  for (std::size_t k = 0; k < grid.rows.size(); ++k) {
    CHECK(back.plan->elements[k].position == plan->elements[k].position);
    CHECK(back.plan->elements[k].channels == plan->elements[k].channels);
    for (std::size_t l = 0; l < grid.rows[k].size(); ++l)
      CHECK(back.rows[k][l] == grid.rows[k][l]);  // bit exact
  }
  // the loaded grid is usable: dual + synthesis reproduce the signal
  auto rebuilt = tfa::synthesize(back, tfa::dual_plan(back.plan));
  for (std::size_t t = 0; t < f.size(); ++t)
    CHECK(std::abs(rebuilt.samples[t] - f.samples[t]) < 1e-10);
  std::remove(path.c_str());
}
