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

#include <cmath>
#include <limits>
#include <random>

#include "tfa/entropy.hpp"
#include "tfa/frame.hpp"
#include "tfa/transform.hpp"

namespace {

tfa::SpectrogramGrid grid_of(std::vector<double> cells, double area = 1.0) {
  tfa::SpectrogramGrid z;
  z.cells = {std::move(cells)};
  z.cell_area = {area};
  return z;
}

double entropy(const tfa::SpectrogramGrid& z, double alpha) {
  tfa::EntropyQuery q;
  q.alpha = alpha;
  return tfa::renyi_entropy(z, q);
}

std::vector<double> random_density(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> uni(0.01, 1.0);
  std::vector<double> v(n);
  for (auto& x : v) x = uni(rng);
  return v;
}

// independent oracle: direct summation of the defining formula
double brute_force_renyi(const std::vector<double>& cells, double alpha,
                         double area) {
  double total = 0.0;
  for (double v : cells) total += v;
  if (alpha == 1.0) {
    double h = 0.0;
    for (double v : cells)
      if (v > 0.0) h -= (v / total) * std::log2(v / total);
    return h + std::log2(area);
  }
  double s = 0.0;
  for (double v : cells)
    if (v > 0.0) s += std::pow(v / total, alpha);
  return std::log2(s) / (1.0 - alpha) + std::log2(area);
}

}  // namespace

TEST_CASE("uniform density over 4 cells is 2 bits at any order") {
  auto z = grid_of({1.0, 1.0, 1.0, 1.0});
  for (double a : {0.0, 0.5, 0.7, 1.0, 2.0, 3.0})
    CHECK(entropy(z, a) == Catch::Approx(2.0).margin(1e-12));
}

TEST_CASE("single nonzero cell is 0 bits at any order") {
  auto z = grid_of({0.0, 0.0, 5.0, 0.0});
  for (double a : {0.0, 0.5, 0.7, 1.0, 2.0, 3.0})
    CHECK(entropy(z, a) == Catch::Approx(0.0).margin(1e-12));
}

TEST_CASE("order 0 counts positive cells") {
  auto z = grid_of({1, 2, 3, 4, 5, 6, 7, 0, 0});
  CHECK(entropy(z, 0.0) == Catch::Approx(std::log2(7.0)).margin(1e-12));
}

TEST_CASE("order 2 matches the brute-force oracle") {
  auto cells = random_density(16, 5);
  auto z = grid_of(cells);
  CHECK(entropy(z, 2.0) ==
        Catch::Approx(brute_force_renyi(cells, 2.0, 1.0)).margin(1e-12));
  // and a non-unit cell area shifts by log2(ab)
  auto z2 = grid_of(cells, 0.5);
  CHECK(entropy(z2, 2.0) == Catch::Approx(entropy(z, 2.0) - 1.0).margin(1e-12));
}

TEST_CASE("alpha monotonicity on random densities") {
  const std::vector<double> orders{0.0, 0.5, 0.7, 1.0, 2.0, 3.0};
  for (unsigned seed = 0; seed < 50; ++seed) {
    auto z = grid_of(random_density(32, seed));
    double prev = std::numeric_limits<double>::infinity();
    for (double a : orders) {
      const double h = entropy(z, a);
      CHECK(h <= prev + 1e-12);
      prev = h;
    }
  }
}

TEST_CASE("entropy bounds and extremes") {
  for (unsigned seed = 100; seed < 120; ++seed) {
    auto z = grid_of(random_density(64, seed));
    for (double a : {0.0, 0.5, 1.0, 2.0}) {
      const double h = entropy(z, a);
      CHECK(h >= -1e-12);
      CHECK(h <= std::log2(64.0) + 1e-12);
    }
  }
}

TEST_CASE("scale invariance") {
  auto cells = random_density(32, 42);
  auto z = grid_of(cells);
  std::vector<double> scaled = cells;
  for (auto& v : scaled) v *= 123.456;
  auto z2 = grid_of(scaled);
  for (double a : {0.0, 0.7, 1.0, 2.0})
    CHECK(entropy(z, a) == Catch::Approx(entropy(z2, a)).margin(1e-10));
}

TEST_CASE("Shannon limit as alpha approaches 1") {
  auto z = grid_of(random_density(32, 9));
  double prev_gap = std::numeric_limits<double>::infinity();
  for (double da : {1e-1, 1e-2, 1e-4}) {
    const double gap = std::max(tfa::shannon_limit_gap(z, 1.0 + da),
                                tfa::shannon_limit_gap(z, 1.0 - da));
    CHECK(gap < prev_gap);
    prev_gap = gap;
  }
  CHECK(tfa::shannon_limit_gap(z, 1.0001) <= 1e-3);
  // uniform: exactly log2 N for every order
  auto u = grid_of(std::vector<double>(8, 0.125));
  CHECK(tfa::shannon_limit_gap(u, 2.5) == Catch::Approx(0.0).margin(1e-12));
}

TEST_CASE("uniform constant weight leaves entropy unchanged") {
  auto cells = random_density(16, 77);
  auto z = grid_of(cells);
  auto z2 = tfa::weighted_spectrogram(z, [](std::size_t, std::size_t) { return 2.0; });
  for (double a : {0.5, 1.0, 2.0})
    CHECK(entropy(z, a) == Catch::Approx(entropy(z2, a)).margin(1e-10));
}

TEST_CASE("binary frequency mask zeroes the right cells") {
  auto w = tfa::make_window(tfa::WindowFamily::kHann, 128);
  auto plan = tfa::make_uniform_plan(w, 64, 512, 1024.0);  // bins of 8 Hz
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  std::vector<double> x(512);
  for (auto& v : x) v = uni(rng);
  auto z = tfa::spectrogram(tfa::analyze(tfa::Signal(x, 1024.0), plan));
  const tfa::NsgfPlan& p = *plan;
  auto masked = tfa::weighted_spectrogram(z, [&p](std::size_t k, std::size_t l) {
    return p.bin_frequency(k, l) > 300.0 ? 0.0 : 1.0;
  });
  for (std::size_t k = 0; k < masked.cells.size(); ++k)
    for (std::size_t l = 0; l < masked.cells[k].size(); ++l) {
      if (p.bin_frequency(k, l) > 300.0) CHECK(masked.cells[k][l] == 0.0);
      else CHECK(masked.cells[k][l] == z.cells[k][l]);
    }
  CHECK(masked.cell_area == z.cell_area);
}

TEST_CASE("spectrogram cells and areas") {
  auto w = tfa::make_window(tfa::WindowFamily::kHann, 1024);
  auto plan = tfa::make_uniform_plan(w, 512, 4096, 44100.0);
  std::vector<double> x(4096, 0.0);
  x[100] = 1.0;
  auto grid = tfa::analyze(tfa::Signal(x, 44100.0), plan);
  auto z = tfa::spectrogram(grid);
  for (double a : z.cell_area) CHECK(a == Catch::Approx(0.5));
  for (std::size_t k = 0; k < z.cells.size(); ++k)
    for (std::size_t l = 0; l < z.cells[k].size(); ++l)
      CHECK(z.cells[k][l] == Catch::Approx(std::norm(grid.rows[k][l])));
}

TEST_CASE("entropy error paths") {
  auto z = grid_of({0.0, 0.0});
  tfa::EntropyQuery q;
  CHECK_THROWS_AS(tfa::renyi_entropy(z, q), tfa::Error);
  auto ok = grid_of({1.0, 1.0});
  q.alpha = -0.5;
  CHECK_THROWS_AS(tfa::renyi_entropy(ok, q), tfa::Error);
  // mixed areas need the explicit opt-in
  tfa::SpectrogramGrid mixed;
  mixed.cells = {{1.0, 2.0}, {3.0, 4.0}};
  mixed.cell_area = {0.5, 1.0};
  tfa::EntropyQuery q2;
  q2.alpha = 2.0;
  CHECK_THROWS_AS(tfa::renyi_entropy(mixed, q2), tfa::Error);
  q2.allow_mixed_area = true;
  CHECK(std::isfinite(tfa::renyi_entropy(mixed, q2)));
}
