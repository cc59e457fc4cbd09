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

// Command line front end: analyze | adapt | reconstruct | experiment |
// roundtrip. See README.md for the config file format (flat key=value).

#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tfa/adapt.hpp"
#include "tfa/band_weights.hpp"
#include "tfa/coeff_io.hpp"
#include "tfa/densities.hpp"
#include "tfa/entropy.hpp"
#include "tfa/frame.hpp"
#include "tfa/reconstruct.hpp"
#include "tfa/signal.hpp"
#include "tfa/transform.hpp"
#include "tfa/wav.hpp"

namespace {

constexpr double kDbFloor = -120.0;

struct RunConfig {
  double alpha = 0.7;
  double cut_hz = 300.0;
  std::vector<std::size_t> scales{512, 1024, 2048, 4096};
  std::string mask = "none";        // low300 | high300 | none
  std::string weights = "binary";   // binary | raised-cosine
  double transition_hz = 100.0;
  std::uint64_t seed = 1;
  int segment_frames = 4;
  int overlap_frames = 3;
  std::string family = "hann";
};

std::vector<std::size_t> parse_scales(const std::string& s) {
  std::vector<std::size_t> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stoul(tok));
  if (out.empty()) throw tfa::Error(tfa::ErrorCode::kInvalidArgument, "empty scale list");
  return out;
}

void load_config_file(const std::string& path, RunConfig& cfg) {
  std::ifstream in(path);
  if (!in)
    throw tfa::Error(tfa::ErrorCode::kFileUnreadable, "cannot open config " + path);
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    const auto eq = line.find('=');
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (eq == std::string::npos)
      throw tfa::Error(tfa::ErrorCode::kInvalidArgument,
                       "config line is not key=value: " + line);
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    if (key == "alpha") cfg.alpha = std::stod(val);
    else if (key == "cut") cfg.cut_hz = std::stod(val);
    else if (key == "scales") cfg.scales = parse_scales(val);
    else if (key == "mask") cfg.mask = val;
    else if (key == "weights") cfg.weights = val;
    else if (key == "transition") cfg.transition_hz = std::stod(val);
    else if (key == "seed") cfg.seed = std::stoull(val);
    else if (key == "segment_frames") cfg.segment_frames = std::stoi(val);
    else if (key == "overlap_frames") cfg.overlap_frames = std::stoi(val);
    else if (key == "family") cfg.family = val;
    else
      throw tfa::Error(tfa::ErrorCode::kInvalidArgument,
                       "unknown config key: " + key);
  }
}

tfa::AdaptationConfig adaptation_config(const RunConfig& cfg) {
  tfa::AdaptationConfig a;
  a.scales = cfg.scales;
  a.alpha = cfg.alpha;
  a.segment_frames = cfg.segment_frames;
  a.overlap_frames = cfg.overlap_frames;
  a.family = tfa::family_from_name(cfg.family);
  a.validate();
  return a;
}

std::vector<tfa::BandMask> masks_from_config(const RunConfig& cfg) {
  if (cfg.mask == "none") return {tfa::mask_none()};
  if (cfg.mask == "low300" || cfg.mask == "low")
    return {tfa::mask_low(cfg.cut_hz)};
  if (cfg.mask == "high300" || cfg.mask == "high")
    return {tfa::mask_high(cfg.cut_hz)};
  throw tfa::Error(tfa::ErrorCode::kInvalidArgument, "unknown mask: " + cfg.mask);
}

double to_db(double power) {
  const double db = 10.0 * std::log10(std::max(power, 1e-300));
  return std::max(db, kDbFloor);
}

void write_spectrogram_csv(const tfa::CoefficientGrid& grid,
                           const std::string& path) {
  std::ofstream os(path);
  if (!os) throw tfa::Error(tfa::ErrorCode::kIoFailure, "cannot write " + path);
  os.precision(8);
  const auto& plan = *grid.plan;
  os << "time_s";
  const std::size_t half = plan.elements.front().channels / 2;
  for (std::size_t l = 0; l <= half; ++l)
    os << ",db_bin" << l;
  os << "\n";
  for (std::size_t k = 0; k < plan.size(); ++k) {
    os << static_cast<double>(plan.elements[k].position) / plan.sample_rate;
    for (std::size_t l = 0; l <= half && l < grid.rows[k].size(); ++l)
      os << "," << to_db(std::norm(grid.rows[k][l]));
    os << "\n";
  }
}

void write_spectrogram_pnm(const tfa::CoefficientGrid& grid,
                           const std::string& path) {
  const auto& plan = *grid.plan;
  const std::size_t width = plan.size();
  const std::size_t height = plan.elements.front().channels / 2 + 1;
  std::ofstream os(path, std::ios::binary);
  if (!os) throw tfa::Error(tfa::ErrorCode::kIoFailure, "cannot write " + path);
  os << "P5\n" << width << " " << height << "\n255\n";
  for (std::size_t row = 0; row < height; ++row) {
    const std::size_t l = height - 1 - row;  // low frequencies at the bottom
    for (std::size_t k = 0; k < width; ++k) {
      const double db =
          l < grid.rows[k].size() ? to_db(std::norm(grid.rows[k][l])) : kDbFloor;
      const auto px = static_cast<unsigned char>(
          std::lround(255.0 * (db - kDbFloor) / -kDbFloor));
      os.put(static_cast<char>(px));
    }
  }
}

void write_decisions_csv(const tfa::AdaptationResult& result,
                         const tfa::AdaptationConfig& cfg, double sample_rate,
                         const std::string& path) {
  std::ofstream os(path);
  if (!os) throw tfa::Error(tfa::ErrorCode::kIoFailure, "cannot write " + path);
  os.precision(12);
  os << "band,segment_start_s,chosen_scale";
  for (std::size_t s : cfg.scales) os << ",H" << s;
  os << "\n";
  for (const auto& band : result.bands)
    for (const auto& dec : band.decisions) {
      os << band.mask_name << ","
         << static_cast<double>(dec.segment.start) / sample_rate << ","
         << dec.chosen_scale;
      for (std::size_t s : cfg.scales) {
        auto it = dec.entropy_bits.find(s);
        os << ",";
        if (it != dec.entropy_bits.end()) os << it->second;
        else os << "nan";
      }
      os << "\n";
    }
}

tfa::Signal trimmed(const tfa::Signal& s, std::size_t len) {
  if (s.size() == len) return s;
  std::vector<double> x(s.samples.begin(), s.samples.begin() + len);
  return tfa::Signal(std::move(x), s.sample_rate);
}

int cmd_analyze(const RunConfig& cfg, const std::string& input,
                std::size_t scale, bool paper_fig, const std::string& out,
                const std::string& csv, const std::string& pnm) {
  tfa::Signal f = tfa::read_wav(input);
  std::size_t window_len = paper_fig ? 4096 : scale;
  std::size_t hop = paper_fig ? 1024 : window_len / 2;  // 3072-sample overlap
  f = tfa::pad_to_multiple(f, hop);
  auto win = tfa::make_window(tfa::WindowFamily::kHamming, window_len);
  auto plan = tfa::make_uniform_plan(win, hop, f.size(), f.sample_rate);
  auto grid = tfa::analyze(f, plan);
  if (!out.empty()) tfa::write_coefficients(grid, out);
  if (!csv.empty()) write_spectrogram_csv(grid, csv);
  if (!pnm.empty()) write_spectrogram_pnm(grid, pnm);
  std::cout << "analyzed " << input << ": " << plan->size() << " frames, window "
            << window_len << ", hop " << hop << "\n";
  return 0;
}

int cmd_adapt(const RunConfig& cfg, const std::string& input,
              const std::string& out) {
  tfa::Signal f = tfa::read_wav(input);
  auto acfg = adaptation_config(cfg);
  f = tfa::pad_to_multiple(f, acfg.largest() / 2);
  auto result = tfa::adapt(f, acfg, masks_from_config(cfg));
  write_decisions_csv(result, acfg, f.sample_rate, out);
  for (const auto& band : result.bands)
    std::cout << "band " << band.mask_name << ": " << band.decisions.size()
              << " segments, plan of " << band.plan->size() << " frames\n";
  return 0;
}

int cmd_reconstruct(const RunConfig& cfg, const std::string& input,
                    const std::string& out, const std::string& error_out,
                    const std::string& report_path) {
  tfa::Signal original = tfa::read_wav(input);
  auto acfg = adaptation_config(cfg);
  tfa::Signal f = tfa::pad_to_multiple(original, acfg.largest() / 2);

  const double nyquist = f.sample_rate / 2.0;
  const auto kind = cfg.weights == "raised-cosine"
                        ? tfa::WeightKind::kRaisedCosine
                        : tfa::WeightKind::kBinary;
  auto weights =
      tfa::make_band_weights(kind, cfg.cut_hz, nyquist, cfg.transition_hz);

  auto result = tfa::adapt(
      f, acfg, {tfa::mask_low(cfg.cut_hz), tfa::mask_high(cfg.cut_hz)});
  std::vector<tfa::BandExpansion> bands;
  for (std::size_t p = 0; p < 2; ++p) {
    auto plan = result.bands[p].plan;
    auto coeffs = tfa::weight_coefficients(tfa::analyze(f, plan), weights, p);
    bands.push_back({std::move(coeffs), tfa::dual_plan(plan), p});
  }
  auto recon = tfa::reconstruct_weighted(bands, weights);
  auto approx = trimmed(recon.signal, original.size());
  auto err = tfa::error_metrics(original, approx);
  const double b_max =
      f.sample_rate / static_cast<double>(acfg.smallest());
  const double near_frac =
      tfa::error_energy_near_cut(err.error_signal, cfg.cut_hz, 2.0 * b_max);

  if (!out.empty()) tfa::write_wav(approx, out);
  if (!error_out.empty()) tfa::write_wav(err.error_signal, error_out);

  std::ostringstream rep;
  rep.precision(8);
  rep << "{\"max_abs\":" << err.max_abs << ",\"rms\":" << err.rms
      << ",\"near_cut_fraction\":" << near_frac
      << ",\"dropped_energy\":" << recon.dropped_energy
      << ",\"cut_hz\":" << cfg.cut_hz << ",\"weights\":\"" << cfg.weights
      << "\"}";
  std::cout << rep.str() << "\n";
  if (!report_path.empty()) {
    std::ofstream os(report_path);
    os << rep.str() << "\n";
  }
  return 0;
}

int cmd_experiment(const RunConfig& cfg, const std::string& model,
                   std::size_t n, std::size_t n_part, double r_part,
                   const std::string& out) {
  tfa::EntropySurface surface;
  if (model == "DM") surface = tfa::dm_surface(n, cfg.seed);
  else if (model == "DL") surface = tfa::dl_surface(n, n_part, r_part, cfg.seed);
  else
    throw tfa::Error(tfa::ErrorCode::kInvalidArgument, "model must be DM or DL");
  std::ofstream os(out);
  if (!os) throw tfa::Error(tfa::ErrorCode::kIoFailure, "cannot write " + out);
  os << surface.to_csv();
  std::cout << "wrote " << surface.alphas.size() << "x" << surface.sweep.size()
            << " surface to " << out << "\n";
  return 0;
}

int cmd_roundtrip(const RunConfig& cfg, const std::string& input) {
  tfa::Signal original = tfa::read_wav(input);
  auto acfg = adaptation_config(cfg);
  tfa::Signal f = tfa::pad_to_multiple(original, acfg.largest() / 2);
  auto result = tfa::adapt(f, acfg, masks_from_config(cfg));
  const auto& plan = result.bands.front().plan;
  auto rebuilt = tfa::synthesize(tfa::analyze(f, plan), tfa::dual_plan(plan));
  auto err = tfa::error_metrics(f, rebuilt);
  std::cout << "{\"max_abs\":" << err.max_abs << ",\"rms\":" << err.rms << "}\n";
  const double tol = 1e-10 * std::max(f.peak(), 1e-30);
  return err.max_abs <= tol ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"adaptive time-frequency analysis and resynthesis"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string config_path, scales_str, input, out, csv, pnm, error_out, report;
  std::string model = "DM";
  std::size_t scale = 4096, n = 100, n_part = 5;
  double r_part = 2.0;
  bool paper_fig = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "flat key=value config file");
    sub->add_option("--alpha", cfg.alpha, "entropy order");
    sub->add_option("--cut", cfg.cut_hz, "cut frequency, Hz");
    sub->add_option("--scales", scales_str, "comma list of window lengths");
    sub->add_option("--mask", cfg.mask, "low300|high300|none");
    sub->add_option("--weights", cfg.weights, "binary|raised-cosine");
    sub->add_option("--transition", cfg.transition_hz, "transition width, Hz");
    sub->add_option("--seed", cfg.seed, "random seed");
    sub->add_option("--family", cfg.family, "hann|hamming|blackman|rect");
  };

  auto* a_analyze = app.add_subcommand("analyze", "fixed-resolution analysis");
  a_analyze->add_option("input", input)->required();
  a_analyze->add_option("--scale", scale, "window length, samples");
  a_analyze->add_flag("--preset-paper-fig,--preset", paper_fig,
                      "4096 Hamming window, 3072 samples overlap");
  a_analyze->add_option("--out", out, "coefficient binary output");
  a_analyze->add_option("--csv", csv, "spectrogram CSV output");
  a_analyze->add_option("--pnm", pnm, "grayscale PNM spectrogram");
  add_common(a_analyze);

  auto* a_adapt = app.add_subcommand("adapt", "entropy-driven scale selection");
  a_adapt->add_option("input", input)->required();
  a_adapt->add_option("--out", out, "decision CSV")->required();
  add_common(a_adapt);

  auto* a_rec = app.add_subcommand("reconstruct", "two-band weighted resynthesis");
  a_rec->add_option("input", input)->required();
  a_rec->add_option("--out", out, "output WAV");
  a_rec->add_option("--error-out", error_out, "error signal WAV");
  a_rec->add_option("--report", report, "JSON report path");
  add_common(a_rec);

  auto* a_exp = app.add_subcommand("experiment", "synthetic density surfaces");
  a_exp->add_option("--model", model, "DM|DL")->required();
  a_exp->add_option("--out", out, "CSV output")->required();
  a_exp->add_option("--N", n, "density length");
  a_exp->add_option("--npart", n_part, "partials (DL)");
  a_exp->add_option("--rpart", r_part, "partial attenuation (DL)");
  add_common(a_exp);

  auto* a_rt = app.add_subcommand("roundtrip", "adapted analysis + resynthesis check");
  a_rt->add_option("input", input)->required();
  add_common(a_rt);

  CLI11_PARSE(app, argc, argv);

  try {
    // config file first, then explicit flags on top
    if (!config_path.empty()) {
      RunConfig file_cfg;
      load_config_file(config_path, file_cfg);
      RunConfig flags = cfg;
      cfg = file_cfg;
      auto* sub = app.get_subcommands().front();
      if (sub->count("--alpha")) cfg.alpha = flags.alpha;
      if (sub->count("--cut")) cfg.cut_hz = flags.cut_hz;
      if (sub->count("--mask")) cfg.mask = flags.mask;
      if (sub->count("--weights")) cfg.weights = flags.weights;
      if (sub->count("--transition")) cfg.transition_hz = flags.transition_hz;
      if (sub->count("--seed")) cfg.seed = flags.seed;
      if (sub->count("--family")) cfg.family = flags.family;
    }
    if (!scales_str.empty()) cfg.scales = parse_scales(scales_str);

    if (a_analyze->parsed())
      return cmd_analyze(cfg, input, scale, paper_fig, out, csv, pnm);
    if (a_adapt->parsed()) return cmd_adapt(cfg, input, out);
    if (a_rec->parsed()) return cmd_reconstruct(cfg, input, out, error_out, report);
    if (a_exp->parsed()) return cmd_experiment(cfg, model, n, n_part, r_part, out);
    if (a_rt->parsed()) return cmd_roundtrip(cfg, input);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
