#include "kspace/vista.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

#include "kspace/gro.hpp"

namespace kspace {

namespace {

constexpr double kMinSeparationSq = 1e-18;  // squared coincidence guard (1e-9)

std::string fmt_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

}  // namespace

double VistaParams::effective_w() const {
  if (w > 0) return w;
  return std::max(pe / (10.0 * n) + 0.25, 1.0);
}

double VistaParams::effective_sigma() const {
  return sigma > 0 ? sigma : pe / 6.0;
}

void VistaParams::validate() const {
  if (pe < 4) throw std::invalid_argument("vista: pe must be >= 4");
  if (frames < 1) throw std::invalid_argument("vista: fr must be >= 1");
  if (n < 1) throw std::invalid_argument("vista: n must be >= 1");
  if (n > pe)
    throw std::invalid_argument("vista: n lines cannot fit on a grid of pe rows");
  if (!(s >= 1.0 && s <= 10.0))
    throw std::invalid_argument("vista: s must be in [1, 10]");
  if (!(effective_sigma() > 0)) throw std::invalid_argument("vista: sig must be > 0");
  if (!(beta > 0)) throw std::invalid_argument("vista: beta must be > 0");
  if (max_iters < 0) throw std::invalid_argument("vista: max-iters must be >= 0");
}

ParamsEcho VistaParams::echo() const {
  return {{"pe", std::to_string(pe)},
          {"fr", std::to_string(frames)},
          {"n", std::to_string(n)},
          {"s", fmt_double(s)},
          {"sig", fmt_double(effective_sigma())},
          {"w", fmt_double(effective_w())},
          {"beta", fmt_double(beta)},
          {"max_iters", std::to_string(max_iters)},
          {"seed", std::to_string(seed)}};
}

double density_weight(double ky, const VistaParams& params) {
  double d = ky - params.pe / 2.0 - 1.0;
  double sigma = params.effective_sigma();
  return 1.0 - std::log10(params.s) * std::exp(-(d * d) / (2.0 * sigma * sigma));
}

double weighted_energy(const std::vector<double>& ky,
                       const std::vector<int>& frame,
                       const std::vector<double>& weight, double w,
                       double beta) {
  std::size_t m = ky.size();
  if (m < 2 || frame.size() != m || weight.size() != m)
    throw std::invalid_argument("riesz energy: need >= 2 samples with matching frames/weights");
  double energy = 0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      double dky = ky[i] - ky[j];
      double dt = static_cast<double>(frame[i] - frame[j]);
      double dist_sq = dky * dky + w * dt * dt;
      if (dist_sq < kMinSeparationSq)
        throw std::domain_error("riesz energy: coincident samples");
      energy += weight[i] * weight[j] * std::pow(dist_sq, -beta / 2.0);
    }
  }
  return energy;
}

std::vector<double> weighted_energy_gradient(const std::vector<double>& ky,
                                             const std::vector<int>& frame,
                                             const std::vector<double>& weight,
                                             double w, double beta) {
  std::size_t m = ky.size();
  std::vector<double> grad(m, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      double dky = ky[i] - ky[j];
      double dt = static_cast<double>(frame[i] - frame[j]);
      double dist_sq = dky * dky + w * dt * dt;
      if (dist_sq < kMinSeparationSq)
        throw std::domain_error("riesz energy: coincident samples");
      double common =
          -beta * weight[i] * weight[j] * std::pow(dist_sq, -beta / 2.0 - 1.0);
      grad[i] += common * dky;
      grad[j] -= common * dky;
    }
  }
  return grad;
}

double riesz_energy(const std::vector<double>& ky, const std::vector<int>& frame,
                    const VistaParams& params) {
  std::vector<double> weight(ky.size());
  for (std::size_t i = 0; i < ky.size(); ++i)
    weight[i] = density_weight(ky[i], params);
  return weighted_energy(ky, frame, weight, params.effective_w(), params.beta);
}

double riesz_energy(const SamplingPattern& pattern, const VistaParams& params) {
  std::vector<double> ky(pattern.samples.size());
  std::vector<int> frame(pattern.samples.size());
  for (std::size_t i = 0; i < pattern.samples.size(); ++i) {
    ky[i] = pattern.samples[i].ky;
    frame[i] = pattern.samples[i].frame;
  }
  return riesz_energy(ky, frame, params);
}

namespace {

// Starting configuration: the GRO construction's continuous stretched
// positions with matching (N, F, n, s) and alpha = 3. The comb must fit the
// small grid; when it cannot (n > round(N/s)) fall back to s = 1.
VistaConfig initial_config(const VistaParams& params) {
  GroParams init;
  init.pe = params.pe;
  init.frames = params.frames;
  init.n = params.n;
  init.encodings = 1;
  init.s = params.s;
  init.alpha = 3.0;
  init.tau = 1;
  StretchMap probe = make_stretch_map(init.pe, init.s, init.alpha);
  if (params.n > probe.small_n) init.s = 1.0;
  StretchMap map = make_stretch_map(init.pe, init.s, init.alpha);

  VistaConfig cfg;
  cfg.ky.reserve(static_cast<std::size_t>(params.n) * params.frames);
  cfg.frame.reserve(cfg.ky.capacity());
  std::vector<std::vector<double>> small = gro_small_grid_frames(init, 1);
  for (int t = 0; t < params.frames; ++t) {
    for (double p : small[t]) {
      double pos = std::clamp(map.apply_real(p + 1.0), 1.0,
                              static_cast<double>(params.pe));
      cfg.ky.push_back(pos);
      cfg.frame.push_back(t + 1);
    }
  }
  return cfg;
}

std::vector<int> per_frame_counts(const std::vector<int>& frame, int n_frames) {
  std::vector<int> counts(n_frames, 0);
  for (int f : frame) ++counts[f - 1];
  return counts;
}

// Rounds positions to the grid and resolves within-frame duplicates by
// moving the later sample to the nearest free ky (lower index wins ties).
std::vector<std::vector<int>> snap_to_grid(const VistaConfig& cfg,
                                           const VistaParams& params) {
  std::vector<std::vector<int>> frame_ky(params.frames);
  std::vector<std::vector<char>> occupied(
      params.frames, std::vector<char>(params.pe + 1, 0));
  for (std::size_t i = 0; i < cfg.ky.size(); ++i) {
    int f = cfg.frame[i];
    int k = std::clamp(round_half_away(cfg.ky[i]), 1, params.pe);
    if (occupied[f - 1][k]) {
      int found = 0;
      for (int d = 1; d < params.pe && !found; ++d) {
        if (k - d >= 1 && !occupied[f - 1][k - d]) found = k - d;
        else if (k + d <= params.pe && !occupied[f - 1][k + d]) found = k + d;
      }
      k = found;
    }
    occupied[f - 1][k] = 1;
    frame_ky[f - 1].push_back(k);
  }
  return frame_ky;
}

}  // namespace

SamplingPattern generate_vista(const VistaParams& params, VistaTrace* trace) {
  params.validate();
  const double w = params.effective_w();
  const int n_pos = params.pe;

  VistaConfig cfg = initial_config(params);
  const std::size_t m = cfg.ky.size();

  auto full_energy = [&](const std::vector<double>& ky) {
    return riesz_energy(ky, cfg.frame, params);
  };

  double energy = full_energy(cfg.ky);
  if (trace) {
    trace->energies.clear();
    trace->frame_counts.clear();
    trace->energies.push_back(energy);
    trace->frame_counts.push_back(per_frame_counts(cfg.frame, params.frames));
  }

  std::vector<double> weight(m), direction(m), trial(m);
  for (int iter = 0; iter < params.max_iters; ++iter) {
    for (std::size_t i = 0; i < m; ++i)
      weight[i] = density_weight(cfg.ky[i], params);
    std::vector<double> grad =
        weighted_energy_gradient(cfg.ky, cfg.frame, weight, w, params.beta);

    double grad_max = 0;
    for (double g : grad) grad_max = std::max(grad_max, std::abs(g));
    if (grad_max == 0) break;
    for (std::size_t i = 0; i < m; ++i) direction[i] = -grad[i] / grad_max;

    // Backtracking from a 1-grid-unit step; only moves that lower the full
    // cost (weights re-evaluated at the trial positions) are accepted.
    bool accepted = false;
    double trial_energy = 0;
    for (double step = 1.0; step > 1e-6; step /= 2) {
      for (std::size_t i = 0; i < m; ++i)
        trial[i] = std::clamp(cfg.ky[i] + step * direction[i], 1.0,
                              static_cast<double>(n_pos));
      trial_energy = full_energy(trial);
      if (trial_energy < energy) {
        accepted = true;
        break;
      }
    }
    if (!accepted) break;

    double rel_decrease = (energy - trial_energy) / energy;
    cfg.ky.swap(trial);
    energy = trial_energy;
    if (trace) {
      trace->energies.push_back(energy);
      trace->frame_counts.push_back(per_frame_counts(cfg.frame, params.frames));
    }
    if (rel_decrease < 1e-6) break;
  }

  SamplingPattern pattern;
  pattern.grid = GridSpec{params.pe, 1, params.frames, 1};
  pattern.method = Method::vista;
  pattern.params_echo = params.echo();
  pattern.samples.reserve(m);
  int order = 0;
  for (auto [frame, ky] : order_acquisition(snap_to_grid(cfg, params)))
    pattern.samples.push_back(Sample{1, ++order, frame, ky, 1});
  return pattern;
}

}  // namespace kspace
