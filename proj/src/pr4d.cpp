#include "kspace/pr4d.hpp"

#include <algorithm>
#include <cstdio>
#include <numbers>
#include <stdexcept>
#include <string>

namespace kspace {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::string fmt_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

}  // namespace

int Pr4dParams::max_radius() const {
  return (std::max(ny, nz) - 1) / 2;
}

void Pr4dParams::validate() const {
  if (ny < 3 || nz < 3) throw std::invalid_argument("pr4d: pe sizes must be >= 3");
  if (frames < 1) throw std::invalid_argument("pr4d: fr must be >= 1");
  if (n < 1) throw std::invalid_argument("pr4d: n must be >= 1");
  if (encodings < 1) throw std::invalid_argument("pr4d: e must be >= 1");
  if (!(s >= 1.0)) throw std::invalid_argument("pr4d: s must be >= 1");
}

ParamsEcho Pr4dParams::echo() const {
  return {{"pe", std::to_string(ny) + " " + std::to_string(nz)},
          {"fr", std::to_string(frames)},
          {"n", std::to_string(n)},
          {"e", std::to_string(encodings)},
          {"s", fmt_double(s)},
          {"ar", fmt_double(gamma)},
          {"gs", fmt_double(g_s)}};
}

std::pair<double, double> pr4d_polar(int i, int e, double r_lin,
                                     const Pr4dParams& params) {
  if (i < 1) throw std::invalid_argument("pr4d: sample index must be >= 1");
  if (e < 1 || e > params.encodings)
    throw std::invalid_argument("pr4d: encoding out of range");
  double max_r = params.max_radius();
  if (!(r_lin >= 0.0 && r_lin <= max_r))
    throw std::domain_error("pr4d: r_lin outside [0, R]");

  double frac = mod_pos(params.g_s, 1.0);
  double raw = mod_pos(kTwoPi * frac * (i + static_cast<double>(e - 1) / params.encodings),
                       kTwoPi);
  double scale = std::pow(static_cast<double>(params.nz) / params.ny, params.gamma);
  double theta = std::atan2(scale * std::sin(raw), std::cos(raw));
  if (theta < 0) theta += kTwoPi;

  double r_emit = std::pow(r_lin / max_r, params.s) * max_r;
  return {theta, r_emit};
}

std::vector<double> pr4d_radius_sequence(int count, const Pr4dParams& params) {
  if (count < 1) throw std::invalid_argument("pr4d: count must be >= 1");
  double max_r = params.max_radius();
  double advance = max_r * (2.0 - golden_ratio());
  std::vector<double> seq(count);
  seq[0] = 0.0;
  for (int i = 1; i < count; ++i)
    seq[i] = mod_pos(seq[i - 1] + advance, max_r);
  return seq;
}

SamplingPattern generate_pr4d(const Pr4dParams& params) {
  params.validate();

  SamplingPattern pattern;
  pattern.grid = GridSpec{params.ny, params.nz, params.frames, params.encodings};
  pattern.method = Method::pr4d;
  pattern.params_echo = params.echo();
  pattern.samples.reserve(static_cast<std::size_t>(params.samples_per_encoding()) *
                          params.encodings);

  int max_dim = std::max(params.ny, params.nz);
  double scale_y = static_cast<double>(params.ny) / max_dim;
  double scale_z = static_cast<double>(params.nz) / max_dim;
  std::vector<double> radii =
      pr4d_radius_sequence(params.samples_per_encoding(), params);

  for (int e = 1; e <= params.encodings; ++e) {
    for (int i = 1; i <= params.samples_per_encoding(); ++i) {
      auto [theta, r_emit] = pr4d_polar(i, e, radii[i - 1], params);
      auto [ky, kz] =
          polar_to_grid(r_emit, theta, pattern.grid, scale_y, scale_z);
      int frame = (i + params.n - 1) / params.n;
      pattern.samples.push_back(Sample{e, i, frame, ky, kz});
    }
  }
  return pattern;
}

}  // namespace kspace
