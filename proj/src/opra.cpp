#include "kspace/opra.hpp"

#include <cmath>
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

void OpraParams::validate() const {
  if (ny < 2 || nz < 2) throw std::invalid_argument("opra: pe sizes must be >= 2");
  if (frames < 1) throw std::invalid_argument("opra: fr must be >= 1");
  if (n < 1) throw std::invalid_argument("opra: n must be >= 1");
  if (leaflet_len < 2 || leaflet_len % 2 != 0)
    throw std::invalid_argument("opra: l must be an even integer >= 2");
  if (total_samples() % leaflet_len != 0)
    throw std::invalid_argument("opra: l must divide n * fr (whole leaflets only)");
  if (!(s >= 1.0)) throw std::invalid_argument("opra: s must be >= 1");
}

ParamsEcho OpraParams::echo() const {
  return {{"pe", std::to_string(ny) + " " + std::to_string(nz)},
          {"fr", std::to_string(frames)},
          {"n", std::to_string(n)},
          {"l", std::to_string(leaflet_len)},
          {"s", fmt_double(s)},
          {"ar", fmt_double(gamma)},
          {"gs", fmt_double(g_s)},
          {"phi", fmt_double(phi)}};
}

double corrected_angle(double theta, double scale) {
  double angle = std::atan2(scale * std::sin(theta), std::cos(theta));
  if (angle < 0) angle += kTwoPi;
  return angle;
}

double boundary_radius(double theta, int ny, int nz) {
  double sy = ny * std::sin(theta);
  double cz = nz * std::cos(theta);
  return static_cast<double>(ny) * nz / std::sqrt(sy * sy + cz * cz);
}

Leaflet leaflet_geometry(int l, const OpraParams& params) {
  params.validate();
  if (l < 1) throw std::invalid_argument("opra: leaflet index must be >= 1");

  const int len = params.leaflet_len;
  const int half = len / 2;
  const double golden_angle = std::numbers::pi / golden_ratio();
  const double scale = std::pow(static_cast<double>(params.nz) / params.ny,
                                params.gamma + 1.0);
  const double shift = mod_pos((l - 1) * params.g_s, 1.0);

  double raw_arm1 = mod_pos((l - 1) * golden_angle, kTwoPi);
  double raw_arm2 = mod_pos(l * golden_angle - params.phi, kTwoPi);
  double theta_arm1 = corrected_angle(raw_arm1, scale);
  double theta_arm2 = corrected_angle(raw_arm2, scale);
  double r_arm1 = boundary_radius(theta_arm1, params.ny, params.nz);
  double r_arm2 = boundary_radius(theta_arm2, params.ny, params.nz);

  Leaflet leaf;
  leaf.index = l;
  leaf.theta.resize(len);
  leaf.radius.resize(len);
  for (int j = 1; j <= len; ++j) {
    // Arm 1 descends toward the elbow; arm 2 mirrors the sample index so its
    // radii ascend away from it, keeping the elbow at the k-space center.
    bool first_arm = j <= half;
    double big_r = first_arm ? r_arm1 : r_arm2;
    int step = first_arm ? (j - 1) : (len - j);
    double raw = big_r - step * big_r / half - shift * big_r / half;
    leaf.theta[j - 1] = first_arm ? theta_arm1 : theta_arm2;
    leaf.radius[j - 1] = std::pow(raw / big_r, params.s) * (big_r / 2.0);
  }
  return leaf;
}

SamplingPattern generate_opra(const OpraParams& params) {
  params.validate();

  SamplingPattern pattern;
  pattern.grid = GridSpec{params.ny, params.nz, params.frames, 1};
  pattern.method = Method::opra;
  pattern.params_echo = params.echo();
  pattern.samples.reserve(params.total_samples());

  int i = 0;
  for (int l = 1; l <= params.leaflet_count(); ++l) {
    Leaflet leaf = leaflet_geometry(l, params);
    for (int j = 0; j < params.leaflet_len; ++j) {
      ++i;
      auto [ky, kz] =
          polar_to_grid(leaf.radius[j], leaf.theta[j], pattern.grid);
      int frame = (i + params.n - 1) / params.n;
      pattern.samples.push_back(Sample{1, i, frame, ky, kz});
    }
  }
  return pattern;
}

}  // namespace kspace
