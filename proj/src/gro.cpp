#include "kspace/gro.hpp"

#include <cstdio>
#include <stdexcept>
#include <string>

namespace kspace {

namespace {

std::string fmt_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

}  // namespace

void GroParams::validate() const {
  if (pe < 4) throw std::invalid_argument("gro: pe must be >= 4");
  if (frames < 1) throw std::invalid_argument("gro: fr must be >= 1");
  if (n < 1) throw std::invalid_argument("gro: n must be >= 1");
  if (encodings < 1) throw std::invalid_argument("gro: e must be >= 1");
  if (!(s >= 1.0)) throw std::invalid_argument("gro: s must be >= 1");
  if (!(alpha > 0.0)) throw std::invalid_argument("gro: alph must be > 0");
  if (tau < 1) throw std::invalid_argument("gro: tau must be >= 1");
  int small_n = make_stretch_map(pe, s, alpha).small_n;
  if (n > small_n)
    throw std::invalid_argument("gro: n exceeds the small grid (round(pe/s) = " +
                                std::to_string(small_n) + ")");
}

ParamsEcho GroParams::echo() const {
  return {{"pe", std::to_string(pe)},     {"fr", std::to_string(frames)},
          {"n", std::to_string(n)},       {"e", std::to_string(encodings)},
          {"s", fmt_double(s)},           {"alph", fmt_double(alpha)},
          {"tau", std::to_string(tau)}};
}

std::vector<double> initial_comb(const GroParams& params, int encoding) {
  params.validate();
  if (encoding < 1 || encoding > params.encodings)
    throw std::invalid_argument("gro: encoding out of range");
  int small_n = make_stretch_map(params.pe, params.s, params.alpha).small_n;
  double spacing = static_cast<double>(small_n) / params.n;
  double offset = (encoding - 1) * spacing / params.encodings;
  std::vector<double> comb(params.n);
  for (int k = 0; k < params.n; ++k) comb[k] = k * spacing + offset;
  return comb;
}

std::vector<std::vector<double>> gro_small_grid_frames(const GroParams& params,
                                                       int encoding) {
  std::vector<double> positions = initial_comb(params, encoding);
  int small_n = make_stretch_map(params.pe, params.s, params.alpha).small_n;
  double shift = golden_fraction(params.tau) * small_n;

  std::vector<std::vector<double>> frames;
  frames.reserve(params.frames);
  frames.push_back(positions);
  for (int t = 1; t < params.frames; ++t) {
    // Rotations accumulate on the real positions; rounding happens only in
    // the stretch map's final bracket.
    for (double& p : positions) p = mod_pos(p + shift, small_n);
    frames.push_back(positions);
  }
  return frames;
}

SamplingPattern generate_gro(const GroParams& params) {
  params.validate();
  StretchMap map = make_stretch_map(params.pe, params.s, params.alpha);

  SamplingPattern pattern;
  pattern.grid = GridSpec{params.pe, 1, params.frames, params.encodings};
  pattern.method = Method::gro;
  pattern.params_echo = params.echo();
  pattern.samples.reserve(static_cast<std::size_t>(params.n) * params.frames *
                          params.encodings);

  for (int e = 1; e <= params.encodings; ++e) {
    std::vector<std::vector<double>> small = gro_small_grid_frames(params, e);
    std::vector<std::vector<int>> frame_ky(small.size());
    for (std::size_t t = 0; t < small.size(); ++t) {
      frame_ky[t].reserve(small[t].size());
      for (double p : small[t]) frame_ky[t].push_back(map.apply(p + 1.0));
    }
    int order = 0;
    for (auto [frame, ky] : order_acquisition(frame_ky))
      pattern.samples.push_back(Sample{e, ++order, frame, ky, 1});
  }
  return pattern;
}

}  // namespace kspace
