#include "kspace/cava.hpp"

#include <cstdio>
#include <random>
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

void CavaParams::validate() const {
  if (pe < 4) throw std::invalid_argument("cava: pe must be >= 4");
  if (frames < 1) throw std::invalid_argument("cava: fr must be >= 1");
  if (n < 1) throw std::invalid_argument("cava: n must be >= 1");
  if (encodings < 1) throw std::invalid_argument("cava: e must be >= 1");
  if (!(s >= 1.0)) throw std::invalid_argument("cava: s must be >= 1");
  if (!(alpha > 0.0)) throw std::invalid_argument("cava: alph must be > 0");
  if (tau < 1) throw std::invalid_argument("cava: tau must be >= 1");
  make_stretch_map(pe, s, alpha);
}

ParamsEcho CavaParams::echo() const {
  return {{"pe", std::to_string(pe)},   {"fr", std::to_string(frames)},
          {"n", std::to_string(n)},     {"e", std::to_string(encodings)},
          {"s", fmt_double(s)},         {"alph", fmt_double(alpha)},
          {"tau", std::to_string(tau)}, {"seed", std::to_string(seed)}};
}

std::vector<double> golden_sequence(double start, int count, int tau,
                                    int small_n) {
  if (count < 1) throw std::invalid_argument("golden_sequence: count must be >= 1");
  double advance = golden_fraction(tau) * small_n;
  std::vector<double> seq(count);
  seq[0] = mod_pos(start, small_n);
  for (int i = 1; i < count; ++i) seq[i] = mod_pos(seq[i - 1] + advance, small_n);
  return seq;
}

std::vector<double> cava_sequence(const CavaParams& params, int encoding) {
  params.validate();
  if (encoding < 1 || encoding > params.encodings)
    throw std::invalid_argument("cava: encoding out of range");
  int small_n = make_stretch_map(params.pe, params.s, params.alpha).small_n;
  std::mt19937_64 rng(params.seed);
  double start = 0;
  for (int e = 1; e <= encoding; ++e)
    start = detail::u64_to_unit(rng()) * small_n;
  return golden_sequence(start, params.samples_per_encoding(), params.tau,
                         small_n);
}

SamplingPattern generate_cava(const CavaParams& params) {
  params.validate();
  StretchMap map = make_stretch_map(params.pe, params.s, params.alpha);

  SamplingPattern pattern;
  pattern.grid = GridSpec{params.pe, 1, params.frames, params.encodings};
  pattern.method = Method::cava;
  pattern.params_echo = params.echo();
  pattern.samples.reserve(static_cast<std::size_t>(params.samples_per_encoding()) *
                          params.encodings);

  for (int e = 1; e <= params.encodings; ++e) {
    std::vector<double> seq = cava_sequence(params, e);
    for (int i = 1; i <= static_cast<int>(seq.size()); ++i) {
      int ky = map.apply(seq[i - 1] + 1.0);
      int frame = (i + params.n - 1) / params.n;
      pattern.samples.push_back(Sample{e, i, frame, ky, 1});
    }
  }
  return pattern;
}

SamplingPattern rebin_2d(const SamplingPattern& pattern, int n_prime) {
  return rebin_by_order(pattern, n_prime);
}

}  // namespace kspace
