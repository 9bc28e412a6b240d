#pragma once

#include <vector>

#include "kspace/core.hpp"

// Golden Ratio Offset sampling: a uniform comb rotated by golden-ratio
// fractions from frame to frame on a small grid, then stretched onto the
// full grid for variable density. Fully deterministic.

namespace kspace {

struct GroParams {
  int pe = 160;       // N, size of PE grid
  int frames = 64;    // F
  int n = 12;         // lines per frame
  int encodings = 1;  // E
  double s = 2.2;
  double alpha = 3.0;
  int tau = 1;

  void validate() const;  // throws std::invalid_argument
  ParamsEcho echo() const;
};

// Frame-1 comb for one encoding: n real positions on [0, N_s), spacing
// N_s/n, encodings offset by (e-1)/E of one spacing.
std::vector<double> initial_comb(const GroParams& params, int encoding);

// Real-valued small-grid positions for every frame of one encoding;
// frame t+1 is frame t circularly advanced by golden_fraction(tau) * N_s.
std::vector<std::vector<double>> gro_small_grid_frames(const GroParams& params,
                                                       int encoding);

SamplingPattern generate_gro(const GroParams& params);

}  // namespace kspace
