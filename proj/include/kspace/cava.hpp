#pragma once

#include <cstdint>
#include <vector>

#include "kspace/core.hpp"

// CAVA: golden-ratio advance from one sample to the next on the small grid,
// stretched onto the full grid. The acquisition order is the sequence
// itself, so frames are a pure index partition and can be re-binned
// retrospectively.

namespace kspace {

struct CavaParams {
  int pe = 120;       // N
  int frames = 48;    // nominal F
  int n = 6;          // nominal lines per frame
  int encodings = 2;  // E
  double s = 2.2;
  double alpha = 3.0;
  int tau = 1;
  std::uint64_t seed = 0;  // drives the random start position

  int samples_per_encoding() const { return n * frames; }
  void validate() const;
  ParamsEcho echo() const;
};

// Golden-ratio sequence on [0, small_n): p(1) = start,
// p(i+1) = <p(i) + golden_fraction(tau) * small_n> mod small_n.
std::vector<double> golden_sequence(double start, int count, int tau,
                                    int small_n);

// The M small-grid positions of one encoding; the start is the encoding-th
// uniform draw from a generator seeded with params.seed.
std::vector<double> cava_sequence(const CavaParams& params, int encoding);

SamplingPattern generate_cava(const CavaParams& params);

// Re-bins a sequentially-ordered 2D pattern into frames of n_prime samples.
SamplingPattern rebin_2d(const SamplingPattern& pattern, int n_prime);

}  // namespace kspace
