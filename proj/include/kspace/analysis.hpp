#pragma once

#include <vector>

#include "kspace/core.hpp"

// Structural statistics and retrospective re-binning over generated
// patterns: per-frame counts, density histograms, acquisition-order jump
// sizes, grid coverage and collision counts.

namespace kspace {

// Integer count grid derived from a pattern; counts[row * cols + col].
struct Mask {
  int rows = 0;
  int cols = 0;
  std::vector<int> counts;

  int at(int row, int col) const { return counts[row * cols + col]; }
  int max_count() const;
  int nonzero_cells() const;
};

// ky-t count grid (rows = ky 1..N, cols = frame 1..F) for one encoding.
// 2D methods only.
Mask mask_kyt(const SamplingPattern& pattern, int encoding = 1,
              int order_lo = 0, int order_hi = 0);

// ky-kz count grid (rows = ky, cols = kz) for one encoding, aggregated over
// all frames, restricted to acquisition orders in [order_lo, order_hi]
// (0, 0 = everything).
Mask mask_kykz(const SamplingPattern& pattern, int encoding = 1,
               int order_lo = 0, int order_hi = 0);

struct JumpStats {
  double max = 0;
  double mean = 0;
  double stddev = 0;  // population
};

struct StatsReport {
  // counts[(e-1) * frames + (f-1)], encodings-major.
  std::vector<int> per_frame_counts;
  int frames = 0;
  int encodings = 0;
  // 2D: counts per ky (size ny). 3D: counts per unit-width ring around the
  // grid center (ring index floor(distance)).
  std::vector<int> density_histogram;
  // 3D only: grid cells per ring, for area-normalized density views.
  std::vector<int> ring_cells;
  std::vector<JumpStats> jump_stats;  // one per encoding, acquisition order
  double coverage_fraction = 0;
  int collision_count = 0;  // repeated (ky, kz, frame, encoding) tuples
};

StatsReport pattern_stats(const SamplingPattern& pattern);

// Re-bins a sequentially-ordered 3D pattern into frames of n_prime samples.
SamplingPattern rebin_3d(const SamplingPattern& pattern, int n_prime);

}  // namespace kspace
