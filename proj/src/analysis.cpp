#include "kspace/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <tuple>

namespace kspace {

int Mask::max_count() const {
  int best = 0;
  for (int c : counts) best = std::max(best, c);
  return best;
}

int Mask::nonzero_cells() const {
  int n = 0;
  for (int c : counts)
    if (c > 0) ++n;
  return n;
}

Mask mask_kyt(const SamplingPattern& pattern, int encoding, int order_lo,
              int order_hi) {
  if (pattern.grid.nz != 1)
    throw std::domain_error("mask_kyt: pattern is not 2D");
  if (encoding < 1 || encoding > pattern.grid.encodings)
    throw std::domain_error("mask_kyt: encoding out of range");
  Mask mask;
  mask.rows = pattern.grid.ny;
  mask.cols = pattern.grid.frames;
  mask.counts.assign(static_cast<std::size_t>(mask.rows) * mask.cols, 0);
  for (const Sample& smp : pattern.samples) {
    if (smp.encoding != encoding) continue;
    if (order_lo > 0 && smp.order < order_lo) continue;
    if (order_hi > 0 && smp.order > order_hi) continue;
    ++mask.counts[(smp.ky - 1) * mask.cols + (smp.frame - 1)];
  }
  return mask;
}

Mask mask_kykz(const SamplingPattern& pattern, int encoding, int order_lo,
               int order_hi) {
  if (pattern.grid.nz < 2)
    throw std::domain_error("mask_kykz: pattern is not 3D");
  if (encoding < 1 || encoding > pattern.grid.encodings)
    throw std::domain_error("mask_kykz: encoding out of range");
  Mask mask;
  mask.rows = pattern.grid.ny;
  mask.cols = pattern.grid.nz;
  mask.counts.assign(static_cast<std::size_t>(mask.rows) * mask.cols, 0);
  for (const Sample& smp : pattern.samples) {
    if (smp.encoding != encoding) continue;
    if (order_lo > 0 && smp.order < order_lo) continue;
    if (order_hi > 0 && smp.order > order_hi) continue;
    ++mask.counts[(smp.ky - 1) * mask.cols + (smp.kz - 1)];
  }
  return mask;
}

namespace {

int ring_index(int ky, int kz, const GridSpec& grid) {
  double dy = ky - grid.center_ky();
  double dz = kz - grid.center_kz();
  return static_cast<int>(std::floor(std::sqrt(dy * dy + dz * dz)));
}

}  // namespace

StatsReport pattern_stats(const SamplingPattern& pattern) {
  if (pattern.samples.empty())
    throw std::domain_error("pattern_stats: empty pattern");
  const GridSpec& grid = pattern.grid;
  const bool is_3d = grid.nz > 1;

  int max_frame = grid.frames;
  for (const Sample& smp : pattern.samples)
    max_frame = std::max(max_frame, static_cast<int>(smp.frame));

  StatsReport report;
  report.frames = max_frame;
  report.encodings = grid.encodings;
  report.per_frame_counts.assign(
      static_cast<std::size_t>(grid.encodings) * max_frame, 0);

  if (is_3d) {
    int max_ring = 0;
    for (int ky = 1; ky <= grid.ny; ++ky)
      for (int kz = 1; kz <= grid.nz; ++kz)
        max_ring = std::max(max_ring, ring_index(ky, kz, grid));
    report.density_histogram.assign(max_ring + 1, 0);
    report.ring_cells.assign(max_ring + 1, 0);
    for (int ky = 1; ky <= grid.ny; ++ky)
      for (int kz = 1; kz <= grid.nz; ++kz)
        ++report.ring_cells[ring_index(ky, kz, grid)];
  } else {
    report.density_histogram.assign(grid.ny, 0);
  }

  std::vector<char> covered(static_cast<std::size_t>(grid.ny) * grid.nz, 0);
  std::map<std::tuple<int, int, int, int>, int> multiplicity;

  for (const Sample& smp : pattern.samples) {
    ++report.per_frame_counts[(smp.encoding - 1) * max_frame + (smp.frame - 1)];
    if (is_3d)
      ++report.density_histogram[ring_index(smp.ky, smp.kz, grid)];
    else
      ++report.density_histogram[smp.ky - 1];
    covered[(smp.ky - 1) * grid.nz + (smp.kz - 1)] = 1;
    ++multiplicity[{smp.encoding, smp.frame, smp.ky, smp.kz}];
  }

  int covered_cells = 0;
  for (char c : covered) covered_cells += c;
  report.coverage_fraction =
      static_cast<double>(covered_cells) / (static_cast<double>(grid.ny) * grid.nz);

  for (const auto& [key, count] : multiplicity)
    report.collision_count += count - 1;

  // Jump sizes between consecutive acquisitions within each encoding.
  report.jump_stats.resize(grid.encodings);
  for (int e = 1; e <= grid.encodings; ++e) {
    std::vector<const Sample*> ordered;
    for (const Sample& smp : pattern.samples)
      if (smp.encoding == e) ordered.push_back(&smp);
    std::sort(ordered.begin(), ordered.end(),
              [](const Sample* a, const Sample* b) { return a->order < b->order; });
    JumpStats& js = report.jump_stats[e - 1];
    if (ordered.size() < 2) continue;
    double sum = 0, sum_sq = 0;
    for (std::size_t i = 1; i < ordered.size(); ++i) {
      double dy = ordered[i]->ky - ordered[i - 1]->ky;
      double dz = ordered[i]->kz - ordered[i - 1]->kz;
      double jump = std::sqrt(dy * dy + dz * dz);
      js.max = std::max(js.max, jump);
      sum += jump;
      sum_sq += jump * jump;
    }
    double count = static_cast<double>(ordered.size() - 1);
    js.mean = sum / count;
    js.stddev = std::sqrt(std::max(0.0, sum_sq / count - js.mean * js.mean));
  }
  return report;
}

SamplingPattern rebin_3d(const SamplingPattern& pattern, int n_prime) {
  return rebin_by_order(pattern, n_prime);
}

}  // namespace kspace
