#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "kspace/analysis.hpp"
#include "kspace/gro.hpp"
#include "kspace/opra.hpp"

using namespace kspace;

namespace {

// Tiny hand-built 2D pattern on a ny x 1 grid, one sample per listed ky.
SamplingPattern line_pattern(int ny, const std::vector<int>& kys,
                             Method method = Method::cava) {
  SamplingPattern pat;
  pat.grid = GridSpec{ny, 1, 1, 1};
  pat.method = method;
  for (std::size_t i = 0; i < kys.size(); ++i)
    pat.samples.push_back(
        Sample{1, static_cast<std::int32_t>(i + 1), 1, kys[i], 1});
  return pat;
}

int sum(const std::vector<int>& v) {
  return std::accumulate(v.begin(), v.end(), 0);
}

}  // namespace

TEST_CASE("stats of a fully sampled single frame") {
  SamplingPattern pat = line_pattern(8, {1, 2, 3, 4, 5, 6, 7, 8});
  StatsReport rep = pattern_stats(pat);
  CHECK(rep.frames == 1);
  CHECK(rep.encodings == 1);
  REQUIRE(rep.per_frame_counts.size() == 1);
  CHECK(rep.per_frame_counts[0] == 8);
  CHECK(rep.coverage_fraction == 1.0);
  CHECK(rep.collision_count == 0);
  REQUIRE(rep.density_histogram.size() == 8);
  for (int c : rep.density_histogram) CHECK(c == 1);
  CHECK(rep.ring_cells.empty());  // 2D pattern has no ring layout
  REQUIRE(rep.jump_stats.size() == 1);
  CHECK(rep.jump_stats[0].max == 1.0);
  CHECK(rep.jump_stats[0].mean == 1.0);
  CHECK(rep.jump_stats[0].stddev == 0.0);
}

TEST_CASE("collision counting") {
  SamplingPattern pat = line_pattern(8, {3, 3});
  StatsReport rep = pattern_stats(pat);
  CHECK(rep.collision_count == 1);
  CHECK(rep.coverage_fraction == doctest::Approx(1.0 / 8.0));
  CHECK(rep.density_histogram[2] == 2);

  // same cell in different frames is not a collision
  pat.samples[1].frame = 2;
  pat.grid.frames = 2;
  CHECK(pattern_stats(pat).collision_count == 0);

  SamplingPattern empty;
  empty.grid = GridSpec{8, 1, 1, 1};
  CHECK_THROWS_AS(pattern_stats(empty), std::domain_error);
}

TEST_CASE("jump stats follow acquisition order, not storage order") {
  SamplingPattern pat = line_pattern(10, {1, 2, 3, 10});
  StatsReport a = pattern_stats(pat);
  CHECK(a.jump_stats[0].max == 7.0);
  CHECK(a.jump_stats[0].mean == doctest::Approx(3.0));
  CHECK(a.jump_stats[0].stddev == doctest::Approx(std::sqrt(8.0)));

  // swapping two order labels changes the traversal but nothing else
  std::swap(pat.samples[1].order, pat.samples[2].order);
  StatsReport b = pattern_stats(pat);
  CHECK(b.jump_stats[0].max == 8.0);
  CHECK(b.jump_stats[0].mean == doctest::Approx(11.0 / 3.0));
  CHECK(b.per_frame_counts == a.per_frame_counts);
  CHECK(b.density_histogram == a.density_histogram);
  CHECK(b.coverage_fraction == a.coverage_fraction);
  CHECK(b.collision_count == a.collision_count);
}

TEST_CASE("gro stats at defaults") {
  SamplingPattern pat = generate_gro(GroParams{});
  StatsReport rep = pattern_stats(pat);
  CHECK(rep.frames == 64);
  CHECK(rep.encodings == 1);
  REQUIRE(rep.per_frame_counts.size() == 64);
  for (int c : rep.per_frame_counts) CHECK(c == 12);
  CHECK(sum(rep.density_histogram) == 768);
  CHECK(rep.density_histogram.size() == 160);
  CHECK(rep.coverage_fraction > 0.5);
  CHECK(rep.coverage_fraction <= 1.0);
  REQUIRE(rep.jump_stats.size() == 1);
  CHECK(rep.jump_stats[0].max > 0.0);
  CHECK(rep.jump_stats[0].mean > 0.0);
}

TEST_CASE("opra stats and ring layout") {
  SamplingPattern pat = generate_opra(OpraParams{});
  StatsReport rep = pattern_stats(pat);
  CHECK(rep.frames == 80);
  CHECK(sum(rep.per_frame_counts) == 2400);
  CHECK(sum(rep.density_histogram) == 2400);
  CHECK(sum(rep.ring_cells) == 96 * 60);  // every grid cell is in some ring
  REQUIRE(rep.ring_cells.size() == rep.density_histogram.size());
  // center cell is its own ring
  CHECK(rep.ring_cells[0] >= 1);
  CHECK(rep.density_histogram[0] >= 1);
}

TEST_CASE("kyt mask") {
  SamplingPattern pat = generate_gro(GroParams{});
  Mask m = mask_kyt(pat);
  CHECK(m.rows == 160);
  CHECK(m.cols == 64);
  CHECK(sum(m.counts) == 768);
  for (int f = 0; f < 64; ++f) {
    int col = 0;
    for (int ky = 0; ky < 160; ++ky) col += m.at(ky, f);
    CHECK(col == 12);
  }
  CHECK(m.max_count() >= 1);
  CHECK(m.nonzero_cells() <= 768);

  Mask first_frame = mask_kyt(pat, 1, 1, 12);
  CHECK(sum(first_frame.counts) == 12);

  CHECK_THROWS_AS(mask_kykz(pat), std::domain_error);   // 2D pattern
  CHECK_THROWS_AS(mask_kyt(pat, 2), std::domain_error);  // no encoding 2
}

TEST_CASE("kykz mask") {
  SamplingPattern pat = generate_opra(OpraParams{});
  Mask m = mask_kykz(pat);
  CHECK(m.rows == 96);
  CHECK(m.cols == 60);
  CHECK(sum(m.counts) == 2400);
  CHECK(m.nonzero_cells() == static_cast<int>(pattern_stats(pat).coverage_fraction * 96 * 60 + 0.5));

  Mask windowed = mask_kykz(pat, 1, 1, 30);
  CHECK(sum(windowed.counts) == 30);

  CHECK_THROWS_AS(mask_kyt(pat), std::domain_error);  // 3D pattern
}

TEST_CASE("rebin relabels frames only") {
  SamplingPattern pat = generate_opra(OpraParams{});
  REQUIRE(pat.samples.size() == 2400);

  SamplingPattern same = rebin_3d(pat, 30);
  CHECK(same.grid.frames == 80);
  for (std::size_t i = 0; i < pat.samples.size(); ++i)
    CHECK(same.samples[i].frame == pat.samples[i].frame);

  SamplingPattern fine = rebin_3d(pat, 10);
  CHECK(fine.grid.frames == 240);
  SamplingPattern single = rebin_3d(pat, 2400);
  CHECK(single.grid.frames == 1);
  for (std::size_t i = 0; i < pat.samples.size(); ++i) {
    CHECK(fine.samples[i].ky == pat.samples[i].ky);
    CHECK(fine.samples[i].kz == pat.samples[i].kz);
    CHECK(fine.samples[i].order == pat.samples[i].order);
    CHECK(fine.samples[i].frame == (pat.samples[i].order + 9) / 10);
    CHECK(single.samples[i].frame == 1);
  }

  CHECK_THROWS_AS(rebin_3d(pat, 0), std::domain_error);
  CHECK_THROWS_AS(rebin_3d(pat, 2401), std::domain_error);
  // gro frames are structural, not a relabeling of a serial scan
  CHECK_THROWS_AS(rebin_by_order(generate_gro(GroParams{}), 12), std::domain_error);
}
