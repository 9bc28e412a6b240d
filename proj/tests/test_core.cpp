#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "kspace/core.hpp"

using namespace kspace;

TEST_CASE("golden ratio and fractions") {
  CHECK(golden_ratio() == doctest::Approx((1.0 + std::sqrt(5.0)) / 2.0).epsilon(1e-15));
  // closed forms: 1/g = (sqrt(5)-1)/2 and 1/(g+1) = 2-g
  CHECK(golden_fraction(1) == doctest::Approx((std::sqrt(5.0) - 1.0) / 2.0).epsilon(1e-15));
  CHECK(golden_fraction(1) == doctest::Approx(0.6180339887498948).epsilon(1e-12));
  CHECK(golden_fraction(2) == doctest::Approx(2.0 - golden_ratio()).epsilon(1e-15));
  CHECK(golden_fraction(2) == doctest::Approx(0.3819660112501051).epsilon(1e-12));
  CHECK_THROWS_AS(golden_fraction(0), std::invalid_argument);
  CHECK_THROWS_AS(golden_fraction(-3), std::invalid_argument);
  double prev = 1.0;
  for (int tau = 1; tau <= 60; ++tau) {
    double gf = golden_fraction(tau);
    CHECK(gf > 0.0);
    CHECK(gf < prev);
    prev = gf;
  }
}

TEST_CASE("grid spec centers and validation") {
  GridSpec g2{160, 1, 64, 1};
  CHECK(g2.center_ky() == 81);
  CHECK(g2.center_kz() == 1);
  GridSpec g3{96, 60, 80, 4};
  CHECK(g3.center_ky() == 49);
  CHECK(g3.center_kz() == 31);
  CHECK_NOTHROW(g3.validate());
  CHECK_THROWS_AS((GridSpec{1, 1, 1, 1}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((GridSpec{4, 0, 1, 1}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((GridSpec{4, 1, 0, 1}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((GridSpec{4, 1, 1, 0}.validate()), std::invalid_argument);
}

TEST_CASE("stretch map construction") {
  StretchMap m = make_stretch_map(160, 2.2, 3.0);
  CHECK(m.small_n == 73);
  CHECK(m.kappa == doctest::Approx(43.5 / 46656.0).epsilon(1e-15));
  CHECK(m.kappa == doctest::Approx(9.3235596707818930e-4).epsilon(1e-12));

  StretchMap m120 = make_stretch_map(120, 2.2, 3.0);
  CHECK(m120.small_n == 55);  // round(54.545...) = 55
  CHECK(m120.kappa == doctest::Approx(1.6511710613219530e-3).epsilon(1e-12));

  StretchMap ident = make_stretch_map(160, 1.0, 3.0);
  CHECK(ident.small_n == 160);
  CHECK(ident.kappa == 0.0);
  for (int k = 1; k <= 160; k += 13) CHECK(ident.apply(k) == k);

  CHECK_THROWS_AS(make_stretch_map(3, 1.0, 3.0), std::invalid_argument);
  CHECK_THROWS_AS(make_stretch_map(160, 0.5, 3.0), std::invalid_argument);
  CHECK_THROWS_AS(make_stretch_map(160, 2.2, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(make_stretch_map(4, 3.0, 1.0), std::invalid_argument);  // N_s = 1
}

TEST_CASE("stretch map endpoints, center, and domain") {
  StretchMap m = make_stretch_map(160, 2.2, 3.0);
  CHECK(m.apply(1.0) == 1);
  CHECK(m.apply(73.0) == 160);
  CHECK(m.apply_real(37.0) == doctest::Approx(80.5).epsilon(1e-15));
  CHECK(m.apply(37.0) == 81);  // ceil for even N

  // real-valued domain is the half-open [1, N_s + 1); the overhang clamps
  CHECK_NOTHROW(m.apply(73.9));
  CHECK(m.apply(73.9) == 160);
  CHECK_THROWS_AS(m.apply(0.999), std::domain_error);
  CHECK_THROWS_AS(m.apply(74.0), std::domain_error);
  CHECK_THROWS_AS(m.apply(-5.0), std::domain_error);
}

TEST_CASE("stretch map bracket rule even vs odd") {
  // even N uses ceiling, odd N uses nearest (half away from zero)
  StretchMap even = make_stretch_map(160, 2.2, 3.0);
  StretchMap odd = make_stretch_map(161, 2.2, 3.0);
  CHECK(odd.small_n == 73);  // round(73.18) = 73
  for (double ks = 1.0; ks < 73.0; ks += 0.37) {
    double re = even.apply_real(ks);
    double ro = odd.apply_real(ks);
    CHECK(even.apply(ks) == std::clamp(static_cast<int>(std::ceil(re)), 1, 160));
    int nearest = static_cast<int>(std::round(ro));
    CHECK(odd.apply(ks) == std::clamp(nearest, 1, 161));
  }
}

TEST_CASE("stretch map endpoint anchoring and monotonicity, exhaustive") {
  const double svals[] = {1.0, 1.5, 2.2, 3.0};
  const double avals[] = {1.0, 2.0, 3.0};
  for (int n = 4; n <= 512; ++n) {
    for (double s : svals) {
      for (double a : avals) {
        StretchMap m;
        try {
          m = make_stretch_map(n, s, a);
        } catch (const std::invalid_argument&) {
          continue;  // degenerate small grid for this (n, s)
        }
        REQUIRE(m.apply(1.0) == 1);
        REQUIRE(m.apply(static_cast<double>(m.small_n)) == n);
        int prev = 1;
        for (int k = 1; k <= m.small_n; ++k) {
          int v = m.apply(static_cast<double>(k));
          REQUIRE(v >= prev);
          REQUIRE(v >= 1);
          REQUIRE(v <= n);
          prev = v;
        }
      }
    }
  }
}

TEST_CASE("polar to grid centering and clipping") {
  GridSpec grid{96, 60, 80, 1};
  CHECK(polar_to_grid(0.0, 1.234, grid) == std::pair<int, int>{49, 31});
  CHECK(polar_to_grid(10.0, 0.0, grid) == std::pair<int, int>{59, 31});
  CHECK(polar_to_grid(48.0, 0.0, grid) == std::pair<int, int>{96, 31});  // clip from 97
  CHECK_THROWS_AS(polar_to_grid(-1.0, 0.0, grid), std::domain_error);

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> radius(0.0, 4.0 * 96.0);
  std::uniform_real_distribution<double> angle(-10.0, 10.0);
  for (int i = 0; i < 20000; ++i) {
    auto [ky, kz] = polar_to_grid(radius(rng), angle(rng), grid);
    REQUIRE(ky >= 1);
    REQUIRE(ky <= 96);
    REQUIRE(kz >= 1);
    REQUIRE(kz <= 60);
  }
}

TEST_CASE("acquisition ordering alternates per frame") {
  std::vector<std::vector<int>> frames = {{5, 2, 9}, {4, 7}};
  auto seq = order_acquisition(frames);
  REQUIRE(seq.size() == 5);
  CHECK(seq[0] == std::pair<int, int>{1, 2});
  CHECK(seq[1] == std::pair<int, int>{1, 5});
  CHECK(seq[2] == std::pair<int, int>{1, 9});
  CHECK(seq[3] == std::pair<int, int>{2, 7});
  CHECK(seq[4] == std::pair<int, int>{2, 4});

  auto single = order_acquisition({{3, 1}});
  CHECK(single[0].second == 1);
  CHECK(single[1].second == 3);

  auto repeats = order_acquisition({{1}, {1}, {1}});
  REQUIRE(repeats.size() == 3);
  for (int t = 0; t < 3; ++t) {
    CHECK(repeats[t].first == t + 1);
    CHECK(repeats[t].second == 1);
  }

  // property: odd frames non-decreasing, even frames non-increasing
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> ky(1, 40);
  std::vector<std::vector<int>> random_frames(9);
  for (auto& fr : random_frames)
    for (int i = 0; i < 12; ++i) fr.push_back(ky(rng));
  auto ordered = order_acquisition(random_frames);
  for (std::size_t i = 1; i < ordered.size(); ++i) {
    if (ordered[i].first != ordered[i - 1].first) continue;
    if (ordered[i].first % 2 == 1)
      CHECK(ordered[i].second >= ordered[i - 1].second);
    else
      CHECK(ordered[i].second <= ordered[i - 1].second);
  }
}

TEST_CASE("modular helpers") {
  CHECK(mod_pos(7.5, 5.0) == doctest::Approx(2.5));
  CHECK(mod_pos(-0.5, 5.0) == doctest::Approx(4.5));
  CHECK(mod_pos(10.0, 5.0) == doctest::Approx(0.0));
  CHECK(mod_pos(4.9999, 5.0) < 5.0);
  CHECK(round_half_away(0.5) == 1);
  CHECK(round_half_away(-0.5) == -1);
  CHECK(round_half_away(1.5) == 2);
  CHECK(round_half_away(2.5) == 3);
  CHECK(round_half_away(-2.5) == -3);
  CHECK(round_half_away(2.4) == 2);
}

TEST_CASE("uniform unit mapping") {
  CHECK(detail::u64_to_unit(0) == 0.0);
  CHECK(detail::u64_to_unit(~0ull) < 1.0);
  CHECK(detail::u64_to_unit(~0ull) > 0.9999999999);
  // same shift-and-scale on any platform
  CHECK(detail::u64_to_unit(1ull << 11) == doctest::Approx(0x1.0p-53).epsilon(1e-15));
}

TEST_CASE("method names round-trip") {
  for (Method m : {Method::vista, Method::gro, Method::cava, Method::opra, Method::pr4d})
    CHECK(method_from_name(method_name(m)) == m);
  CHECK_THROWS_AS(method_from_name("nope"), std::invalid_argument);
  CHECK(sequential_order(Method::cava));
  CHECK(sequential_order(Method::opra));
  CHECK(sequential_order(Method::pr4d));
  CHECK_FALSE(sequential_order(Method::vista));
  CHECK_FALSE(sequential_order(Method::gro));
}
