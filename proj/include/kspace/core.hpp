#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

// Shared geometry and arithmetic for the sampling generators: grids,
// golden-ratio constants, the variable-density stretch map, polar-to-grid
// conversion and the alternating (serpentine) acquisition-order rule.

namespace kspace {

enum class Method { vista, gro, cava, opra, pr4d };

const char* method_name(Method m);
Method method_from_name(const std::string& name);

// True for methods whose acquisition order is the generation sequence itself
// (cava, opra, pr4d); these support retrospective re-binning.
bool sequential_order(Method m);

// Phase-encode grid. 1-based index convention throughout: ky in [1, ny],
// kz in [1, nz], frame in [1, frames], encoding in [1, encodings].
// 2D methods use nz = 1.
struct GridSpec {
  int ny = 2;
  int nz = 1;
  int frames = 1;
  int encodings = 1;

  int center_ky() const { return ny / 2 + 1; }
  int center_kz() const { return nz / 2 + 1; }
  void validate() const;  // throws std::invalid_argument
};

// One readout line. `order` is the 1-based position in the acquisition
// sequence within its encoding.
struct Sample {
  std::int32_t encoding = 1;
  std::int32_t order = 1;
  std::int32_t frame = 1;
  std::int32_t ky = 1;
  std::int32_t kz = 1;
};

using ParamsEcho = std::vector<std::pair<std::string, std::string>>;

// Acquisition-ordered sample list plus the grid it lives on. Treated as
// immutable after construction; generators are the only producers.
struct SamplingPattern {
  GridSpec grid;
  Method method = Method::gro;
  std::vector<Sample> samples;  // sorted by (encoding, order)
  ParamsEcho params_echo;

  int samples_per_encoding() const {
    return static_cast<int>(samples.size()) / grid.encodings;
  }
};

// g = (1+sqrt(5))/2
double golden_ratio();

// g~ = 1/(g + tau - 1), in (0,1), strictly decreasing in tau.
double golden_fraction(int tau);

// Nonlinear small-grid -> full-grid map. The map anchors both endpoints
// exactly (1 -> 1, small_n -> full_n) around the symmetric center
// (small_n+1)/2, with kappa = ((N - N_s)/2) / ((N_s - 1)/2)^alpha.
struct StretchMap {
  int small_n = 2;   // N_s
  int full_n = 2;    // N
  double alpha = 1;
  double kappa = 0;

  // Continuous map value, monotone increasing; domain [1, small_n + 1).
  double apply_real(double k_s) const;
  // Bracketed grid index in [1, full_n]: nearest (half away from zero) when
  // full_n is odd, ceiling when even. Throws std::domain_error when k_s is
  // outside [1, small_n + 1).
  int apply(double k_s) const;
};

// N_s = round(N/s), half away from zero. Throws std::invalid_argument on
// bad parameters or when the small grid degenerates (N_s < 2).
StretchMap make_stretch_map(int full_n, double s, double alpha);

// x mod m into [0, m).
double mod_pos(double x, double m);

// Half-away-from-zero rounding to int.
int round_half_away(double x);

// Center-shifted polar to grid conversion with boundary clip. scale_y and
// scale_z compress the per-axis offsets before rounding (1 = none).
std::pair<int, int> polar_to_grid(double r, double theta, const GridSpec& grid,
                                  double scale_y = 1.0, double scale_z = 1.0);

// Serpentine acquisition order: frames concatenated in index order, ky
// ascending within odd frames and descending within even frames. Stable for
// duplicate ky. frame_samples[t] holds the (1-based) frame t+1.
std::vector<std::pair<int, int>> order_acquisition(
    const std::vector<std::vector<int>>& frame_samples);

// Relabels frames as ceil(order/n_prime) per encoding; samples and order are
// otherwise untouched. Requires a sequentially-ordered method and
// 1 <= n_prime <= samples-per-encoding.
SamplingPattern rebin_by_order(const SamplingPattern& pattern, int n_prime);

namespace detail {
// Deterministic, platform-independent u64 -> [0, 1) mapping.
double u64_to_unit(std::uint64_t x);
}  // namespace detail

}  // namespace kspace
