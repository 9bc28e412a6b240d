#include "kspace/core.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace kspace {

const char* method_name(Method m) {
  switch (m) {
    case Method::vista: return "vista";
    case Method::gro: return "gro";
    case Method::cava: return "cava";
    case Method::opra: return "opra";
    case Method::pr4d: return "pr4d";
  }
  return "?";
}

Method method_from_name(const std::string& name) {
  if (name == "vista") return Method::vista;
  if (name == "gro") return Method::gro;
  if (name == "cava") return Method::cava;
  if (name == "opra") return Method::opra;
  if (name == "pr4d") return Method::pr4d;
  throw std::invalid_argument("unknown method: " + name);
}

bool sequential_order(Method m) {
  return m == Method::cava || m == Method::opra || m == Method::pr4d;
}

void GridSpec::validate() const {
  if (ny < 2) throw std::invalid_argument("grid: ny must be >= 2");
  if (nz < 1) throw std::invalid_argument("grid: nz must be >= 1");
  if (frames < 1) throw std::invalid_argument("grid: frames must be >= 1");
  if (encodings < 1) throw std::invalid_argument("grid: encodings must be >= 1");
}

double golden_ratio() { return (1.0 + std::sqrt(5.0)) / 2.0; }

double golden_fraction(int tau) {
  if (tau < 1) throw std::invalid_argument("golden_fraction: tau must be >= 1");
  return 1.0 / (golden_ratio() + static_cast<double>(tau) - 1.0);
}

double mod_pos(double x, double m) {
  double r = x - m * std::floor(x / m);
  if (r < 0) r += m;
  if (r >= m) r -= m;
  return r;
}

int round_half_away(double x) { return static_cast<int>(std::round(x)); }

double StretchMap::apply_real(double k_s) const {
  double center = (small_n + 1) / 2.0;
  double d = center - k_s;
  double sgn = (d > 0) - (d < 0);
  double offset = (full_n - small_n) / 2.0;
  // kappa |d|^alpha evaluated as offset * |d|^alpha / ((N_s-1)/2)^alpha so
  // that both endpoint anchors (1 -> 1, N_s -> N) come out bitwise exact;
  // a one-ulp excess at k_s = 1 would otherwise survive the ceil bracket.
  double shaped =
      offset * std::pow(std::abs(d), alpha) / std::pow((small_n - 1) / 2.0, alpha);
  return k_s - sgn * shaped + offset;
}

int StretchMap::apply(double k_s) const {
  // Real-valued small-grid coordinates live on [1, small_n + 1): the
  // half-open overhang past the last grid point arises from circular
  // arithmetic and clamps to the far edge.
  if (!(k_s >= 1.0) || !(k_s < small_n + 1.0))
    throw std::domain_error("stretch_apply: k_s outside [1, N_s + 1)");
  double raw = apply_real(k_s);
  int k = (full_n % 2 == 0) ? static_cast<int>(std::ceil(raw))
                            : round_half_away(raw);
  return std::clamp(k, 1, full_n);
}

StretchMap make_stretch_map(int full_n, double s, double alpha) {
  if (full_n < 4) throw std::invalid_argument("stretch map: N must be >= 4");
  if (!(s >= 1.0)) throw std::invalid_argument("stretch map: s must be >= 1");
  if (!(alpha > 0.0)) throw std::invalid_argument("stretch map: alpha must be > 0");
  int small_n = round_half_away(full_n / s);
  if (small_n < 2)
    throw std::invalid_argument("stretch map: round(N/s) leaves fewer than 2 points");
  StretchMap map;
  map.small_n = small_n;
  map.full_n = full_n;
  map.alpha = alpha;
  map.kappa = (small_n == full_n)
                  ? 0.0
                  : ((full_n - small_n) / 2.0) /
                        std::pow((small_n - 1) / 2.0, alpha);
  return map;
}

std::pair<int, int> polar_to_grid(double r, double theta, const GridSpec& grid,
                                  double scale_y, double scale_z) {
  if (r < 0) throw std::domain_error("polar_to_grid: r must be >= 0");
  int ky = grid.center_ky() + round_half_away(r * std::cos(theta) * scale_y);
  int kz = grid.center_kz() + round_half_away(r * std::sin(theta) * scale_z);
  return {std::clamp(ky, 1, grid.ny), std::clamp(kz, 1, grid.nz)};
}

std::vector<std::pair<int, int>> order_acquisition(
    const std::vector<std::vector<int>>& frame_samples) {
  std::vector<std::pair<int, int>> out;
  for (std::size_t t = 0; t < frame_samples.size(); ++t) {
    std::vector<int> ky = frame_samples[t];
    bool odd_frame = (t + 1) % 2 == 1;
    if (odd_frame)
      std::stable_sort(ky.begin(), ky.end());
    else
      std::stable_sort(ky.begin(), ky.end(), std::greater<int>());
    for (int k : ky) out.emplace_back(static_cast<int>(t) + 1, k);
  }
  return out;
}

SamplingPattern rebin_by_order(const SamplingPattern& pattern, int n_prime) {
  if (!sequential_order(pattern.method))
    throw std::domain_error(std::string("rebin: ") + method_name(pattern.method) +
                            " has a fixed frame structure");
  int per_enc = pattern.samples_per_encoding();
  if (n_prime < 1 || n_prime > per_enc)
    throw std::domain_error("rebin: n_prime must be in [1, samples per encoding]");
  SamplingPattern out = pattern;
  out.grid.frames = (per_enc + n_prime - 1) / n_prime;
  for (Sample& smp : out.samples)
    smp.frame = (smp.order + n_prime - 1) / n_prime;
  return out;
}

namespace detail {
double u64_to_unit(std::uint64_t x) {
  return static_cast<double>(x >> 11) * 0x1.0p-53;
}
}  // namespace detail

}  // namespace kspace
