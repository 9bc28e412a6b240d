#pragma once

#include <cstdint>
#include <vector>

#include "kspace/core.hpp"

// VISTA: iterative Riesz-energy minimization on the ky-t grid under a fixed
// samples-per-frame constraint. Samples move only along ky (their frame
// assignment is fixed), with the density weights frozen per outer iteration
// and a backtracking line search that accepts only energy-decreasing moves.

namespace kspace {

struct VistaParams {
  int pe = 160;     // N
  int frames = 64;  // F
  int n = 12;       // lines per frame
  double s = 1.6;   // variable-density extent, in [1, 10]
  double sigma = 0;  // high-density width; <= 0 selects the default N/6
  double w = 0;      // time-axis scaling; <= 0 selects the default
  double beta = 1.4;
  int max_iters = 120;
  std::uint64_t seed = 0;  // accepted for interface uniformity; unused

  double effective_sigma() const;  // N/6 when left at its sentinel
  double effective_w() const;      // max[N/(10 n) + 0.25, 1] likewise
  void validate() const;
  ParamsEcho echo() const;
};

// Continuous sample set: positions[i] pairs with the fixed frames[i].
struct VistaConfig {
  std::vector<double> ky;   // real positions in [1, N]
  std::vector<int> frame;   // 1-based, immutable during descent
};

// Per-iteration record of the accepted descent path.
struct VistaTrace {
  std::vector<double> energies;                   // accepted, [0] = initial
  std::vector<std::vector<int>> frame_counts;     // per accepted iterate
};

// Gaussian density weight c(ky) = 1 - log10(s) exp(-(ky - N/2 - 1)^2 / 2 sigma^2).
double density_weight(double ky, const VistaParams& params);

// Weighted pairwise inverse-power energy with fixed per-sample weights:
//   sum_{i<j} weight_i weight_j / (dky^2 + w dt^2)^(beta/2).
// Throws std::domain_error when a pair sits closer than 1e-9 (singular
// configuration).
double weighted_energy(const std::vector<double>& ky,
                       const std::vector<int>& frame,
                       const std::vector<double>& weight, double w,
                       double beta);

// Analytic gradient of weighted_energy with respect to each ky.
std::vector<double> weighted_energy_gradient(const std::vector<double>& ky,
                                             const std::vector<int>& frame,
                                             const std::vector<double>& weight,
                                             double w, double beta);

// Energy of a sample set with weights c(ky_i) evaluated at the current
// positions (the full cost the descent tracks between iterations).
double riesz_energy(const std::vector<double>& ky, const std::vector<int>& frame,
                    const VistaParams& params);
double riesz_energy(const SamplingPattern& pattern, const VistaParams& params);

SamplingPattern generate_vista(const VistaParams& params,
                               VistaTrace* trace = nullptr);

}  // namespace kspace
