#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "kspace/core.hpp"

// PR4D: interleaved pseudo-radial sampling for multi-encoding flow imaging.
// Angle and radius advance by two different irrational fractions; the angle
// depends on the encoding, the radius does not. Fully deterministic.

namespace kspace {

struct Pr4dParams {
  int ny = 96;
  int nz = 60;
  int frames = 80;    // nominal F
  int n = 30;         // nominal lines per frame
  int encodings = 4;  // E
  double s = 3.0;
  double gamma = 0.0;             // aspect-ratio exponent
  double g_s = std::cbrt(35.0);   // angular advance; only its fractional part enters

  int samples_per_encoding() const { return n * frames; }
  // Maximum allowed radius, floor((max(ny, nz) - 1) / 2).
  int max_radius() const;
  void validate() const;
  ParamsEcho echo() const;
};

// Angle and emitted radius of sample i (1-based) in encoding e, given the
// position r_lin of the shared linear radius sequence. The emitted radius is
// the density-shaped (r_lin / R)^s * R.
std::pair<double, double> pr4d_polar(int i, int e, double r_lin,
                                     const Pr4dParams& params);

// Shared linear radius sequence: r(1) = 0, r(i+1) = <r(i) + R (2 - g)> mod R.
std::vector<double> pr4d_radius_sequence(int count, const Pr4dParams& params);

SamplingPattern generate_pr4d(const Pr4dParams& params);

}  // namespace kspace
