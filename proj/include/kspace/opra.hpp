#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "kspace/core.hpp"

// OPRA: golden-angle-rotated L-shaped leaflets in the ky-kz plane. Each
// leaflet holds L samples split over two arms that meet near the k-space
// center; sample radii are shifted by an irrational fraction per leaflet and
// density-shaped toward the center. Fully deterministic.

namespace kspace {

struct OpraParams {
  int ny = 96;
  int nz = 60;
  int frames = 80;    // nominal F
  int n = 30;         // nominal lines per frame
  int leaflet_len = 10;  // L, even; must divide n * frames
  double s = 3.0;
  double gamma = 0.0;               // aspect-ratio exponent
  double g_s = std::sqrt(6.0);      // radial shift constant
  double phi = std::numbers::pi / 12.0;  // inter-leaflet angular jump

  int total_samples() const { return n * frames; }
  int leaflet_count() const { return total_samples() / leaflet_len; }
  void validate() const;
  ParamsEcho echo() const;
};

// Geometry of one leaflet: per-sample corrected angles and shaped radii,
// indexed j = 1..L (arm 1 first, descending toward the elbow; arm 2
// ascending away from it).
struct Leaflet {
  int index = 1;                // l
  std::vector<double> theta;    // corrected angles, exactly two distinct values
  std::vector<double> radius;   // shaped radii, grid units
};

// Quadrant-preserving arctangent correction: the angle whose tangent is
// scale * tan(theta), in the same half-plane as theta; result in [0, 2 pi).
double corrected_angle(double theta, double scale);

// Boundary extent of the grid-aligned ellipse at angle theta:
// ny nz / sqrt((ny sin)^2 + (nz cos)^2).
double boundary_radius(double theta, int ny, int nz);

Leaflet leaflet_geometry(int l, const OpraParams& params);

SamplingPattern generate_opra(const OpraParams& params);

}  // namespace kspace
