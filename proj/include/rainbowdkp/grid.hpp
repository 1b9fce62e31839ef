#ifndef RAINBOWDKP_GRID_HPP
#define RAINBOWDKP_GRID_HPP

#include "rainbowdkp/errors.hpp"
#include "rainbowdkp/spectrum.hpp"

namespace rdkp {

// Uniform radial grid r_i = i * r_max / N for i = 1..N.  r = 0 itself is
// excluded (coordinate singularity of the phi-component).
struct RadialGrid {
  double r_max;
  int points;

  RadialGrid(double r_max_, int points_) : r_max(r_max_), points(points_) {
    if (!(r_max > 0.0)) throw RangeError("radial grid: r_max must be > 0");
    if (points < 16) throw RangeError("radial grid: need at least 16 points");
  }

  double spacing() const { return r_max / points; }
  double node(int i) const { return i * spacing(); }  // i = 1..points
};

// Default extent 6 sqrt((2n + 1 + |j|) / (M w)): about six times the
// classical turning point, where the Gaussian density tail is < 1e-15.
double default_r_max(const ModelParams& p, const QuantumNumbers& q);

}  // namespace rdkp

#endif
