#ifndef RAINBOWDKP_WAVEFUNCTION_HPP
#define RAINBOWDKP_WAVEFUNCTION_HPP

#include <array>
#include <vector>

#include "rainbowdkp/grid.hpp"
#include "rainbowdkp/spectrum.hpp"

namespace rdkp {

// First spinor component of the bound state (n, m):
//   phi1(r) = rho^{|j|/2} e^{-rho/2} 1F1(-n; 1 + |j|; rho),  rho = M w r^2.
// The hypergeometric parameter is the exact integer -n of the level, so the
// profile is polynomial; an energy E solves the radial equation with this
// profile precisely when its kappa^2 equals kappa_sq_target.
double phi1(const ModelParams& p, const QuantumNumbers& q, double r);
double phi1_prime(const ModelParams& p, const QuantumNumbers& q, double r);   // r > 0
double phi1_second(const ModelParams& p, const QuantumNumbers& q, double r);  // r > 0

// Five real radial component profiles on a grid.  phi3 is stored as its
// real profile (the system's explicit imaginary unit is folded into the
// bilinears; only |phi|^2 enters the current).  phi5 vanishes identically
// for k_z = 0.  norm_constant is fixed so the total current
// |integral J^t 2 pi alpha r dr| over the grid equals 1.
struct DKPSpinor {
  Scenario scenario;
  ModelParams params;
  QuantumNumbers numbers;
  SpectrumResult energy;
  RadialGrid grid;
  std::array<std::vector<double>, 5> components;
  double norm_constant = 1.0;
};

// Builds the spinor of state (n, m) at energy E.  Throws UnphysicalError
// for an unphysical E and ResolutionError when the sampled phi1 does not
// show exactly n interior sign changes.
DKPSpinor build_spinor(const ModelParams& p, const QuantumNumbers& q, const SpectrumResult& E,
                       const RadialGrid& grid, Scenario scenario);

// Scenario prefactor P in J^t = P |phi1|^2 N^2 (E and M of the state;
// x = E/E_P of the state's own eigenvalue).
double jt_prefactor(Scenario s, double epsilon, double E, double M);

// Probability density J^t at radius r (phi1 evaluated analytically).
double current_jt(const DKPSpinor& spinor, double r);

// Residual of the second-order radial equation at (E, r) with the level's
// phi1 profile and analytic derivatives.  Zero (to rounding) exactly when
// kappa^2(E) matches the level's kappa_sq_target.  If `scale` is given it
// receives the sum of the magnitudes of the equation's terms.
double ode_residual(const ModelParams& p, const QuantumNumbers& q, double E, Scenario scenario,
                    double r, double* scale = nullptr);

}  // namespace rdkp

#endif
