#ifndef RAINBOWDKP_FD_ORACLE_HPP
#define RAINBOWDKP_FD_ORACLE_HPP

#include <vector>

#include "rainbowdkp/grid.hpp"
#include "rainbowdkp/spectrum.hpp"

namespace rdkp {

// Symmetric tridiagonal discretization of the scenario-free radial
// operator whose eigenvalues are kappa^2:
//
//   -phi'' - phi'/r + (j^2/r^2 + (M w)^2 r^2) phi = kappa^2 phi
//
// in conservation form on the cylindrical measure r dr, symmetrized with
// w_i = sqrt(r_i) phi_i.  Interior rows agree with the Liouville-
// transformed operator -u'' + [(j^2 - 1/4)/r^2 + (M w)^2 r^2] u to O(h^2)
// (the off-diagonals approach -1/h^2), but the conservation form stays
// second-order accurate down to |j| = 0, where the transformed potential
// is critically attractive and a naive Dirichlet stencil loses
// convergence.  Outer boundary is Dirichlet at r_max; at the origin the
// regular solution is selected (Dirichlet for j > 0, zero-flux for j = 0).
struct DiscretizedOperator {
  RadialGrid grid;
  double mass_omega;  // M w
  double abs_j;
  std::vector<double> diag;     // dimension points - 1
  std::vector<double> offdiag;  // dimension points - 2
};

DiscretizedOperator discretize_radial_operator(double mass_omega, double abs_j,
                                               const RadialGrid& grid);

// k smallest eigenvalues (ascending) by Sturm-sequence bisection, each to
// absolute tolerance 1e-10.  k <= 10.  Throws ResolutionError when the
// highest state's classical turning point exceeds r_max / 2.
std::vector<double> lowest_eigenvalues(const DiscretizedOperator& op, int k);

// Comparison of the discrete eigenvalues against 2 M w (2n + 1 + |j|) for
// n = 0..levels-1.  A Richardson estimate from a half-resolution grid
// guards against quoting under-resolved eigenvalues (ResolutionError when
// the estimated discretization error exceeds half the pass tolerance).
struct CertificationLevel {
  int n;
  double kappa_sq_fd;
  double kappa_sq_formula;
  double rel_error;
  bool pass;
};

struct CertificationReport {
  std::vector<CertificationLevel> levels;
  double tolerance;
  bool pass;
};

CertificationReport certify_quantization(const ModelParams& p, const QuantumNumbers& q,
                                         int levels = 5, int grid_points = 20000,
                                         double tolerance = 1e-3);

}  // namespace rdkp

#endif
