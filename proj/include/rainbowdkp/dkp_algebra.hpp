#ifndef RAINBOWDKP_DKP_ALGEBRA_HPP
#define RAINBOWDKP_DKP_ALGEBRA_HPP

#include <array>

#include "rainbowdkp/rainbow.hpp"

namespace rdkp {

// Dense 5x5 matrix.  The flat-space DKP matrices, eta^0 and Gamma_phi have
// exact small-integer entries, so equality tests on them are exact.
struct Matrix5 {
  std::array<std::array<double, 5>, 5> m{};

  double& operator()(int i, int j) { return m[i][j]; }
  double operator()(int i, int j) const { return m[i][j]; }

  Matrix5 operator*(const Matrix5& o) const;
  Matrix5 operator+(const Matrix5& o) const;
  Matrix5 operator-(const Matrix5& o) const;
  Matrix5 operator*(double s) const;
  Matrix5 transposed() const;
  bool operator==(const Matrix5& o) const { return m == o.m; }

  double max_abs() const;
  bool is_zero() const { return max_abs() == 0.0; }
};

// Flat-space spin-0 DKP matrix beta^a, a in {0,1,2,3}, in the
// five-dimensional representation built from the theta and tau blocks.
Matrix5 beta_flat(int a);

// eta^0 = 2 beta^0 beta^0 - 1 = diag(1, 1, -1, -1, -1)
Matrix5 eta0();

// Signature convention for the flat metric eta_ab used in the Kemmer
// relation.  The explicit beta matrices satisfy the algebra only under
// MostlyMinus, diag(+,-,-,-); the line element uses MostlyPlus.  Both are
// exposed so the mismatch can be demonstrated.
enum class Signature { MostlyMinus, MostlyPlus };

// Diagonal entry eta^{aa} for the chosen signature.
double eta_flat(int a, Signature sig);

// beta^a beta^b beta^c + beta^c beta^b beta^a - eta^{ab} beta^c - eta^{bc} beta^a.
// The zero matrix signals that the Kemmer relation holds for (a, b, c).
Matrix5 kemmer_residual(int a, int b, int c, Signature sig);

// The only nonzero affine connection component: Gamma_phi with the
// antisymmetric alpha block, Gamma_phi(2,3) = alpha = -Gamma_phi(3,2).
Matrix5 affine_gamma_phi(double alpha);

// Diagonal tetrads e^a_mu and inverse tetrads e^mu_a of the rainbow
// cosmic-string metric, ordered (t, r, phi, z).
struct TetradSet {
  std::array<double, 4> down;  // e^a_mu
  std::array<double, 4> up;    // e^mu_a
};

TetradSet tetrads_at(const RainbowPair& pair, double x, double r, double alpha);

enum class Coordinate { T, R, Phi, Z };

// Curved-space DKP matrix beta^mu = e^mu_a beta^a:
//   beta^t = g0 beta^0, beta^r = g1 beta^1,
//   beta^phi = g1 beta^2 / (r alpha), beta^z = g1 beta^3.
Matrix5 curved_beta(Coordinate mu, const RainbowPair& pair, double x, double r, double alpha);

// One radial sample of the five-component spinor with the derivatives of
// the first component that the coupled first-order system needs.  The
// third component is stored as its real radial profile (the explicit
// imaginary unit of the system is folded out; only bilinears enter the
// current).
struct SpinorSample {
  std::array<double, 5> phi{};
  double dphi1_dr = 0.0;
  double d2phi1_dr2 = 0.0;
};

// Left-hand sides of the five coupled radial equations obtained from the
// oscillator-coupled DKP equation at (E, r).  All five ~ 0 certifies the
// sample as a solution.  The radial derivative of the third component is
// reconstructed from dphi1_dr and d2phi1_dr2 through the same relation
// that defines phi3 (whose own consistency is certified by the third
// residual).  If `scales` is given, it receives the sum of the magnitudes
// of the terms of each equation, for relative-residual tests.
std::array<double, 5> coupled_system_residual(const SpinorSample& s, double E,
                                              const RainbowPair& pair, double x, double r,
                                              double alpha, double omega, double M, int m,
                                              double k_z,
                                              std::array<double, 5>* scales = nullptr);

}  // namespace rdkp

#endif
