#include "rainbowdkp/dkp_algebra.hpp"

#include <cmath>
#include <string>

#include "rainbowdkp/errors.hpp"

namespace rdkp {

Matrix5 Matrix5::operator*(const Matrix5& o) const {
  Matrix5 r;
  for (int i = 0; i < 5; ++i)
    for (int k = 0; k < 5; ++k) {
      const double v = m[i][k];
      if (v == 0.0) continue;
      for (int j = 0; j < 5; ++j) r.m[i][j] += v * o.m[k][j];
    }
  return r;
}

Matrix5 Matrix5::operator+(const Matrix5& o) const {
  Matrix5 r;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) r.m[i][j] = m[i][j] + o.m[i][j];
  return r;
}

Matrix5 Matrix5::operator-(const Matrix5& o) const {
  Matrix5 r;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) r.m[i][j] = m[i][j] - o.m[i][j];
  return r;
}

Matrix5 Matrix5::operator*(double s) const {
  Matrix5 r;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) r.m[i][j] = m[i][j] * s;
  return r;
}

Matrix5 Matrix5::transposed() const {
  Matrix5 r;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) r.m[i][j] = m[j][i];
  return r;
}

double Matrix5::max_abs() const {
  double v = 0.0;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) v = std::max(v, std::fabs(m[i][j]));
  return v;
}

Matrix5 beta_flat(int a) {
  if (a < 0 || a > 3) throw RangeError("beta_flat: index must be in 0..3, got " + std::to_string(a));
  Matrix5 b;
  if (a == 0) {
    // theta = [[0,1],[1,0]] in the upper-left 2x2 block
    b(0, 1) = 1.0;
    b(1, 0) = 1.0;
  } else {
    // tau^i occupies rows 0..1 x cols 2..4, -tau^i)^T the mirror block;
    // tau^i has a single -1 in row 0, column i-1.
    b(0, 1 + a) = -1.0;
    b(1 + a, 0) = 1.0;
  }
  return b;
}

Matrix5 eta0() {
  Matrix5 e;
  e(0, 0) = 1.0;
  e(1, 1) = 1.0;
  e(2, 2) = -1.0;
  e(3, 3) = -1.0;
  e(4, 4) = -1.0;
  return e;
}

double eta_flat(int a, Signature sig) {
  if (a < 0 || a > 3) throw RangeError("eta_flat: index must be in 0..3");
  const double time_sign = (sig == Signature::MostlyMinus) ? 1.0 : -1.0;
  return (a == 0) ? time_sign : -time_sign;
}

Matrix5 kemmer_residual(int a, int b, int c, Signature sig) {
  const Matrix5 ba = beta_flat(a);
  const Matrix5 bb = beta_flat(b);
  const Matrix5 bc = beta_flat(c);
  const Matrix5 lhs = ba * bb * bc + bc * bb * ba;
  const Matrix5 rhs = bc * eta_flat(a, sig) * (a == b ? 1.0 : 0.0) +
                      ba * eta_flat(b, sig) * (b == c ? 1.0 : 0.0);
  return lhs - rhs;
}

Matrix5 affine_gamma_phi(double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw RangeError("affine_gamma_phi: alpha must be in (0,1]");
  Matrix5 g;
  g(2, 3) = alpha;
  g(3, 2) = -alpha;
  return g;
}

TetradSet tetrads_at(const RainbowPair& pair, double x, double r, double alpha) {
  if (!(r > 0.0)) throw RangeError("tetrads_at: r must be > 0");
  if (!(alpha > 0.0 && alpha <= 1.0)) throw RangeError("tetrads_at: alpha must be in (0,1]");
  const double g0 = eval_g0(pair, x);
  const double g1 = eval_g1(pair, x);
  TetradSet t;
  t.down = {1.0 / g0, 1.0 / g1, alpha * r / g1, 1.0 / g1};
  t.up = {g0, g1, g1 / (alpha * r), g1};
  return t;
}

Matrix5 curved_beta(Coordinate mu, const RainbowPair& pair, double x, double r, double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw RangeError("curved_beta: alpha must be in (0,1]");
  const double g0 = eval_g0(pair, x);
  const double g1 = eval_g1(pair, x);
  switch (mu) {
    case Coordinate::T:
      return beta_flat(0) * g0;
    case Coordinate::R:
      return beta_flat(1) * g1;
    case Coordinate::Phi:
      if (!(r > 0.0))
        throw DomainError("curved_beta: beta^phi is singular at r = 0");
      return beta_flat(2) * (g1 / (r * alpha));
    case Coordinate::Z:
      return beta_flat(3) * g1;
  }
  throw RangeError("curved_beta: bad coordinate");
}

std::array<double, 5> coupled_system_residual(const SpinorSample& s, double E,
                                              const RainbowPair& pair, double x, double r,
                                              double alpha, double omega, double M, int m,
                                              double k_z, std::array<double, 5>* scales) {
  if (!(r > 0.0)) throw RangeError("coupled_system_residual: r must be > 0");
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw RangeError("coupled_system_residual: alpha must be in (0,1]");
  const double g0 = eval_g0(pair, x);
  const double g1 = eval_g1(pair, x);

  const double p1 = s.phi[0], p2 = s.phi[1], p3 = s.phi[2], p4 = s.phi[3], p5 = s.phi[4];
  const double dp1 = s.dphi1_dr, ddp1 = s.d2phi1_dr2;

  // phi3' from the relation phi3 = (g1/M)(M w r phi1 + phi1'); the third
  // residual below certifies the relation itself.
  const double dp3 = (g1 / M) * (M * omega * p1 + M * omega * r * dp1 + ddp1);

  std::array<std::array<double, 6>, 5> terms{};
  // first radial equation
  terms[0] = {-r * alpha * M * p1,
              E * g0 * r * alpha * p2,
              alpha * g1 * (1.0 - M * omega * r * r) * p3,
              alpha * g1 * r * dp3,
              g1 * m * p4,
              g1 * k_z * r * alpha * p5};
  // algebraic relations for the remaining components
  terms[1] = {E * g0 * p1, -M * p2, 0.0, 0.0, 0.0, 0.0};
  terms[2] = {g1 * (M * omega * r * p1 + dp1), -M * p3, 0.0, 0.0, 0.0, 0.0};
  terms[3] = {-g1 * m * p1, -r * alpha * M * p4, 0.0, 0.0, 0.0, 0.0};
  terms[4] = {g1 * k_z * p1, M * p5, 0.0, 0.0, 0.0, 0.0};

  std::array<double, 5> res{};
  for (int eq = 0; eq < 5; ++eq) {
    double sum = 0.0, scale = 0.0;
    for (double t : terms[eq]) {
      sum += t;
      scale += std::fabs(t);
    }
    res[eq] = sum;
    if (scales) (*scales)[eq] = scale;
  }
  return res;
}

}  // namespace rdkp
