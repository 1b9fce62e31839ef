#include "rainbowdkp/wavefunction.hpp"

#include <cmath>
#include <string>

#include "rainbowdkp/errors.hpp"
#include "rainbowdkp/specfun.hpp"

namespace rdkp {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct LevelShape {
  double s;       // |j| / 2
  double b;       // 1 + |j|
  double a;       // -n
  double mw;      // M w
};

LevelShape shape_of(const ModelParams& p, const QuantumNumbers& q) {
  validate(p);
  validate(q);
  const double j = abs_j(q, p.alpha);
  return LevelShape{0.5 * j, 1.0 + j, -static_cast<double>(q.n), p.mass_ratio * p.omega_ratio};
}

// Composite quadrature over samples f_0..f_N on spacing h (Simpson, with a
// 3/8 tail when the interval count is odd).
double composite_integral(const std::vector<double>& f, double h) {
  const int n = static_cast<int>(f.size()) - 1;
  double sum = 0.0;
  int limit = n;
  if (n % 2 != 0) {
    limit = n - 3;
    sum += 3.0 * h / 8.0 * (f[limit] + 3.0 * f[limit + 1] + 3.0 * f[limit + 2] + f[limit + 3]);
  }
  for (int i = 0; i + 2 <= limit; i += 2)
    sum += h / 3.0 * (f[i] + 4.0 * f[i + 1] + f[i + 2]);
  return sum;
}

}  // namespace

double default_r_max(const ModelParams& p, const QuantumNumbers& q) {
  validate(p);
  validate(q);
  const double j = abs_j(q, p.alpha);
  return 6.0 * std::sqrt((2.0 * q.n + 1.0 + j) / (p.mass_ratio * p.omega_ratio));
}

double phi1(const ModelParams& p, const QuantumNumbers& q, double r) {
  if (!(r >= 0.0)) throw RangeError("phi1: r must be >= 0");
  const LevelShape L = shape_of(p, q);
  const double rho = L.mw * r * r;
  const double pref = (L.s == 0.0) ? 1.0 : std::pow(rho, L.s);
  return pref * std::exp(-0.5 * rho) * kummer_1f1(L.a, L.b, rho);
}

double phi1_prime(const ModelParams& p, const QuantumNumbers& q, double r) {
  if (!(r > 0.0)) throw RangeError("phi1_prime: r must be > 0");
  const LevelShape L = shape_of(p, q);
  const double rho = L.mw * r * r;
  const double F = kummer_1f1(L.a, L.b, rho);
  const double Fp = kummer_1f1_prime(L.a, L.b, rho);
  const double ps = (L.s == 0.0) ? 1.0 : std::pow(rho, L.s);
  const double psm1 = (L.s == 0.0) ? 0.0 : std::pow(rho, L.s - 1.0);
  const double du = std::exp(-0.5 * rho) * (L.s * psm1 * F - 0.5 * ps * F + ps * Fp);
  return 2.0 * L.mw * r * du;
}

double phi1_second(const ModelParams& p, const QuantumNumbers& q, double r) {
  if (!(r > 0.0)) throw RangeError("phi1_second: r must be > 0");
  const LevelShape L = shape_of(p, q);
  const double rho = L.mw * r * r;
  const double F = kummer_1f1(L.a, L.b, rho);
  const double Fp = kummer_1f1_prime(L.a, L.b, rho);
  const double Fpp = (L.a / L.b) * ((L.a + 1.0) / (L.b + 1.0)) *
                     kummer_1f1(L.a + 2.0, L.b + 2.0, rho);
  const double ps = (L.s == 0.0) ? 1.0 : std::pow(rho, L.s);
  const double psm1 = (L.s == 0.0) ? 0.0 : std::pow(rho, L.s - 1.0);
  const double psm2 = (L.s == 0.0) ? 0.0 : std::pow(rho, L.s - 2.0);
  const double e = std::exp(-0.5 * rho);
  const double du = e * (L.s * psm1 * F - 0.5 * ps * F + ps * Fp);
  const double ddu = e * (L.s * (L.s - 1.0) * psm2 * F - L.s * psm1 * F + 0.25 * ps * F +
                          2.0 * L.s * psm1 * Fp - ps * Fp + ps * Fpp);
  const double drho = 2.0 * L.mw * r;
  return 2.0 * L.mw * du + drho * drho * ddu;
}

double jt_prefactor(Scenario s, double epsilon, double E, double M) {
  const double x = E;  // E_P = 1
  switch (s) {
    case Scenario::Identity:
    case Scenario::Case2:
      return E / M;
    case Scenario::Case1: {
      const double denom = 1.0 - epsilon * x;
      if (denom == 0.0) throw DomainError("jt_prefactor: case1 pole at x = 1/epsilon");
      return E / (denom * M);
    }
    case Scenario::Case3:
      return eval_g0(RainbowPair{Scenario::Case3, epsilon}, x) * E / M;
  }
  throw RangeError("jt_prefactor: bad scenario");
}

DKPSpinor build_spinor(const ModelParams& p, const QuantumNumbers& q, const SpectrumResult& E,
                       const RadialGrid& grid, Scenario scenario) {
  if (!E.physical || std::isnan(E.energy_ratio))
    throw UnphysicalError("build_spinor: energy is not physical");
  const RainbowPair pair{scenario, p.epsilon};
  const double x = E.energy_ratio;
  const double g0 = eval_g0(pair, x);
  const double g1 = eval_g1(pair, x);
  const double M = p.mass_ratio;
  const double mw = M * p.omega_ratio;

  DKPSpinor sp{scenario, p, q, E, grid, {}, 1.0};
  const int N = grid.points;
  for (auto& c : sp.components) c.assign(N, 0.0);

  int sign_changes = 0;
  double prev_nonzero = 0.0;
  for (int i = 1; i <= N; ++i) {
    const double r = grid.node(i);
    const double f = phi1(p, q, r);
    const double fp = phi1_prime(p, q, r);
    sp.components[0][i - 1] = f;
    sp.components[1][i - 1] = (E.energy_ratio * g0 / M) * f;
    sp.components[2][i - 1] = (g1 / M) * (mw * r * f + fp);
    sp.components[3][i - 1] = (q.m == 0) ? 0.0 : -(g1 * q.m / (p.alpha * M)) * f / r;
    // fifth component identically zero for k_z = 0
    if (f != 0.0) {
      if (prev_nonzero != 0.0 && std::signbit(f) != std::signbit(prev_nonzero)) ++sign_changes;
      prev_nonzero = f;
    }
  }
  if (sign_changes != q.n)
    throw ResolutionError("build_spinor: sampled phi1 shows " + std::to_string(sign_changes) +
                          " interior sign changes, expected n = " + std::to_string(q.n) +
                          " (grid too coarse?)");

  // |integral J^t 2 pi alpha r dr| = 1
  std::vector<double> density(N + 1, 0.0);
  for (int i = 1; i <= N; ++i) {
    const double f = sp.components[0][i - 1];
    density[i] = f * f * 2.0 * kPi * p.alpha * grid.node(i);
  }
  const double weight = composite_integral(density, grid.spacing());
  const double pref = jt_prefactor(scenario, p.epsilon, E.energy_ratio, M);
  sp.norm_constant = 1.0 / std::sqrt(std::fabs(pref) * weight);
  return sp;
}

double current_jt(const DKPSpinor& spinor, double r) {
  const double f = phi1(spinor.params, spinor.numbers, r);
  const double pref = jt_prefactor(spinor.scenario, spinor.params.epsilon,
                                   spinor.energy.energy_ratio, spinor.params.mass_ratio);
  return pref * spinor.norm_constant * spinor.norm_constant * f * f;
}

double ode_residual(const ModelParams& p, const QuantumNumbers& q, double E, Scenario scenario,
                    double r, double* scale) {
  if (!(r > 0.0)) throw RangeError("ode_residual: r must be > 0");
  const double f = phi1(p, q, r);
  const double fp = phi1_prime(p, q, r);
  const double fpp = phi1_second(p, q, r);
  const double kappa = kappa_sq_of_energy(scenario, p, E);
  const double j = abs_j(q, p.alpha);
  const double centrifugal = j * j / (r * r);
  const double osc = p.mass_ratio * p.omega_ratio * r;
  const double t1 = fpp;
  const double t2 = fp / r;
  const double t3 = (kappa - centrifugal - osc * osc) * f;
  if (scale)
    *scale = std::fabs(t1) + std::fabs(t2) +
             (std::fabs(kappa) + centrifugal + osc * osc) * std::fabs(f);
  return t1 + t2 + t3;
}

}  // namespace rdkp
