#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "doctest.h"
#include "rainbowdkp/errors.hpp"
#include "rainbowdkp/wavefunction.hpp"

using namespace rdkp;

namespace {

// Independent quadrature for the normalization contract: adaptive-depth
// composite Simpson on a refined grid, evaluated from the analytic J^t.
double integrate_jt(const DKPSpinor& spinor, int samples) {
  const double h = spinor.grid.r_max / samples;
  double sum = 0.0;
  for (int i = 0; i <= samples; ++i) {
    const double r = i * h;
    const double f = (i == 0) ? 0.0
                              : current_jt(spinor, r) * 2.0 * 3.14159265358979323846 *
                                    spinor.params.alpha * r;
    const double w = (i == 0 || i == samples) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    sum += w * f;
  }
  return sum * h / 3.0;
}

int count_sign_changes(const DKPSpinor& spinor) {
  int changes = 0;
  double prev = 0.0;
  for (double v : spinor.components[0]) {
    if (v == 0.0) continue;
    if (prev != 0.0 && std::signbit(v) != std::signbit(prev)) ++changes;
    prev = v;
  }
  return changes;
}

}  // namespace

TEST_CASE("phi1 closed-form values") {
  const ModelParams p{0.8, 1.0, 0.0, 1.0};
  SUBCASE("nodeless ground state equals 1 at the origin") {
    CHECK(phi1(p, {0, 0}, 0.0) == 1.0);
  }
  SUBCASE("n = 1, m = 0 profile is (1 - rho) e^{-rho/2}") {
    const QuantumNumbers q{1, 0};
    for (double r : {0.3, 0.9, 2.0}) {
      const double rho = p.mass_ratio * p.omega_ratio * r * r;
      CHECK(phi1(p, q, r) ==
            doctest::Approx((1.0 - rho) * std::exp(-0.5 * rho)).epsilon(1e-14));
    }
    // zero exactly at rho = 1, i.e. r = 1/sqrt(M w)
    const double node = 1.0 / std::sqrt(p.mass_ratio * p.omega_ratio);
    CHECK(std::fabs(phi1(p, q, node)) < 1e-15);
  }
  SUBCASE("derivatives match finite differences") {
    const QuantumNumbers q{2, 1};
    const ModelParams pj{0.8, 1.0, 0.0, 0.5};
    const double h = 1e-6;
    for (double r : {0.4, 1.1, 2.7}) {
      const double fd1 = (phi1(pj, q, r + h) - phi1(pj, q, r - h)) / (2.0 * h);
      const double fd2 =
          (phi1(pj, q, r + h) - 2.0 * phi1(pj, q, r) + phi1(pj, q, r - h)) / (h * h);
      CHECK(phi1_prime(pj, q, r) == doctest::Approx(fd1).epsilon(1e-7));
      CHECK(phi1_second(pj, q, r) == doctest::Approx(fd2).epsilon(1e-4));
    }
  }
}

TEST_CASE("build_spinor structure") {
  const ModelParams p{0.8, 1.0, 0.2, 0.5};
  const QuantumNumbers q{1, 1};
  const SpectrumResult e = energy_case2(p, q, Branch::Plus);
  const RadialGrid grid(default_r_max(p, q), 2048);
  const DKPSpinor sp = build_spinor(p, q, e, grid, Scenario::Case2);

  SUBCASE("fifth component vanishes for k_z = 0") {
    for (double v : sp.components[4]) CHECK(v == 0.0);
  }
  SUBCASE("phi2/phi1 = E g0 / M at every node (g0 = 1 here)") {
    for (int i = 0; i < grid.points; i += 97) {
      if (sp.components[0][i] == 0.0) continue;
      CHECK(sp.components[1][i] / sp.components[0][i] ==
            doctest::Approx(e.energy_ratio / p.mass_ratio).epsilon(1e-13));
    }
  }
  SUBCASE("node count equals n") {
    CHECK(count_sign_changes(sp) == 1);
  }
  SUBCASE("m = 0 kills the fourth component") {
    const QuantumNumbers q0{1, 0};
    const SpectrumResult e0 = energy_case2(p, q0, Branch::Plus);
    const DKPSpinor sp0 =
        build_spinor(p, q0, e0, RadialGrid(default_r_max(p, q0), 512), Scenario::Case2);
    for (double v : sp0.components[3]) CHECK(v == 0.0);
  }
}

TEST_CASE("node counts across levels") {
  const ModelParams base{0.8, 1.0, 0.0, 1.0};
  for (int n : {0, 1, 2, 3, 4, 5})
    for (int m : {0, 1, 2, 5}) {
      ModelParams p = base;
      const QuantumNumbers q{n, m};
      const SpectrumResult e = energy_case1(p, q, Branch::Plus);
      const DKPSpinor sp =
          build_spinor(p, q, e, RadialGrid(default_r_max(p, q), 2048), Scenario::Case1);
      CHECK(count_sign_changes(sp) == n);
    }
}

TEST_CASE("too coarse a grid raises a resolution error") {
  const ModelParams p{0.8, 1.0, 0.0, 1.0};
  const QuantumNumbers q{5, 0};
  const SpectrumResult e = energy_case1(p, q, Branch::Plus);
  CHECK_THROWS_AS(build_spinor(p, q, e, RadialGrid(default_r_max(p, q), 16), Scenario::Case1),
                  ResolutionError);
}

TEST_CASE("unphysical energy is rejected") {
  const ModelParams p{0.8, 0.6, 0.5, 0.5};
  const QuantumNumbers q{1, 1};
  const SpectrumResult bad = energy_case3(p, q, Branch::Minus);
  REQUIRE_FALSE(bad.physical);
  CHECK_THROWS_AS(build_spinor(p, q, bad, RadialGrid(1.0, 64), Scenario::Case3),
                  UnphysicalError);
}

TEST_CASE("normalization: total current equals one") {
  // plus branch across the scenarios; verified with an independent
  // fine-grid quadrature of the analytic density
  const QuantumNumbers q{1, 1};
  for (Scenario s : {Scenario::Identity, Scenario::Case2, Scenario::Case3}) {
    const ModelParams p{0.8, 1.0, s == Scenario::Identity ? 0.0 : 0.4, 0.5};
    const SpectrumResult e = energy_closed(s, p, q, Branch::Plus);
    const DKPSpinor sp =
        build_spinor(p, q, e, RadialGrid(default_r_max(p, q), 4096), s);
    CHECK(std::fabs(integrate_jt(sp, 30000) - 1.0) <= 1e-6);
  }
}

TEST_CASE("current density") {
  const QuantumNumbers q{1, 1};
  SUBCASE("J^t / phi1^2 is constant in r for case 2") {
    const ModelParams p{0.8, 1.0, 0.3, 0.5};
    const SpectrumResult e = energy_case2(p, q, Branch::Plus);
    const DKPSpinor sp =
        build_spinor(p, q, e, RadialGrid(default_r_max(p, q), 512), Scenario::Case2);
    const double ratio0 = current_jt(sp, 0.4) / (phi1(p, q, 0.4) * phi1(p, q, 0.4));
    for (double r : {0.9, 1.7, 3.0}) {
      const double ratio = current_jt(sp, r) / (phi1(p, q, r) * phi1(p, q, r));
      CHECK(ratio == doctest::Approx(ratio0).epsilon(1e-13));
    }
  }
  SUBCASE("case-3 plus-branch prefactor equals S/M") {
    // (e^{eps x} - 1)/(eps x) * E/M with e^{eps E} = 1 + eps S collapses to S/M
    const ModelParams p{0.8, 0.1, 0.5, 0.5};
    const SpectrumResult e = energy_case3(p, q, Branch::Plus);
    const double S = std::sqrt(
        p.mass_ratio * p.mass_ratio +
        2.0 * p.mass_ratio * p.omega_ratio * (abs_j(q, p.alpha) + 2.0 * q.n));
    CHECK(jt_prefactor(Scenario::Case3, p.epsilon, e.energy_ratio, p.mass_ratio) ==
          doctest::Approx(S / p.mass_ratio).epsilon(1e-13));
    // frozen: S/M = sqrt(2) for these parameters
    CHECK(S / p.mass_ratio == doctest::Approx(1.4142135623730950).epsilon(1e-14));
  }
  SUBCASE("J^t >= 0 for plus-branch states below the case-1 pole") {
    for (Scenario s : {Scenario::Identity, Scenario::Case1, Scenario::Case2, Scenario::Case3}) {
      const ModelParams p{0.8, 0.5, 0.4, 0.5};
      const SpectrumResult e = energy_closed(s, p, q, Branch::Plus);
      REQUIRE(e.physical);
      if (s == Scenario::Case1) REQUIRE(e.energy_ratio < 1.0 / p.epsilon);
      const DKPSpinor sp =
          build_spinor(p, q, e, RadialGrid(default_r_max(p, q), 256), s);
      for (double r : {0.2, 1.0, 2.5, 5.0}) CHECK(current_jt(sp, r) >= 0.0);
    }
  }
}

TEST_CASE("ode residual certifies quantized energies and rejects detuned ones") {
  std::mt19937 rng(2024u);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  for (int trial = 0; trial < 12; ++trial) {
    const Scenario s = static_cast<Scenario>(1 + trial % 3);
    const ModelParams p{0.2 + 0.6 * u01(rng), 0.1 + u01(rng), 0.5 * u01(rng),
                        0.3 + 0.7 * u01(rng)};
    const QuantumNumbers q{trial % 3, trial % 2};
    const SpectrumResult e = energy_closed(s, p, q, Branch::Plus);
    REQUIRE(e.physical);
    const double r_max = default_r_max(p, q);
    double worst_ok = 0.0;
    for (int i = 1; i <= 32; ++i) {
      const double r = i * r_max / 33.0;
      double scale = 0.0;
      const double res = ode_residual(p, q, e.energy_ratio, s, r, &scale);
      worst_ok = std::max(worst_ok, std::fabs(res) / std::max(scale, 1e-300));
    }
    CHECK(worst_ok <= 1e-8);

    // halfway to the next level the same profile fails the equation
    const SpectrumResult e_next =
        energy_closed(s, p, QuantumNumbers{q.n + 1, q.m}, Branch::Plus);
    const double detuned = 0.5 * (e.energy_ratio + e_next.energy_ratio);
    double worst_detuned = 0.0;
    for (int i = 1; i <= 32; ++i) {
      const double r = i * r_max / 33.0;
      double scale = 0.0;
      const double res = ode_residual(p, q, detuned, s, r, &scale);
      worst_detuned = std::max(worst_detuned, std::fabs(res) / std::max(scale, 1e-300));
    }
    CHECK(worst_detuned > 1e-3);
  }
}

TEST_CASE("ode residual decays at large radius for quantized energies") {
  const ModelParams p{0.8, 1.0, 0.2, 0.5};
  const QuantumNumbers q{1, 1};
  const SpectrumResult e = energy_case2(p, q, Branch::Plus);
  const double far = default_r_max(p, q);
  CHECK(std::fabs(ode_residual(p, q, e.energy_ratio, Scenario::Case2, far)) < 1e-12);
}

TEST_CASE("default grid extent keeps the density tail negligible") {
  const ModelParams p{0.8, 1.0, 0.0, 0.5};
  const QuantumNumbers q{2, 1};
  const double r_max = default_r_max(p, q);
  const double tail = phi1(p, q, r_max);
  CHECK(tail * tail < 1e-15);
}
