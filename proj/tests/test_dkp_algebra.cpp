#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "doctest.h"
#include "rainbowdkp/dkp_algebra.hpp"
#include "rainbowdkp/errors.hpp"
#include "rainbowdkp/spectrum.hpp"
#include "rainbowdkp/wavefunction.hpp"

using namespace rdkp;

TEST_CASE("flat beta matrices have the exact block entries") {
  const Matrix5 b0 = beta_flat(0);
  CHECK(b0(0, 1) == 1.0);
  CHECK(b0(1, 0) == 1.0);
  int nonzero = 0;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      if (b0(i, j) != 0.0) ++nonzero;
  CHECK(nonzero == 2);

  const Matrix5 b1 = beta_flat(1);
  CHECK(b1(0, 2) == -1.0);
  CHECK(b1(2, 0) == 1.0);
  const Matrix5 b2 = beta_flat(2);
  CHECK(b2(0, 3) == -1.0);
  CHECK(b2(3, 0) == 1.0);
  const Matrix5 b3 = beta_flat(3);
  CHECK(b3(0, 4) == -1.0);
  CHECK(b3(4, 0) == 1.0);
  for (int a = 1; a < 4; ++a) {
    int count = 0;
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j)
        if (beta_flat(a)(i, j) != 0.0) {
          ++count;
          CHECK(std::fabs(beta_flat(a)(i, j)) == 1.0);
        }
    CHECK(count == 2);
  }
  CHECK_THROWS_AS(beta_flat(4), RangeError);
  CHECK_THROWS_AS(beta_flat(-1), RangeError);
}

TEST_CASE("matrix identities of the flat representation") {
  const Matrix5 b0 = beta_flat(0);
  CHECK(b0 * b0 * b0 == b0);  // (beta^0)^3 = beta^0
  const Matrix5 b1 = beta_flat(1);
  CHECK(b1 * b1 * b1 == b1 * (-1.0));  // (beta^i)^3 = -beta^i

  const Matrix5 e = eta0();
  for (int i = 0; i < 5; ++i) CHECK(e(i, i) == (i < 2 ? 1.0 : -1.0));
  Matrix5 identity;
  for (int i = 0; i < 5; ++i) identity(i, i) = 1.0;
  CHECK(b0 * b0 * 2.0 - identity == e);
}

TEST_CASE("Kemmer relation holds for all 64 triples under (+,-,-,-)") {
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        CHECK(kemmer_residual(a, b, c, Signature::MostlyMinus).is_zero());
}

TEST_CASE("Kemmer relation fails under (-,+,+,+)") {
  const Matrix5 res = kemmer_residual(0, 0, 0, Signature::MostlyPlus);
  CHECK_FALSE(res.is_zero());
  CHECK(res == beta_flat(0) * 4.0);
  CHECK(kemmer_residual(1, 1, 1, Signature::MostlyMinus).is_zero());
}

TEST_CASE("eta0 beta^a is symmetric") {
  for (int a = 0; a < 4; ++a) {
    const Matrix5 eb = eta0() * beta_flat(a);
    CHECK(eb.transposed() == eb);
  }
}

TEST_CASE("affine connection block") {
  const Matrix5 g = affine_gamma_phi(0.5);
  CHECK(g(2, 3) == 0.5);
  CHECK(g(3, 2) == -0.5);
  double sum = 0.0;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) sum += std::fabs(g(i, j));
  CHECK(sum == 1.0);
  // Gamma_phi = (1/2) w_{phi a b} [beta^a, beta^b] with w_{phi 1 2} = -alpha
  const Matrix5 b1 = beta_flat(1), b2 = beta_flat(2);
  const Matrix5 commutator = b1 * b2 - b2 * b1;
  CHECK(commutator * -0.5 == g);
  CHECK_THROWS_AS(affine_gamma_phi(0.0), RangeError);
}

TEST_CASE("tetrads: orthonormality and metric reconstruction") {
  std::mt19937 rng(7u);
  std::uniform_real_distribution<double> ur(0.1, 8.0);
  std::uniform_real_distribution<double> ua(0.1, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const Scenario s = static_cast<Scenario>(trial % 4);
    const double eps = 0.02 * (trial % 50);
    const RainbowPair pair{s, eps};
    double x = 0.3;
    if (s == Scenario::Case1 && eps > 0.0) x = std::min(x, 0.5 / eps);
    if (s == Scenario::Case2 && eps > 0.0) x = std::min(x, 0.5 / std::sqrt(eps));
    const double r = ur(rng), alpha = ua(rng);
    const TetradSet t = tetrads_at(pair, x, r, alpha);
    for (int i = 0; i < 4; ++i)
      CHECK(t.down[i] * t.up[i] == doctest::Approx(1.0).epsilon(1e-14));
    const MetricDiagonal g = metric_at(pair, x, r, alpha);
    CHECK(-t.down[0] * t.down[0] == doctest::Approx(g.g_tt).epsilon(1e-12));
    CHECK(t.down[1] * t.down[1] == doctest::Approx(g.g_rr).epsilon(1e-12));
    CHECK(t.down[2] * t.down[2] == doctest::Approx(g.g_phiphi).epsilon(1e-12));
    CHECK(t.down[3] * t.down[3] == doctest::Approx(g.g_zz).epsilon(1e-12));
  }
}

TEST_CASE("curved beta matrices") {
  const RainbowPair id{Scenario::Identity, 0.0};
  CHECK(curved_beta(Coordinate::T, id, 0.7, 1.0, 1.0) == beta_flat(0));
  // 1/(r alpha) = 1 at r = 2, alpha = 0.5
  CHECK(curved_beta(Coordinate::Phi, id, 0.0, 2.0, 0.5) == beta_flat(2));
  const RainbowPair c1{Scenario::Case1, 0.5};
  CHECK(curved_beta(Coordinate::R, c1, 0.5, 1.0, 1.0) == beta_flat(1) * (4.0 / 3.0));
  CHECK_THROWS_AS(curved_beta(Coordinate::Phi, id, 0.0, 0.0, 1.0), DomainError);
}

TEST_CASE("coupled system residual: algebraic constructions vanish") {
  const RainbowPair pair{Scenario::Case2, 0.3};
  const double E = 0.9, x = E, r = 1.3, alpha = 0.6, omega = 0.8, M = 0.7, kz = 0.0;
  const int m = 1;
  const double g0 = eval_g0(pair, x), g1 = eval_g1(pair, x);

  SUBCASE("zero spinor") {
    SpinorSample zero{};
    const auto res = coupled_system_residual(zero, E, pair, x, r, alpha, omega, M, m, kz);
    for (double v : res) CHECK(v == 0.0);
  }

  SUBCASE("components built from the defining relations") {
    SpinorSample s;
    const double p1 = 0.42, dp1 = -0.17, ddp1 = 0.05;
    s.phi[0] = p1;
    s.phi[1] = E * g0 / M * p1;
    s.phi[2] = g1 / M * (M * omega * r * p1 + dp1);
    s.phi[3] = -g1 * m / (alpha * M) * p1 / r;
    s.phi[4] = -g1 * kz / M * p1;
    s.dphi1_dr = dp1;
    s.d2phi1_dr2 = ddp1;
    std::array<double, 5> scales{};
    const auto res =
        coupled_system_residual(s, E, pair, x, r, alpha, omega, M, m, kz, &scales);
    CHECK(res[1] == 0.0);  // exact by construction
    CHECK(std::fabs(res[2]) <= 1e-15 * scales[2]);
    CHECK(std::fabs(res[3]) <= 1e-15 * scales[3]);
    CHECK(res[4] == 0.0);
    // the first equation does not vanish for an arbitrary profile
    CHECK(std::fabs(res[0]) > 1e-3 * scales[0]);
  }
}

TEST_CASE("coupled system residual certifies the analytic ground state") {
  // case-1 ground state (n = 0, m = 0) sampled at r = 1/sqrt(M w)
  const ModelParams p{0.8, 0.9, 0.4, 0.7};
  const QuantumNumbers q{0, 0};
  const SpectrumResult e = energy_case1(p, q, Branch::Plus);
  REQUIRE(e.physical);
  const RainbowPair pair{Scenario::Case1, p.epsilon};
  const double x = e.energy_ratio;
  const double g0 = eval_g0(pair, x), g1 = eval_g1(pair, x);
  const double r = 1.0 / std::sqrt(p.mass_ratio * p.omega_ratio);

  SpinorSample s;
  s.phi[0] = phi1(p, q, r);
  s.phi[1] = e.energy_ratio * g0 / p.mass_ratio * s.phi[0];
  s.phi[2] = g1 / p.mass_ratio *
             (p.mass_ratio * p.omega_ratio * r * s.phi[0] + phi1_prime(p, q, r));
  s.phi[3] = 0.0;
  s.phi[4] = 0.0;
  s.dphi1_dr = phi1_prime(p, q, r);
  s.d2phi1_dr2 = phi1_second(p, q, r);

  std::array<double, 5> scales{};
  const auto res = coupled_system_residual(s, e.energy_ratio, pair, x, r, p.alpha,
                                           p.omega_ratio, p.mass_ratio, q.m, 0.0, &scales);
  for (int eq = 0; eq < 5; ++eq)
    CHECK(std::fabs(res[eq]) <= 1e-8 * std::max(scales[eq], 1e-30));
}
