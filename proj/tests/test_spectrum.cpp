#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "rainbowdkp/errors.hpp"
#include "rainbowdkp/spectrum.hpp"

using namespace rdkp;

TEST_CASE("kappa_sq_target") {
  CHECK(kappa_sq_target({1.0, 0.5, 0.0, 1.0}, {0, 0}) == 1.0);
  CHECK(kappa_sq_target({0.8, 1.0, 0.0, 0.5}, {1, 1}) == doctest::Approx(8.0).epsilon(1e-15));
  CHECK(kappa_sq_target({0.8, 1.0, 0.0, 1.0}, {0, -2}) ==
        doctest::Approx(4.8).epsilon(1e-15));
  CHECK_THROWS_AS(kappa_sq_target({-1.0, 1.0, 0.0, 1.0}, {0, 0}), RangeError);
  CHECK_THROWS_AS(kappa_sq_target({1.0, 1.0, 0.0, 1.0}, {-1, 0}), RangeError);
}

TEST_CASE("case 1 energies") {
  SUBCASE("rainbow-free rest energy") {
    const ModelParams p{1.0, 0.5, 0.0, 1.0};
    CHECK(energy_case1(p, {0, 0}, Branch::Minus).energy_ratio == -1.0);
    CHECK(energy_case1(p, {0, 0}, Branch::Plus).energy_ratio == 1.0);
  }
  SUBCASE("deformed branches, frozen from the implicit oracle") {
    const ModelParams p{0.8, 1.0, 0.5, 0.5};
    const QuantumNumbers q{1, 1};
    CHECK(energy_case1(p, q, Branch::Plus).energy_ratio ==
          doctest::Approx(2.5389923270011222).epsilon(1e-14));
    CHECK(energy_case1(p, q, Branch::Minus).energy_ratio ==
          doctest::Approx(-3.3008970889058841).epsilon(1e-14));
    CHECK(energy_implicit(Scenario::Case1, p, q, Branch::Plus).energy_ratio ==
          doctest::Approx(2.5389923270011222).epsilon(1e-12));
    CHECK(energy_implicit(Scenario::Case1, p, q, Branch::Minus).energy_ratio ==
          doctest::Approx(-3.3008970889058841).epsilon(1e-12));
  }
  SUBCASE("branch sum obeys the quadratic's Vieta relation") {
    for (double eps : {0.0, 0.3, 0.9})
      for (double M : {0.2, 0.8})
        for (double w : {0.05, 2.0}) {
          const ModelParams p{M, w, eps, 0.7};
          const QuantumNumbers q{2, -1};
          const double sum = energy_case1(p, q, Branch::Plus).energy_ratio +
                             energy_case1(p, q, Branch::Minus).energy_ratio;
          const double expected = -2.0 * eps * M * M / (1.0 - eps * eps * M * M);
          CHECK(sum == doctest::Approx(expected).epsilon(1e-12));
        }
  }
  SUBCASE("degenerate denominator") {
    CHECK_THROWS_AS(energy_case1({0.5, 1.0, 2.0, 1.0}, {0, 0}, Branch::Plus), DomainError);
  }
  SUBCASE("negative radicand is unphysical, not an error") {
    // eps M > 1 makes the radicand negative for large omega
    const ModelParams p{0.9, 50.0, 2.0, 1.0};
    const SpectrumResult res = energy_case1(p, {1, 1}, Branch::Plus);
    CHECK_FALSE(res.physical);
    CHECK(std::isnan(res.energy_ratio));
  }
}

TEST_CASE("case 2 energies") {
  SUBCASE("undeformed limit") {
    const ModelParams p{1.0, 0.5, 0.0, 1.0};
    CHECK(energy_case2(p, {0, 0}, Branch::Minus).energy_ratio == -1.0);
    CHECK(energy_case2(p, {0, 0}, Branch::Plus).energy_ratio == 1.0);
  }
  SUBCASE("deformed value, frozen from the implicit oracle") {
    const ModelParams p{0.8, 1.0, 0.2, 0.5};
    const QuantumNumbers q{1, 1};
    // sqrt(7.04 / 2.28)
    CHECK(energy_case2(p, q, Branch::Plus).energy_ratio ==
          doctest::Approx(1.7571907404279178).epsilon(1e-14));
    CHECK(energy_implicit(Scenario::Case2, p, q, Branch::Minus).energy_ratio ==
          doctest::Approx(-1.7571907404279178).epsilon(1e-12));
  }
  SUBCASE("exact symmetry") {
    for (double eps : {0.0, 0.2, 1.0}) {
      const ModelParams p{0.8, 2.5, eps, 0.4};
      const SpectrumResult plus = energy_case2(p, {2, -2}, Branch::Plus);
      const SpectrumResult minus = energy_case2(p, {2, -2}, Branch::Minus);
      CHECK(plus.energy_ratio == -minus.energy_ratio);
    }
  }
  SUBCASE("saturation at 1/sqrt(eps) for large omega") {
    for (double eps : {0.2, 0.5, 1.0}) {
      const ModelParams p{0.8, 1e6, eps, 0.5};
      const double limit = 1.0 / std::sqrt(eps);
      const double E = energy_case2(p, {1, 1}, Branch::Plus).energy_ratio;
      CHECK(std::fabs(E - limit) / limit <= 1e-3);
    }
  }
}

TEST_CASE("case 3 energies") {
  SUBCASE("eps = 0 analytic limit") {
    const ModelParams p{1.0, 0.5, 0.0, 1.0};
    CHECK(energy_case3(p, {0, 0}, Branch::Minus).energy_ratio == -1.0);
    CHECK(energy_case3(p, {0, 0}, Branch::Plus).energy_ratio == 1.0);
  }
  SUBCASE("deformed branches, frozen from the implicit oracle") {
    const ModelParams p{0.8, 0.1, 0.5, 0.5};
    const QuantumNumbers q{1, 1};
    CHECK(energy_case3(p, q, Branch::Plus).energy_ratio ==
          doctest::Approx(0.89664739864857941).epsilon(1e-14));
    CHECK(energy_case3(p, q, Branch::Minus).energy_ratio ==
          doctest::Approx(-1.6679723602725488).epsilon(1e-14));
    CHECK(energy_implicit(Scenario::Case3, p, q, Branch::Plus).energy_ratio ==
          doctest::Approx(0.89664739864857941).epsilon(1e-12));
    CHECK(energy_implicit(Scenario::Case3, p, q, Branch::Minus).energy_ratio ==
          doctest::Approx(-1.6679723602725488).epsilon(1e-12));
  }
  SUBCASE("minus branch beyond the cutoff is unphysical") {
    const ModelParams p{0.8, 0.6, 0.5, 0.5};  // omega above omega_c = 0.525
    const SpectrumResult res = energy_case3(p, {1, 1}, Branch::Minus);
    CHECK_FALSE(res.physical);
    CHECK(std::isnan(res.energy_ratio));
    CHECK(energy_case3(p, {1, 1}, Branch::Plus).physical);
    CHECK_THROWS_AS(energy_implicit(Scenario::Case3, p, {1, 1}, Branch::Minus),
                    NoSignChangeError);
  }
}

TEST_CASE("implicit oracle details") {
  SUBCASE("identity scenario") {
    const ModelParams p{1.0, 0.5, 0.0, 1.0};
    CHECK(energy_implicit(Scenario::Identity, p, {0, 0}, Branch::Plus).energy_ratio ==
          doctest::Approx(1.0).epsilon(1e-13));
    CHECK(energy_implicit(Scenario::Identity, p, {0, 0}, Branch::Minus).energy_ratio ==
          doctest::Approx(-1.0).epsilon(1e-13));
  }
  SUBCASE("kappa_sq of the root matches the target") {
    const ModelParams p{0.8, 1.0, 0.2, 0.5};
    const QuantumNumbers q{1, 1};
    const SpectrumResult res = energy_implicit(Scenario::Case2, p, q, Branch::Plus);
    CHECK(res.kappa_sq == doctest::Approx(kappa_sq_target(p, q)).epsilon(1e-10));
  }
  SUBCASE("root beyond the case-1 pole is still bracketed") {
    // quantized energy exceeds 1/eps; the bracket splits at the pole
    const ModelParams p{0.1, 5.0, 1.0, 0.2};
    const QuantumNumbers q{2, 2};
    const SpectrumResult closed = energy_case1(p, q, Branch::Plus);
    REQUIRE(closed.physical);
    CHECK(closed.energy_ratio > 1.0 / p.epsilon);
    const SpectrumResult oracle = energy_implicit(Scenario::Case1, p, q, Branch::Plus);
    CHECK(oracle.energy_ratio == doctest::Approx(closed.energy_ratio).epsilon(1e-12));
  }
  SUBCASE("root exactly on the case-1 pole is found") {
    // (eps, alpha, M, w, n, m) tuned so E+ = 1/eps exactly
    const ModelParams p{0.5, 5.0, 0.2, 0.2};
    const QuantumNumbers q{0, -1};
    const SpectrumResult closed = energy_case1(p, q, Branch::Plus);
    REQUIRE(closed.physical);
    CHECK(closed.energy_ratio == doctest::Approx(5.0).epsilon(1e-14));
    const SpectrumResult oracle = energy_implicit(Scenario::Case1, p, q, Branch::Plus);
    CHECK(std::fabs(oracle.energy_ratio - closed.energy_ratio) <=
          1e-10 * std::fabs(closed.energy_ratio));
  }
  SUBCASE("caller-supplied bracket") {
    const ModelParams p{1.0, 0.5, 0.0, 1.0};
    const SpectrumResult res =
        energy_implicit(Scenario::Identity, p, {0, 0}, Branch::Plus, {{0.5, 2.0}});
    CHECK(res.energy_ratio == doctest::Approx(1.0).epsilon(1e-13));
    CHECK_THROWS_AS(
        energy_implicit(Scenario::Identity, p, {0, 0}, Branch::Plus, {{2.0, 3.0}}),
        NoSignChangeError);
    CHECK_THROWS_AS(
        energy_implicit(Scenario::Identity, p, {0, 0}, Branch::Plus, {{3.0, 2.0}}),
        RangeError);
  }
}

TEST_CASE("case-3 cutoff frequency") {
  SUBCASE("closed-form values") {
    CHECK(cutoff_omega_case3({0.8, 1.0, 0.5, 0.5}, {1, 1}).omega_c ==
          doctest::Approx(0.525).epsilon(1e-15));
    CHECK(cutoff_omega_case3({0.8, 1.0, 0.5, 1.0}, {1, 1}).omega_c ==
          doctest::Approx(0.7).epsilon(1e-15));
  }
  SUBCASE("monotone increasing in alpha") {
    const double w03 = cutoff_omega_case3({0.8, 1.0, 0.5, 0.3}, {1, 1}).omega_c;
    const double w09 = cutoff_omega_case3({0.8, 1.0, 0.5, 0.9}, {1, 1}).omega_c;
    CHECK(w09 > w03);
  }
  SUBCASE("physicality flips exactly at the cutoff") {
    const ModelParams base{0.8, 1.0, 0.5, 0.5};
    const double wc = cutoff_omega_case3(base, {1, 1}).omega_c;
    ModelParams below = base, above = base;
    below.omega_ratio = wc * (1.0 - 1e-12);
    above.omega_ratio = wc * (1.0 + 1e-12);
    CHECK(energy_case3(below, {1, 1}, Branch::Minus).physical);
    CHECK_FALSE(energy_case3(above, {1, 1}, Branch::Minus).physical);
  }
  SUBCASE("flags and errors") {
    CHECK_THROWS_AS(cutoff_omega_case3({0.8, 1.0, 0.0, 0.5}, {1, 1}), RangeError);
    CHECK_THROWS_AS(cutoff_omega_case3({0.8, 1.0, 0.5, 0.5}, {0, 0}), DomainError);
    const CutoffResult never = cutoff_omega_case3({0.9, 1.0, 2.0, 0.5}, {1, 1});
    CHECK(never.always_unphysical);
    CHECK(never.omega_c == 0.0);
  }
}

TEST_CASE("case-1 gap width") {
  CHECK(gap_width_case1({1.0, 0.5, 0.0, 1.0}, {0, 0}) == doctest::Approx(2.0).epsilon(1e-15));
  // frozen difference of the oracle-checked branches
  CHECK(gap_width_case1({0.8, 1.0, 0.5, 0.5}, {1, 1}) ==
        doctest::Approx(5.8398894159070063).epsilon(1e-14));
  SUBCASE("gap grows as alpha shrinks (m != 0)") {
    const double g09 = gap_width_case1({0.8, 1.0, 0.5, 0.9}, {1, 1});
    const double g03 = gap_width_case1({0.8, 1.0, 0.5, 0.3}, {1, 1});
    CHECK(g03 > g09);
  }
  SUBCASE("matches the branch difference") {
    const ModelParams p{0.5, 2.0, 0.8, 0.7};
    const QuantumNumbers q{2, -1};
    const double diff = energy_case1(p, q, Branch::Plus).energy_ratio -
                        energy_case1(p, q, Branch::Minus).energy_ratio;
    CHECK(gap_width_case1(p, q) == doctest::Approx(diff).epsilon(1e-13));
  }
  CHECK_THROWS_AS(gap_width_case1({0.9, 50.0, 2.0, 1.0}, {1, 1}), UnphysicalError);
}

TEST_CASE("branch continuity in epsilon") {
  // Minus tends to the negative undeformed root as eps -> 0
  const QuantumNumbers q{1, -1};
  for (Scenario s : {Scenario::Case1, Scenario::Case2, Scenario::Case3}) {
    double prev = energy_closed(s, {0.8, 1.0, 0.0, 0.5}, q, Branch::Minus).energy_ratio;
    CHECK(prev < 0.0);
    for (double eps : {1e-3, 1e-2}) {
      const double here =
          energy_closed(s, {0.8, 1.0, eps, 0.5}, q, Branch::Minus).energy_ratio;
      CHECK(here < 0.0);
      CHECK(std::fabs(here - prev) < 0.1);
      prev = here;
    }
  }
}

TEST_CASE("perturbed closed form is rejected by the oracle") {
  // mutation sanity: a 1e-6 coefficient error must break the 1e-10 match
  const ModelParams p{0.8, 1.0, 0.2, 0.5};
  const QuantumNumbers q{1, 1};
  const double tainted = energy_case2(p, q, Branch::Plus).energy_ratio * (1.0 + 1e-6);
  const double oracle = energy_implicit(Scenario::Case2, p, q, Branch::Plus).energy_ratio;
  CHECK(std::fabs(tainted - oracle) > 1e-10 * std::max(1.0, std::fabs(oracle)));
}
