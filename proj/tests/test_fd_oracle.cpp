#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "rainbowdkp/errors.hpp"
#include "rainbowdkp/fd_oracle.hpp"

using namespace rdkp;

TEST_CASE("discretized operator shape") {
  const RadialGrid grid(12.0, 64);
  const DiscretizedOperator op = discretize_radial_operator(1.0, 1.0, grid);
  CHECK(op.diag.size() == 63);
  CHECK(op.offdiag.size() == 62);
  const double inv_h2 = 1.0 / (grid.spacing() * grid.spacing());
  // interior off-diagonals approach -1/h^2 from above in magnitude
  for (size_t i = 0; i < op.offdiag.size(); ++i) {
    CHECK(op.offdiag[i] < 0.0);
    CHECK(std::fabs(op.offdiag[i]) / inv_h2 == doctest::Approx(1.0).epsilon(0.2));
  }
  CHECK(std::fabs(op.offdiag.back()) / inv_h2 == doctest::Approx(1.0).epsilon(1e-4));
}

TEST_CASE("lowest eigenvalues: harmonic levels 2 M w (2n + 1 + |j|)") {
  SUBCASE("|j| = 1, first three levels near {4, 8, 12}") {
    const DiscretizedOperator op =
        discretize_radial_operator(1.0, 1.0, RadialGrid(12.0, 20000));
    const auto eigs = lowest_eigenvalues(op, 3);
    const double expected[] = {4.0, 8.0, 12.0};
    for (int n = 0; n < 3; ++n)
      CHECK(std::fabs(eigs[n] - expected[n]) / expected[n] < 5e-4);
    CHECK(eigs[0] < eigs[1]);
    CHECK(eigs[1] < eigs[2]);
  }
  SUBCASE("|j| = 0 ground level near 2") {
    const DiscretizedOperator op =
        discretize_radial_operator(1.0, 0.0, RadialGrid(12.0, 20000));
    CHECK(std::fabs(lowest_eigenvalues(op, 1)[0] - 2.0) / 2.0 < 5e-4);
  }
  SUBCASE("errors") {
    const DiscretizedOperator op =
        discretize_radial_operator(1.0, 1.0, RadialGrid(12.0, 4096));
    CHECK_THROWS_AS(lowest_eigenvalues(op, 0), RangeError);
    CHECK_THROWS_AS(lowest_eigenvalues(op, 11), RangeError);
    // box far too small for the requested state
    const DiscretizedOperator tiny =
        discretize_radial_operator(1.0, 0.0, RadialGrid(3.0, 512));
    CHECK_THROWS_AS(lowest_eigenvalues(tiny, 8), ResolutionError);
  }
}

TEST_CASE("grid doubling divides the error by about four") {
  const double j = 1.0;
  const double r_max = 12.0;
  double prev_err = 0.0;
  for (int N : {2500, 5000, 10000}) {
    const auto eigs =
        lowest_eigenvalues(discretize_radial_operator(1.0, j, RadialGrid(r_max, N)), 3);
    double err = 0.0;
    for (int n = 0; n < 3; ++n)
      err = std::max(err, std::fabs(eigs[n] - 2.0 * (2 * n + 1 + j)));
    if (prev_err > 0.0) {
      const double ratio = prev_err / err;
      CHECK(ratio > 3.0);
      CHECK(ratio < 5.0);
    }
    prev_err = err;
  }
}

TEST_CASE("certification against the closed-form eigenvalue rule") {
  SUBCASE("deficit-deformed |j| = 2") {
    const CertificationReport report =
        certify_quantization({0.8, 1.0, 0.0, 0.5}, {0, 1}, 5, 20000);
    CHECK(report.pass);
    CHECK(report.levels.size() == 5);
    for (const auto& lvl : report.levels) {
      CHECK(lvl.pass);
      CHECK(lvl.rel_error <= 1e-3);
      CHECK(lvl.kappa_sq_formula ==
            doctest::Approx(2.0 * 0.8 * (2.0 * lvl.n + 3.0)).epsilon(1e-15));
    }
  }
  SUBCASE("|j| = 0") {
    CHECK(certify_quantization({0.8, 1.0, 0.0, 1.0}, {0, 0}, 5, 20000).pass);
  }
  SUBCASE("coarse grid raises a resolution error") {
    CHECK_THROWS_AS(certify_quantization({0.8, 1.0, 0.0, 0.5}, {0, 1}, 5, 128),
                    ResolutionError);
  }
}
