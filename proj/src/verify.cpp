#include "rainbowdkp/verify.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <random>
#include <sstream>
#include <vector>

#include "rainbowdkp/dkp_algebra.hpp"
#include "rainbowdkp/errors.hpp"
#include "rainbowdkp/fd_oracle.hpp"
#include "rainbowdkp/spectrum.hpp"

namespace rdkp {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

// The standard spectrum test grid (2880 tuples per scenario).
struct GridPoint {
  ModelParams p;
  QuantumNumbers q;
};

std::vector<GridPoint> standard_grid() {
  static const double epss[] = {0.0, 0.2, 0.5, 1.0};
  static const double alphas[] = {0.2, 0.5, 0.8, 1.0};
  static const double masses[] = {0.1, 0.5, 0.8};
  static const double omegas[] = {0.01, 0.1, 1.0, 5.0};
  std::vector<GridPoint> grid;
  for (double eps : epss)
    for (double a : alphas)
      for (double M : masses)
        for (double w : omegas)
          for (int n = 0; n <= 2; ++n)
            for (int m = -2; m <= 2; ++m)
              grid.push_back(GridPoint{ModelParams{M, w, eps, a}, QuantumNumbers{n, m}});
  return grid;
}

const Scenario kCases[] = {Scenario::Case1, Scenario::Case2, Scenario::Case3};

Matrix5 identity5() {
  Matrix5 id;
  for (int i = 0; i < 5; ++i) id(i, i) = 1.0;
  return id;
}

}  // namespace

std::vector<CheckResult> run_algebra_suite() {
  std::vector<CheckResult> out;

  {
    int zero_triples = 0;
    double max_abs = 0.0;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        for (int c = 0; c < 4; ++c) {
          const Matrix5 res = kemmer_residual(a, b, c, Signature::MostlyMinus);
          if (res.is_zero()) ++zero_triples;
          max_abs = std::max(max_abs, res.max_abs());
        }
    out.push_back({"algebra/kemmer-mostly-minus-64-triples", zero_triples == 64,
                   std::to_string(zero_triples) + "/64 exact zero residuals, max |entry| = " +
                       fmt(max_abs)});
  }
  {
    const Matrix5 res = kemmer_residual(0, 0, 0, Signature::MostlyPlus);
    const Matrix5 expected = beta_flat(0) * 4.0;
    out.push_back({"algebra/kemmer-mostly-plus-000-nonzero",
                   !res.is_zero() && res == expected,
                   "residual = 4 beta^0 (max |entry| = " + fmt(res.max_abs()) + ")"});
  }
  {
    const Matrix5 eta = eta0();
    const Matrix5 rebuilt = beta_flat(0) * beta_flat(0) * 2.0 - identity5();
    bool sym = eta == rebuilt;
    for (int a = 0; a < 4; ++a) {
      const Matrix5 eb = eta * beta_flat(a);
      sym = sym && (eb.transposed() == eb);
    }
    out.push_back({"algebra/eta0-hermiticity", sym,
                   "eta0 = 2 b0 b0 - 1 and (eta0 beta^a)^T = eta0 beta^a exactly"});
  }
  {
    std::mt19937 rng(20240817u);
    std::uniform_real_distribution<double> ueps(0.0, 2.0);
    std::uniform_real_distribution<double> ur(0.1, 10.0);
    std::uniform_real_distribution<double> ualpha(0.05, 1.0);
    std::uniform_real_distribution<double> ux01(0.0, 1.0);
    double worst = 0.0;
    bool ortho = true;
    for (int trial = 0; trial < 100; ++trial) {
      const Scenario s = static_cast<Scenario>(trial % 4);
      const double eps = ueps(rng);
      const double r = ur(rng);
      const double alpha = ualpha(rng);
      double x = ux01(rng);
      if (s == Scenario::Case1 && eps > 0.0) x *= 0.9 / eps;
      else if (s == Scenario::Case2 && eps > 0.0) x *= 0.95 / std::sqrt(eps);
      const RainbowPair pair{s, eps};
      const TetradSet t = tetrads_at(pair, x, r, alpha);
      for (int i = 0; i < 4; ++i)
        if (std::fabs(t.down[i] * t.up[i] - 1.0) > 1e-14) ortho = false;
      const MetricDiagonal g = metric_at(pair, x, r, alpha);
      const double rebuilt[4] = {-t.down[0] * t.down[0], t.down[1] * t.down[1],
                                 t.down[2] * t.down[2], t.down[3] * t.down[3]};
      const double expected[4] = {g.g_tt, g.g_rr, g.g_phiphi, g.g_zz};
      for (int i = 0; i < 4; ++i)
        worst = std::max(worst,
                         std::fabs(rebuilt[i] - expected[i]) / std::fabs(expected[i]));
    }
    out.push_back({"algebra/tetrad-metric-reconstruction", ortho && worst <= 1e-12,
                   "100 random tuples, worst relative deviation " + fmt(worst)});
  }
  {
    const RainbowPair id{Scenario::Identity, 0.0};
    bool pass = true;
    const Coordinate coords[] = {Coordinate::T, Coordinate::R, Coordinate::Phi, Coordinate::Z};
    for (int a = 0; a < 4; ++a)
      pass = pass && (curved_beta(coords[a], id, 0.3, 1.0, 1.0) == beta_flat(a));
    out.push_back({"algebra/curved-beta-flat-reduction", pass,
                   "identity pair at alpha = 1, r = 1 gives the flat matrices exactly"});
  }
  return out;
}

std::vector<CheckResult> run_spectrum_suite() {
  std::vector<CheckResult> out;
  const std::vector<GridPoint> grid = standard_grid();

  {
    // closed forms against the implicit bracketing oracle
    long compared = 0;
    double worst = 0.0;
    for (Scenario s : kCases)
      for (const GridPoint& g : grid)
        for (Branch b : {Branch::Minus, Branch::Plus}) {
          const SpectrumResult closed = energy_closed(s, g.p, g.q, b);
          if (!closed.physical) continue;
          const SpectrumResult implicit = energy_implicit(s, g.p, g.q, b);
          const double dev = std::fabs(closed.energy_ratio - implicit.energy_ratio) /
                             std::max(1.0, std::fabs(closed.energy_ratio));
          worst = std::max(worst, dev);
          ++compared;
        }
    out.push_back({"spectrum/oracle-equivalence-grid", worst <= 1e-10 && compared >= 1000,
                   std::to_string(compared) + " physical branches compared, worst relative "
                   "deviation " + fmt(worst)});
  }
  {
    double worst = 0.0;
    for (Scenario s : kCases)
      for (const GridPoint& g : grid)
        for (Branch b : {Branch::Minus, Branch::Plus}) {
          const SpectrumResult closed = energy_closed(s, g.p, g.q, b);
          if (!closed.physical) continue;
          const double target = kappa_sq_target(g.p, g.q);
          const double dev = std::fabs(kappa_sq_at(s, g.p, closed.energy_ratio) - target) /
                             std::max(1.0, std::fabs(target));
          worst = std::max(worst, dev);
        }
    out.push_back({"spectrum/kappa-self-consistency", worst <= 1e-10,
                   "worst relative deviation " + fmt(worst)});
  }
  {
    bool exact = true;
    for (const GridPoint& g : grid) {
      const SpectrumResult plus = energy_case2(g.p, g.q, Branch::Plus);
      const SpectrumResult minus = energy_case2(g.p, g.q, Branch::Minus);
      if (plus.energy_ratio != -minus.energy_ratio) exact = false;
    }
    out.push_back({"spectrum/case2-exact-symmetry", exact, "E+ = -E- bitwise on the grid"});
  }
  {
    double worst = 0.0;
    for (const GridPoint& g : grid) {
      const SpectrumResult plus = energy_case1(g.p, g.q, Branch::Plus);
      const SpectrumResult minus = energy_case1(g.p, g.q, Branch::Minus);
      if (!plus.physical || !minus.physical) continue;
      const double M = g.p.mass_ratio, eps = g.p.epsilon;
      const double expected = -2.0 * eps * M * M / (1.0 - eps * eps * M * M);
      worst = std::max(worst, std::fabs(plus.energy_ratio + minus.energy_ratio - expected) /
                                  std::max(1.0, std::fabs(expected)));
    }
    out.push_back({"spectrum/case1-vieta-sum", worst <= 1e-12,
                   "E+ + E- vs -2 eps M^2/(1 - eps^2 M^2), worst deviation " + fmt(worst)});
  }
  {
    double worst = 0.0;
    for (const GridPoint& g : grid) {
      if (g.p.epsilon != 0.0) continue;
      const double M = g.p.mass_ratio;
      const double K = 2.0 * M * g.p.omega_ratio * (2.0 * g.q.n + abs_j(g.q, g.p.alpha));
      const double S = std::sqrt(M * M + K);
      for (Branch b : {Branch::Minus, Branch::Plus}) {
        const double expected = (b == Branch::Plus) ? S : -S;
        for (Scenario s : kCases) {
          const SpectrumResult res = energy_closed(s, g.p, g.q, b);
          worst = std::max(worst, std::fabs(res.energy_ratio - expected));
        }
      }
    }
    out.push_back({"spectrum/epsilon-zero-collapse", worst <= 1e-12,
                   "all cases vs -+sqrt(M^2 + 2Mw(2n + |m|/alpha)), worst deviation " +
                       fmt(worst)});
  }
  {
    // |E| nondecreasing in n, |m| and omega
    bool pass = true;
    std::string detail;
    static const double epss[] = {0.0, 0.2, 0.5, 1.0};
    static const double alphas[] = {0.2, 0.5, 0.8, 1.0};
    static const double masses[] = {0.1, 0.5, 0.8};
    static const double omegas[] = {0.01, 0.1, 1.0, 5.0};
    const auto abs_energy = [](Scenario s, const ModelParams& p, const QuantumNumbers& q,
                               Branch b) {
      const SpectrumResult res = energy_closed(s, p, q, b);
      return res.physical ? std::fabs(res.energy_ratio)
                          : std::numeric_limits<double>::quiet_NaN();
    };
    for (Scenario s : kCases)
      for (Branch b : {Branch::Minus, Branch::Plus})
        for (double eps : epss)
          for (double a : alphas)
            for (double M : masses)
              for (double w : omegas)
                for (int m = 0; m <= 2; ++m)
                  for (int n = 0; n <= 2; ++n) {
                    const ModelParams p{M, w, eps, a};
                    const double here = abs_energy(s, p, QuantumNumbers{n, m}, b);
                    if (std::isnan(here)) continue;
                    const double up_n = abs_energy(s, p, QuantumNumbers{n + 1, m}, b);
                    const double up_m = abs_energy(s, p, QuantumNumbers{n, m + 1}, b);
                    const ModelParams pw{M, w * 1.5, eps, a};
                    const double up_w = abs_energy(s, pw, QuantumNumbers{n, m}, b);
                    if ((!std::isnan(up_n) && up_n < here - 1e-12) ||
                        (!std::isnan(up_m) && up_m < here - 1e-12) ||
                        (!std::isnan(up_w) && up_w < here - 1e-12)) {
                      pass = false;
                      detail = std::string("|E| decreased (") + scenario_name(s) + ", M=" +
                               fmt(M) + ", w=" + fmt(w) + ", eps=" + fmt(eps) + ")";
                    }
                  }
    out.push_back({"spectrum/abs-energy-monotonicity", pass, detail});
  }
  return out;
}

std::vector<CheckResult> run_oracle_suite() {
  std::vector<CheckResult> out;
  const double js[] = {0.0, 1.0, 2.0, 5.0};
  const int grids[] = {2500, 5000, 10000, 20000};
  const double mw = 1.0;
  const int levels = 5;

  for (double j : js) {
    const double r_max = 6.0 * std::sqrt((2.0 * (levels - 1) + 1.0 + j) / mw);
    std::vector<double> max_err;
    for (int N : grids) {
      const auto eigs =
          lowest_eigenvalues(discretize_radial_operator(mw, j, RadialGrid(r_max, N)), levels);
      double worst = 0.0;
      for (int n = 0; n < levels; ++n) {
        const double exact = 2.0 * mw * (2.0 * n + 1.0 + j);
        worst = std::max(worst, std::fabs(eigs[n] - exact) / exact);
      }
      max_err.push_back(worst);
    }
    const bool accurate = max_err.back() <= 1e-3;
    bool second_order = true;
    std::string orders;
    for (size_t i = 0; i + 1 < max_err.size(); ++i) {
      const double order = std::log2(max_err[i] / max_err[i + 1]);
      if (order < 1.5 || order > 2.5) second_order = false;
      if (!orders.empty()) orders += ", ";
      orders += fmt(order);
    }
    out.push_back({"oracle/quantization-j" + fmt(j), accurate && second_order,
                   "max relative error " + fmt(max_err.back()) + " at N=20000; observed "
                   "convergence orders [" + orders + "]"});
  }
  {
    // level spacing 4 M w
    const auto eigs = lowest_eigenvalues(
        discretize_radial_operator(mw, 1.0, RadialGrid(6.0 * std::sqrt(10.0), 20000)), levels);
    double worst = 0.0;
    for (int n = 0; n + 1 < levels; ++n)
      worst = std::max(worst, std::fabs(eigs[n + 1] - eigs[n] - 4.0 * mw) / (4.0 * mw));
    out.push_back({"oracle/level-spacing-4Mw", worst <= 1e-3,
                   "worst relative deviation " + fmt(worst)});
  }
  return out;
}

std::vector<CheckResult> run_suite(const std::string& suite) {
  if (suite == "algebra") return run_algebra_suite();
  if (suite == "spectrum") return run_spectrum_suite();
  if (suite == "oracle") return run_oracle_suite();
  if (suite == "all") {
    std::vector<CheckResult> all = run_algebra_suite();
    for (auto& c : run_spectrum_suite()) all.push_back(std::move(c));
    for (auto& c : run_oracle_suite()) all.push_back(std::move(c));
    return all;
  }
  throw RangeError("run_suite: unknown suite '" + suite +
                   "' (expected algebra|spectrum|oracle|all)");
}

std::string format_report(const std::vector<CheckResult>& results) {
  std::ostringstream os;
  int failed = 0;
  for (const auto& r : results) {
    os << (r.pass ? "[PASS] " : "[FAIL] ") << r.name;
    if (!r.detail.empty()) os << "  (" << r.detail << ")";
    os << "\n";
    if (!r.pass) ++failed;
  }
  os << results.size() - failed << " passed, " << failed << " failed\n";
  return os.str();
}

}  // namespace rdkp
