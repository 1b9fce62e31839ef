#include "rainbowdkp/fd_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rainbowdkp/errors.hpp"

namespace rdkp {

namespace {

// Number of eigenvalues strictly below lambda (Sturm sequence via the
// LDL^T pivot recurrence).
int sturm_count(const DiscretizedOperator& op, double lambda) {
  int count = 0;
  double d = 1.0;
  const int dim = static_cast<int>(op.diag.size());
  for (int i = 0; i < dim; ++i) {
    const double off = (i > 0) ? op.offdiag[i - 1] : 0.0;
    d = (op.diag[i] - lambda) - (i > 0 ? off * off / d : 0.0);
    if (d == 0.0) d = -1e-300;
    if (d < 0.0) ++count;
  }
  return count;
}

double eigenvalue_k(const DiscretizedOperator& op, int k, double lo, double hi) {
  constexpr double kAbsTol = 1e-10;
  for (int iter = 0; iter < 300 && hi - lo > kAbsTol; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (sturm_count(op, mid) > k)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

DiscretizedOperator discretize_radial_operator(double mass_omega, double abs_j,
                                               const RadialGrid& grid) {
  if (!(mass_omega > 0.0)) throw RangeError("discretize_radial_operator: M w must be > 0");
  if (!(abs_j >= 0.0)) throw RangeError("discretize_radial_operator: |j| must be >= 0");
  const int N = grid.points;
  const double h = grid.spacing();
  const double inv_h2 = 1.0 / (h * h);

  DiscretizedOperator op{grid, mass_omega, abs_j, {}, {}};
  op.diag.resize(N - 1);
  op.offdiag.resize(N - 2);
  for (int i = 1; i < N; ++i) {
    const double r = grid.node(i);
    double flux = 2.0 * inv_h2;  // (r_{i+1/2} + r_{i-1/2}) / (r_i h^2)
    if (i == 1 && abs_j == 0.0) flux = 1.5 * inv_h2;  // zero flux into the regular origin
    op.diag[i - 1] = flux + (abs_j * abs_j) / (r * r) + mass_omega * mass_omega * r * r;
  }
  for (int i = 1; i < N - 1; ++i) {
    const double ri = grid.node(i);
    const double rip = grid.node(i + 1);
    op.offdiag[i - 1] = -(ri + 0.5 * h) / (std::sqrt(ri * rip) * h * h);
  }
  return op;
}

std::vector<double> lowest_eigenvalues(const DiscretizedOperator& op, int k) {
  if (k < 1 || k > 10) throw RangeError("lowest_eigenvalues: k must be in 1..10");
  if (static_cast<int>(op.diag.size()) < k)
    throw RangeError("lowest_eigenvalues: matrix smaller than k");

  // Gershgorin bounds
  double off_max = 0.0;
  for (double b : op.offdiag) off_max = std::max(off_max, std::fabs(b));
  double lo = op.diag[0], hi = op.diag[0];
  for (double a : op.diag) {
    lo = std::min(lo, a);
    hi = std::max(hi, a);
  }
  lo -= 2.0 * off_max;
  hi += 2.0 * off_max;

  std::vector<double> eigs(k);
  for (int i = 0; i < k; ++i) eigs[i] = eigenvalue_k(op, i, lo, hi);

  // The highest requested state must fit well inside the box.
  const double r_turn = std::sqrt(std::max(eigs.back(), 0.0)) / op.mass_omega;
  if (r_turn >= 0.5 * op.grid.r_max)
    throw ResolutionError("lowest_eigenvalues: turning point of state " + std::to_string(k - 1) +
                          " at r = " + std::to_string(r_turn) + " exceeds r_max/2");
  return eigs;
}

CertificationReport certify_quantization(const ModelParams& p, const QuantumNumbers& q,
                                         int levels, int grid_points, double tolerance) {
  validate(p);
  validate(q);
  if (levels < 1 || levels > 10) throw RangeError("certify_quantization: levels must be in 1..10");
  const double j = abs_j(q, p.alpha);
  const double mw = p.mass_ratio * p.omega_ratio;
  const double r_max = 6.0 * std::sqrt((2.0 * (levels - 1) + 1.0 + j) / mw);

  const auto coarse = lowest_eigenvalues(
      discretize_radial_operator(mw, j, RadialGrid(r_max, grid_points / 2)), levels);
  const auto fine = lowest_eigenvalues(
      discretize_radial_operator(mw, j, RadialGrid(r_max, grid_points)), levels);

  CertificationReport report;
  report.tolerance = tolerance;
  report.pass = true;
  for (int n = 0; n < levels; ++n) {
    const double formula = 2.0 * mw * (2.0 * n + 1.0 + j);
    // Richardson estimate of the remaining discretization error (O(h^2))
    const double est = std::fabs(fine[n] - coarse[n]) / 3.0;
    if (est / formula > 0.5 * tolerance)
      throw ResolutionError("certify_quantization: estimated discretization error " +
                            std::to_string(est / formula) + " (relative) for level " +
                            std::to_string(n) + " exceeds half the tolerance; refine the grid");
    CertificationLevel lvl;
    lvl.n = n;
    lvl.kappa_sq_fd = fine[n];
    lvl.kappa_sq_formula = formula;
    lvl.rel_error = std::fabs(fine[n] - formula) / formula;
    lvl.pass = lvl.rel_error <= tolerance;
    report.pass = report.pass && lvl.pass;
    report.levels.push_back(lvl);
  }
  return report;
}

}  // namespace rdkp
