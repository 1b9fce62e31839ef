#ifndef RAINBOWDKP_VERIFY_HPP
#define RAINBOWDKP_VERIFY_HPP

#include <string>
#include <vector>

namespace rdkp {

struct CheckResult {
  std::string name;
  bool pass;
  std::string detail;
};

// Exact matrix-identity checks: the Kemmer relation over all 64 index
// triples (and its failure under the opposite signature), hermiticity of
// eta^0 beta^a, tetrad reconstruction of the metric, reduction of the
// curved matrices to the flat ones.
std::vector<CheckResult> run_algebra_suite();

// Closed forms against the implicit bracketing oracle over the standard
// parameter grid, plus the symmetry/asymmetry/collapse/monotonicity
// invariants of the three energy formulas.
std::vector<CheckResult> run_spectrum_suite();

// Finite-difference certification of the quantization rule
// kappa^2_n = 2 M w (2n + 1 + |j|) for |j| in {0, 1, 2, 5}, with the
// grid-doubling convergence study.
std::vector<CheckResult> run_oracle_suite();

// suite in {"algebra", "spectrum", "oracle", "all"}; RangeError otherwise.
std::vector<CheckResult> run_suite(const std::string& suite);

std::string format_report(const std::vector<CheckResult>& results);

}  // namespace rdkp

#endif
