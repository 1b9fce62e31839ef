#ifndef RAINBOWDKP_SPECTRUM_HPP
#define RAINBOWDKP_SPECTRUM_HPP

#include <optional>
#include <utility>

#include "rainbowdkp/rainbow.hpp"

namespace rdkp {

// Dimensionless physical inputs, all energies divided by E_P.
struct ModelParams {
  double mass_ratio = 1.0;   // M/E_P > 0
  double omega_ratio = 1.0;  // omega/E_P > 0
  double epsilon = 0.0;      // >= 0
  double alpha = 1.0;        // (0, 1]
};

void validate(const ModelParams& p);  // throws RangeError

// Radial and magnetic quantum numbers; the axial wave number is fixed to 0.
struct QuantumNumbers {
  int n = 0;  // >= 0
  int m = 0;
};

void validate(const QuantumNumbers& q);

// |j| = |m| / alpha
double abs_j(const QuantumNumbers& q, double alpha);

enum class Branch { Plus, Minus };

const char* branch_name(Branch b);

// One bound-state energy.  kappa_sq holds the scenario's effective
// eigenvalue combination evaluated at this energy; for a physical state it
// equals kappa_sq_target.  Unphysical results carry NaN energy.
struct SpectrumResult {
  double energy_ratio = 0.0;  // E/E_P
  Branch branch = Branch::Plus;
  bool physical = false;
  double kappa_sq = 0.0;
};

// Bound-state eigenvalue of the radial operator: 2 M w (2n + 1 + |j|),
// in Planck units.  Every scenario's kappa-type parameter equals this at a
// bound state.
double kappa_sq_target(const ModelParams& p, const QuantumNumbers& q);

// Scenario kappa^2 as a function of a trial energy E (self-consistent
// x = E/E_P), evaluated through the rainbow functions:
//   E^2 g0^2/g1^2 - M^2/g1^2 + 2 M w.
// Domain errors of g0/g1 propagate (case-1 pole, case-2 radicand).  This
// is the route the implicit oracle solves on.
double kappa_sq_of_energy(Scenario s, const ModelParams& p, double E);

// The same quantity through the per-case reduced expressions (polynomial
// for case 1, rational for case 2, exponential for case 3), which extend
// continuously through the case-1 rainbow pole.  Used for result fields
// and self-consistency checks.
double kappa_sq_at(Scenario s, const ModelParams& p, double E);

// Closed-form energies.
//
// Branch labeling follows the sign in front of the square root: Minus is
// the branch that tends to -sqrt(M^2 + 2Mw(2n + |j|)) as epsilon -> 0,
// Plus the one tending to +.
SpectrumResult energy_case1(const ModelParams& p, const QuantumNumbers& q, Branch branch);
SpectrumResult energy_case2(const ModelParams& p, const QuantumNumbers& q, Branch branch);
SpectrumResult energy_case3(const ModelParams& p, const QuantumNumbers& q, Branch branch);

// Dispatch on scenario; Identity uses the undeformed closed form.
SpectrumResult energy_closed(Scenario s, const ModelParams& p, const QuantumNumbers& q,
                             Branch branch);

// Independent oracle: locates the root of
//   F(E) = kappa_sq_of_energy(E) - kappa_sq_target
// with a scanned bracket and Brent refinement to |dE| <= 1e-13 max(1,|E|).
// The default bracket is [0, L] (Plus) or [-L, 0] (Minus) with
// L = 20 sqrt(M^2 + kappa_sq_target), split at the case-1 pole and clipped
// to the case-2 domain.  Throws NoSignChangeError when the branch has no
// root in the bracket.
SpectrumResult energy_implicit(Scenario s, const ModelParams& p, const QuantumNumbers& q,
                               Branch branch,
                               std::optional<std::pair<double, double>> bracket = std::nullopt);

// Case-3 cutoff frequency: the Minus branch is physical strictly below
// omega_c = (1/eps^2 - M^2) / (2 M (|m|/alpha + 2n)).  When eps*M >= 1 the
// Minus branch is unphysical for every omega and the result is flagged.
struct CutoffResult {
  double omega_c = 0.0;
  bool always_unphysical = false;
};

CutoffResult cutoff_omega_case3(const ModelParams& p, const QuantumNumbers& q);

// Case-1 forbidden-gap width E_plus - E_minus = 2 sqrt(radicand)/(1 - eps^2 M^2).
double gap_width_case1(const ModelParams& p, const QuantumNumbers& q);

}  // namespace rdkp

#endif
