#ifndef RAINBOWDKP_RAINBOW_HPP
#define RAINBOWDKP_RAINBOW_HPP

#include <string>

namespace rdkp {

// The rainbow-function pairs (g0, g1) that deform the dispersion relation
// E^2 g0^2(x) - p^2 g1^2(x) = M^2, with x = E/E_P.  All energies are
// expressed in Planck units (E_P = 1), so x is numerically the energy.
//
//   Identity :  g0 = g1 = 1                       (no deformation)
//   Case1    :  g0 = g1 = 1/(1 - eps*x)           (pole at x = 1/eps)
//   Case2    :  g0 = 1,  g1 = sqrt(1 - eps*x^2)   (requires eps*x^2 < 1)
//   Case3    :  g0 = (e^{eps*x} - 1)/(eps*x), g1 = 1
enum class Scenario { Identity, Case1, Case2, Case3 };

const char* scenario_name(Scenario s);
Scenario scenario_from_name(const std::string& name);  // throws ConfigError

struct RainbowPair {
  Scenario scenario = Scenario::Identity;
  double epsilon = 0.0;  // dimensionless deformation parameter, >= 0
};

// g0(x).  Case3 at small |eps*x| is evaluated by series so the removable
// singularity at x = 0 gives exactly 1.  Case1 throws DomainError at the
// pole x = 1/eps.
double eval_g0(const RainbowPair& pair, double x);

// g1(x).  Case2 throws DomainError when the radicand 1 - eps*x^2 is <= 0.
double eval_g1(const RainbowPair& pair, double x);

// E^2 g0^2(x) - p^2 g1^2(x) - M^2 at x = E; zero iff (E, p, M) satisfies
// the modified dispersion relation.
double mdr_residual(const RainbowPair& pair, double E, double p, double M);

// Diagonal of the energy-dependent cosmic-string metric,
// diag(-1/g0^2, 1/g1^2, alpha^2 r^2/g1^2, 1/g1^2), signature (-,+,+,+).
struct MetricDiagonal {
  double g_tt;
  double g_rr;
  double g_phiphi;
  double g_zz;
};

MetricDiagonal metric_at(const RainbowPair& pair, double x, double r, double alpha);

// Deficit angle gamma = 2*pi*(1 - alpha) of the conical defect,
// alpha in (0, 1].
double deficit_angle(double alpha);

}  // namespace rdkp

#endif
