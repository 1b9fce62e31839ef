#include "rainbowdkp/rainbow.hpp"

#include <cmath>

#include "rainbowdkp/errors.hpp"

namespace rdkp {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_epsilon(double epsilon) {
  if (!(epsilon >= 0.0))
    throw RangeError("rainbow: epsilon must be >= 0, got " + std::to_string(epsilon));
}

// (e^u - 1)/u with the removable singularity at u = 0 handled by series.
double expm1_over(double u) {
  if (std::fabs(u) < 1e-4) {
    // 1 + u/2 + u^2/6 + u^3/24 + u^4/120; next term ~ u^5/720 < 1e-23
    return 1.0 + u * (0.5 + u * (1.0 / 6.0 + u * (1.0 / 24.0 + u / 120.0)));
  }
  return std::expm1(u) / u;
}

}  // namespace

const char* scenario_name(Scenario s) {
  switch (s) {
    case Scenario::Identity: return "identity";
    case Scenario::Case1: return "case1";
    case Scenario::Case2: return "case2";
    case Scenario::Case3: return "case3";
  }
  return "?";
}

Scenario scenario_from_name(const std::string& name) {
  if (name == "identity") return Scenario::Identity;
  if (name == "case1" || name == "1") return Scenario::Case1;
  if (name == "case2" || name == "2") return Scenario::Case2;
  if (name == "case3" || name == "3") return Scenario::Case3;
  throw ConfigError("unknown scenario '" + name + "' (expected identity|case1|case2|case3)");
}

double eval_g0(const RainbowPair& pair, double x) {
  check_epsilon(pair.epsilon);
  switch (pair.scenario) {
    case Scenario::Identity:
      return 1.0;
    case Scenario::Case1: {
      const double denom = 1.0 - pair.epsilon * x;
      if (denom == 0.0)
        throw DomainError("rainbow case1: pole at x = 1/epsilon (x = " + std::to_string(x) + ")");
      return 1.0 / denom;
    }
    case Scenario::Case2:
      return 1.0;
    case Scenario::Case3:
      return expm1_over(pair.epsilon * x);
  }
  throw RangeError("rainbow: bad scenario");
}

double eval_g1(const RainbowPair& pair, double x) {
  check_epsilon(pair.epsilon);
  switch (pair.scenario) {
    case Scenario::Identity:
      return 1.0;
    case Scenario::Case1: {
      const double denom = 1.0 - pair.epsilon * x;
      if (denom == 0.0)
        throw DomainError("rainbow case1: pole at x = 1/epsilon (x = " + std::to_string(x) + ")");
      return 1.0 / denom;
    }
    case Scenario::Case2: {
      const double radicand = 1.0 - pair.epsilon * x * x;
      if (radicand <= 0.0)
        throw DomainError("rainbow case2: g1 radicand 1 - eps*x^2 <= 0 at x = " +
                          std::to_string(x));
      return std::sqrt(radicand);
    }
    case Scenario::Case3:
      return 1.0;
  }
  throw RangeError("rainbow: bad scenario");
}

double mdr_residual(const RainbowPair& pair, double E, double p, double M) {
  const double x = E;  // E_P = 1
  const double g0 = eval_g0(pair, x);
  const double g1 = eval_g1(pair, x);
  return E * E * g0 * g0 - p * p * g1 * g1 - M * M;
}

MetricDiagonal metric_at(const RainbowPair& pair, double x, double r, double alpha) {
  if (!(r > 0.0)) throw RangeError("metric_at: r must be > 0");
  if (!(alpha > 0.0 && alpha <= 1.0)) throw RangeError("metric_at: alpha must be in (0,1]");
  const double g0 = eval_g0(pair, x);
  const double g1 = eval_g1(pair, x);
  const double inv_g1sq = 1.0 / (g1 * g1);
  return MetricDiagonal{-1.0 / (g0 * g0), inv_g1sq, alpha * alpha * r * r * inv_g1sq, inv_g1sq};
}

double deficit_angle(double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw RangeError("deficit_angle: alpha must be in (0,1], got " + std::to_string(alpha));
  return 2.0 * kPi * (1.0 - alpha);
}

}  // namespace rdkp
