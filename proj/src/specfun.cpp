#include "rainbowdkp/specfun.hpp"

#include <cmath>
#include <string>

#include "rainbowdkp/errors.hpp"

namespace rdkp {

namespace {

constexpr double kSeriesTol = 1e-16;
constexpr int kSeriesCap = 100000;

bool is_nonpositive_integer(double v) {
  return v <= 0.0 && std::fabs(v - std::round(v)) < 1e-12;
}

}  // namespace

double pochhammer(double a, int n) {
  if (n < 0) throw RangeError("pochhammer: n must be >= 0");
  double prod = 1.0;
  for (int k = 0; k < n; ++k) prod *= a + k;
  return prod;
}

double kummer_1f1(double a, double b, double z) {
  if (is_nonpositive_integer(b))
    throw RangeError("kummer_1f1: b must not be a non-positive integer, got " +
                     std::to_string(b));

  // Terminating (polynomial) case: a = -n for integer n >= 0.  The
  // alternating sum cancels heavily for large z, so it is accumulated in
  // extended precision.
  const double neg_a = std::round(-a);
  if (neg_a >= 0.0 && std::fabs(a + neg_a) < 1e-12) {
    const int n = static_cast<int>(neg_a);
    long double sum = 1.0L;
    long double term = 1.0L;
    for (int k = 0; k < n; ++k) {
      term *= (static_cast<long double>(-n) + k) * z /
              ((static_cast<long double>(b) + k) * (k + 1));
      sum += term;
    }
    return static_cast<double>(sum);
  }

  double sum = 1.0;
  double term = 1.0;
  for (int k = 0; k < kSeriesCap; ++k) {
    term *= (a + k) * z / ((b + k) * (k + 1));
    sum += term;
    if (std::fabs(term) < kSeriesTol * std::fabs(sum)) return sum;
  }
  throw ConvergenceError("kummer_1f1: series did not converge within " +
                         std::to_string(kSeriesCap) + " terms (a=" + std::to_string(a) +
                         ", b=" + std::to_string(b) + ", z=" + std::to_string(z) + ")");
}

double kummer_1f1_prime(double a, double b, double z) {
  return (a / b) * kummer_1f1(a + 1.0, b + 1.0, z);
}

double laguerre(int n, double a, double z) {
  if (n < 0) throw RangeError("laguerre: n must be >= 0");
  if (!(a > -1.0)) throw RangeError("laguerre: a must be > -1");
  if (n == 0) return 1.0;
  double lkm1 = 1.0;            // L_0
  double lk = 1.0 + a - z;      // L_1
  for (int k = 1; k < n; ++k) {
    const double lkp1 = ((2.0 * k + 1.0 + a - z) * lk - (k + a) * lkm1) / (k + 1.0);
    lkm1 = lk;
    lk = lkp1;
  }
  return lk;
}

}  // namespace rdkp
