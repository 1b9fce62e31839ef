#include "rainbowdkp/spectrum.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "rainbowdkp/errors.hpp"
#include "rainbowdkp/roots.hpp"

namespace rdkp {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

double branch_sign(Branch b) { return b == Branch::Plus ? 1.0 : -1.0; }

// kappa^2 of the undeformed problem minus the oscillator shift:
// K = 2 M w (2n + |j|) = kappa_sq_target - 2 M w.
double kappa_sq_shifted(const ModelParams& p, const QuantumNumbers& q) {
  return 2.0 * p.mass_ratio * p.omega_ratio * (2.0 * q.n + abs_j(q, p.alpha));
}

SpectrumResult identity_energy(const ModelParams& p, const QuantumNumbers& q, Branch branch) {
  const double M = p.mass_ratio;
  const double S = std::sqrt(M * M + kappa_sq_shifted(p, q));
  const double E = branch_sign(branch) * S;
  return SpectrumResult{E, branch, true, kappa_sq_at(Scenario::Identity, p, E)};
}

}  // namespace

void validate(const ModelParams& p) {
  if (!(p.mass_ratio > 0.0)) throw RangeError("params: mass_ratio must be > 0");
  if (!(p.omega_ratio > 0.0)) throw RangeError("params: omega_ratio must be > 0");
  if (!(p.epsilon >= 0.0)) throw RangeError("params: epsilon must be >= 0");
  if (!(p.alpha > 0.0 && p.alpha <= 1.0)) throw RangeError("params: alpha must be in (0,1]");
}

void validate(const QuantumNumbers& q) {
  if (q.n < 0) throw RangeError("quantum numbers: n must be >= 0");
}

double abs_j(const QuantumNumbers& q, double alpha) {
  return std::fabs(static_cast<double>(q.m)) / alpha;
}

const char* branch_name(Branch b) { return b == Branch::Plus ? "plus" : "minus"; }

double kappa_sq_target(const ModelParams& p, const QuantumNumbers& q) {
  validate(p);
  validate(q);
  return 2.0 * p.mass_ratio * p.omega_ratio * (2.0 * q.n + 1.0 + abs_j(q, p.alpha));
}

double kappa_sq_of_energy(Scenario s, const ModelParams& p, double E) {
  const RainbowPair pair{s, p.epsilon};
  const double g0 = eval_g0(pair, E);
  const double g1 = eval_g1(pair, E);
  const double M = p.mass_ratio;
  return (E * E * g0 * g0 - M * M) / (g1 * g1) + 2.0 * M * p.omega_ratio;
}

double kappa_sq_at(Scenario s, const ModelParams& p, double E) {
  const double M = p.mass_ratio;
  const double shift = 2.0 * M * p.omega_ratio;
  switch (s) {
    case Scenario::Identity:
      return E * E - M * M + shift;
    case Scenario::Case1: {
      const double one_minus = 1.0 - p.epsilon * E;
      return E * E - one_minus * one_minus * M * M + shift;
    }
    case Scenario::Case2:
      return (E * E - M * M) / (1.0 - p.epsilon * E * E) + shift;
    case Scenario::Case3: {
      if (p.epsilon == 0.0) return E * E - M * M + shift;
      const double em1 = std::expm1(p.epsilon * E) / p.epsilon;
      return em1 * em1 - M * M + shift;
    }
  }
  throw RangeError("kappa_sq_at: bad scenario");
}

SpectrumResult energy_case1(const ModelParams& p, const QuantumNumbers& q, Branch branch) {
  validate(p);
  validate(q);
  const double M = p.mass_ratio;
  const double eps = p.epsilon;
  const double denom = 1.0 - eps * eps * M * M;
  if (denom == 0.0)
    throw DomainError("case1 energy: degenerate denominator, eps * mass_ratio = 1");
  const double radicand = M * M + denom * kappa_sq_shifted(p, q);
  if (radicand < 0.0) return SpectrumResult{kNan, branch, false, kNan};
  const double E = (-eps * M * M + branch_sign(branch) * std::sqrt(radicand)) / denom;
  return SpectrumResult{E, branch, true, kappa_sq_at(Scenario::Case1, p, E)};
}

SpectrumResult energy_case2(const ModelParams& p, const QuantumNumbers& q, Branch branch) {
  validate(p);
  validate(q);
  const double M = p.mass_ratio;
  const double K = kappa_sq_shifted(p, q);
  const double magnitude = std::sqrt((M * M + K) / (1.0 + p.epsilon * K));
  const double E = branch_sign(branch) * magnitude;
  return SpectrumResult{E, branch, true, kappa_sq_at(Scenario::Case2, p, E)};
}

SpectrumResult energy_case3(const ModelParams& p, const QuantumNumbers& q, Branch branch) {
  validate(p);
  validate(q);
  const double M = p.mass_ratio;
  const double eps = p.epsilon;
  const double S = std::sqrt(M * M + kappa_sq_shifted(p, q));
  if (eps == 0.0) return identity_energy(p, q, branch);
  const double arg = 1.0 + branch_sign(branch) * eps * S;
  if (!(arg > 0.0)) return SpectrumResult{kNan, branch, false, kNan};
  const double E = std::log(arg) / eps;
  return SpectrumResult{E, branch, true, kappa_sq_at(Scenario::Case3, p, E)};
}

SpectrumResult energy_closed(Scenario s, const ModelParams& p, const QuantumNumbers& q,
                             Branch branch) {
  switch (s) {
    case Scenario::Identity: validate(p); validate(q); return identity_energy(p, q, branch);
    case Scenario::Case1: return energy_case1(p, q, branch);
    case Scenario::Case2: return energy_case2(p, q, branch);
    case Scenario::Case3: return energy_case3(p, q, branch);
  }
  throw RangeError("energy_closed: bad scenario");
}

SpectrumResult energy_implicit(Scenario s, const ModelParams& p, const QuantumNumbers& q,
                               Branch branch,
                               std::optional<std::pair<double, double>> bracket) {
  validate(p);
  validate(q);
  const double target = kappa_sq_target(p, q);
  const auto f = [&](double E) { return kappa_sq_of_energy(s, p, E) - target; };

  std::vector<std::pair<double, double>> segments;
  if (bracket) {
    if (!(bracket->first < bracket->second))
      throw RangeError("energy_implicit: bracket must satisfy lo < hi");
    segments.push_back(*bracket);
  } else {
    const double L = 20.0 * std::sqrt(p.mass_ratio * p.mass_ratio + target);
    if (branch == Branch::Minus)
      segments.emplace_back(-L, 0.0);
    else
      segments.emplace_back(0.0, L);
  }

  // Exclude the case-1 pole and stay inside the case-2 domain.  When the
  // root sits inside the excluded sliver itself (the quantized energy can
  // land exactly on the pole, where the reduced kappa^2 expression is
  // still regular), the sliver is kept as a bracket of its own and
  // refined with single-ulp perturbation around the one non-evaluable
  // point.
  std::vector<std::pair<double, double>> pole_slivers;
  if (p.epsilon > 0.0 && s == Scenario::Case1) {
    const double pole = 1.0 / p.epsilon;
    const double guard = pole * 1e-9;
    std::vector<std::pair<double, double>> split;
    for (auto [lo, hi] : segments) {
      if (lo < pole && pole < hi) {
        if (pole - guard > lo) split.emplace_back(lo, pole - guard);
        if (hi > pole + guard) split.emplace_back(pole + guard, hi);
        pole_slivers.emplace_back(std::max(lo, pole - guard), std::min(hi, pole + guard));
      } else {
        split.emplace_back(lo, hi);
      }
    }
    segments = std::move(split);
  }
  if (p.epsilon > 0.0 && s == Scenario::Case2) {
    const double edge = (1.0 - 1e-9) / std::sqrt(p.epsilon);
    std::vector<std::pair<double, double>> clipped;
    for (auto [lo, hi] : segments) {
      lo = std::max(lo, -edge);
      hi = std::min(hi, edge);
      if (lo < hi) clipped.emplace_back(lo, hi);
    }
    segments = std::move(clipped);
  }
  if (segments.empty())
    throw NoSignChangeError("energy_implicit: bracket empty after domain restriction");

  std::vector<double> roots;
  constexpr int kScanSegments = 64;
  for (auto [lo, hi] : segments) {
    const double step = (hi - lo) / kScanSegments;
    double x0 = lo, f0 = f(x0);
    for (int i = 1; i <= kScanSegments; ++i) {
      const double x1 = (i == kScanSegments) ? hi : lo + i * step;
      const double f1 = f(x1);
      if (f0 == 0.0) {
        roots.push_back(x0);
      } else if (f0 * f1 < 0.0) {
        const double mid = 0.5 * (x0 + x1);
        roots.push_back(brent_root(f, x0, f0, x1, f1, 1e-13 * std::max(1.0, std::fabs(mid))));
      }
      x0 = x1;
      f0 = f1;
    }
    if (f0 == 0.0) roots.push_back(x0);
  }
  for (auto [lo, hi] : pole_slivers) {
    const auto f_safe = [&](double E) {
      try {
        return f(E);
      } catch (const DomainError&) {
        return f(std::nextafter(E, hi));
      }
    };
    const double flo = f_safe(lo), fhi = f_safe(hi);
    if (flo == 0.0)
      roots.push_back(lo);
    else if (fhi == 0.0)
      roots.push_back(hi);
    else if (flo * fhi < 0.0)
      roots.push_back(brent_root(f_safe, lo, flo, hi, fhi,
                                 1e-13 * std::max(1.0, 0.5 * (std::fabs(lo) + std::fabs(hi)))));
  }

  // Keep roots on the branch's side of E = 0 and return the innermost one.
  const double sign = branch_sign(branch);
  double best = kNan;
  for (double root : roots)
    if (root * sign >= 0.0 && (std::isnan(best) || std::fabs(root) < std::fabs(best)))
      best = root;
  if (std::isnan(best))
    throw NoSignChangeError(std::string("energy_implicit: no ") + branch_name(branch) +
                            "-branch root bracketed (scenario " + scenario_name(s) + ")");
  return SpectrumResult{best, branch, true, kappa_sq_at(s, p, best)};
}

CutoffResult cutoff_omega_case3(const ModelParams& p, const QuantumNumbers& q) {
  validate(p);
  validate(q);
  if (!(p.epsilon > 0.0)) throw RangeError("cutoff_omega_case3: epsilon must be > 0");
  const double M = p.mass_ratio;
  const double u = abs_j(q, p.alpha) + 2.0 * q.n;
  if (u == 0.0)
    throw DomainError("cutoff_omega_case3: |m|/alpha + 2n = 0, kappa does not depend on omega "
                      "(no cutoff)");
  if (p.epsilon * M >= 1.0) return CutoffResult{0.0, true};
  return CutoffResult{(1.0 / (p.epsilon * p.epsilon) - M * M) / (2.0 * M * u), false};
}

double gap_width_case1(const ModelParams& p, const QuantumNumbers& q) {
  validate(p);
  validate(q);
  const double M = p.mass_ratio;
  const double denom = 1.0 - p.epsilon * p.epsilon * M * M;
  if (denom == 0.0)
    throw DomainError("gap_width_case1: degenerate denominator, eps * mass_ratio = 1");
  const double radicand = M * M + denom * kappa_sq_shifted(p, q);
  if (radicand < 0.0)
    throw UnphysicalError("gap_width_case1: branches unphysical (negative radicand)");
  return 2.0 * std::sqrt(radicand) / denom;
}

}  // namespace rdkp
