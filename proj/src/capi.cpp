// C bindings: thin exception-to-status translation over the C++ core.

#include "rainbow_dkp.h"

#include <algorithm>
#include <cstring>
#include <filesystem>
#include <string>

#include "rainbowdkp/dkp_algebra.hpp"
#include "rainbowdkp/errors.hpp"
#include "rainbowdkp/fd_oracle.hpp"
#include "rainbowdkp/spectrum.hpp"
#include "rainbowdkp/sweep.hpp"
#include "rainbowdkp/verify.hpp"
#include "rainbowdkp/wavefunction.hpp"

namespace {

thread_local std::string g_last_error;

rdkp_status fail(rdkp_status code, const char* what) {
  g_last_error = what;
  return code;
}

template <typename Fn>
rdkp_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return RDKP_OK;
  } catch (const rdkp::DomainError& e) {
    return fail(RDKP_ERR_DOMAIN, e.what());
  } catch (const rdkp::RangeError& e) {
    return fail(RDKP_ERR_RANGE, e.what());
  } catch (const rdkp::ConvergenceError& e) {
    return fail(RDKP_ERR_NO_CONVERGENCE, e.what());
  } catch (const rdkp::NoSignChangeError& e) {
    return fail(RDKP_ERR_NO_SIGN_CHANGE, e.what());
  } catch (const rdkp::UnphysicalError& e) {
    return fail(RDKP_ERR_UNPHYSICAL, e.what());
  } catch (const rdkp::ResolutionError& e) {
    return fail(RDKP_ERR_RESOLUTION, e.what());
  } catch (const rdkp::ConfigError& e) {
    return fail(RDKP_ERR_CONFIG, e.what());
  } catch (const rdkp::IoError& e) {
    return fail(RDKP_ERR_IO, e.what());
  } catch (const std::exception& e) {
    return fail(RDKP_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(RDKP_ERR_INTERNAL, "unknown error");
  }
}

rdkp::Scenario to_scenario(int scenario) {
  if (scenario < 0 || scenario > 3) throw rdkp::RangeError("bad scenario enumerator");
  return static_cast<rdkp::Scenario>(scenario);
}

rdkp::Branch to_branch(int branch) {
  if (branch == RDKP_BRANCH_PLUS) return rdkp::Branch::Plus;
  if (branch == RDKP_BRANCH_MINUS) return rdkp::Branch::Minus;
  throw rdkp::RangeError("bad branch enumerator");
}

void to_c(const rdkp::SpectrumResult& in, rdkp_spectrum_result* out) {
  out->energy_ratio = in.energy_ratio;
  out->branch = in.branch == rdkp::Branch::Plus ? RDKP_BRANCH_PLUS : RDKP_BRANCH_MINUS;
  out->physical = in.physical ? 1 : 0;
  out->kappa_sq = in.kappa_sq;
}

}  // namespace

struct rdkp_model {
  rdkp::Scenario scenario;
  rdkp::ModelParams params;
};

struct rdkp_spinor {
  rdkp::DKPSpinor spinor;
};

extern "C" {

const char* rdkp_version(void) { return "0.1.0"; }

const char* rdkp_last_error(void) { return g_last_error.c_str(); }

rdkp_status rdkp_g0(int scenario, double epsilon, double x, double* out) {
  if (!out) return fail(RDKP_ERR_INVALID_ARGUMENT, "rdkp_g0: out is null");
  return guarded([&] { *out = rdkp::eval_g0({to_scenario(scenario), epsilon}, x); });
}

rdkp_status rdkp_g1(int scenario, double epsilon, double x, double* out) {
  if (!out) return fail(RDKP_ERR_INVALID_ARGUMENT, "rdkp_g1: out is null");
  return guarded([&] { *out = rdkp::eval_g1({to_scenario(scenario), epsilon}, x); });
}

rdkp_status rdkp_mdr_residual(int scenario, double epsilon, double E, double p, double M,
                              double* out) {
  if (!out) return fail(RDKP_ERR_INVALID_ARGUMENT, "rdkp_mdr_residual: out is null");
  return guarded([&] { *out = rdkp::mdr_residual({to_scenario(scenario), epsilon}, E, p, M); });
}

rdkp_status rdkp_metric(int scenario, double epsilon, double x, double r, double alpha,
                        double out_diag[4]) {
  if (!out_diag) return fail(RDKP_ERR_INVALID_ARGUMENT, "rdkp_metric: out_diag is null");
  return guarded([&] {
    const rdkp::MetricDiagonal g = rdkp::metric_at({to_scenario(scenario), epsilon}, x, r, alpha);
    out_diag[0] = g.g_tt;
    out_diag[1] = g.g_rr;
    out_diag[2] = g.g_phiphi;
    out_diag[3] = g.g_zz;
  });
}

rdkp_status rdkp_deficit_angle(double alpha, double* out) {
  if (!out) return fail(RDKP_ERR_INVALID_ARGUMENT, "rdkp_deficit_angle: out is null");
  return guarded([&] { *out = rdkp::deficit_angle(alpha); });
}

rdkp_status rdkp_model_create(int scenario, double epsilon, double alpha, double mass_ratio,
                              double omega_ratio, rdkp_model** out) {
  if (!out) return fail(RDKP_ERR_INVALID_ARGUMENT, "rdkp_model_create: out is null");
  *out = nullptr;
  return guarded([&] {
    rdkp::ModelParams params{mass_ratio, omega_ratio, epsilon, alpha};
    rdkp::validate(params);
    *out = new rdkp_model{to_scenario(scenario), params};
  });
}

void rdkp_model_free(rdkp_model* model) { delete model; }

rdkp_status rdkp_kappa_sq_target(const rdkp_model* model, int n, int m, double* out) {
  if (!model || !out) return fail(RDKP_ERR_INVALID_ARGUMENT, "rdkp_kappa_sq_target: null arg");
  return guarded(
      [&] { *out = rdkp::kappa_sq_target(model->params, rdkp::QuantumNumbers{n, m}); });
}

rdkp_status rdkp_energy(const rdkp_model* model, int n, int m, int branch,
                        rdkp_spectrum_result* out) {
  if (!model || !out) return fail(RDKP_ERR_INVALID_ARGUMENT, "rdkp_energy: null arg");
  return guarded([&] {
    to_c(rdkp::energy_closed(model->scenario, model->params, rdkp::QuantumNumbers{n, m},
                             to_branch(branch)),
         out);
  });
}

rdkp_status rdkp_energy_implicit(const rdkp_model* model, int n, int m, int branch,
                                 const double* bracket_lo, const double* bracket_hi,
                                 rdkp_spectrum_result* out) {
  if (!model || !out) return fail(RDKP_ERR_INVALID_ARGUMENT, "rdkp_energy_implicit: null arg");
  if ((bracket_lo == nullptr) != (bracket_hi == nullptr))
    return fail(RDKP_ERR_INVALID_ARGUMENT,
                "rdkp_energy_implicit: give both bracket ends or neither");
  return guarded([&] {
    std::optional<std::pair<double, double>> bracket;
    if (bracket_lo) bracket = std::make_pair(*bracket_lo, *bracket_hi);
    to_c(rdkp::energy_implicit(model->scenario, model->params, rdkp::QuantumNumbers{n, m},
                               to_branch(branch), bracket),
         out);
  });
}

rdkp_status rdkp_cutoff_omega(const rdkp_model* model, int n, int m, double* omega_c,
                              int* always_unphysical) {
  if (!model || !omega_c || !always_unphysical)
    return fail(RDKP_ERR_INVALID_ARGUMENT, "rdkp_cutoff_omega: null arg");
  return guarded([&] {
    const rdkp::CutoffResult cut =
        rdkp::cutoff_omega_case3(model->params, rdkp::QuantumNumbers{n, m});
    *omega_c = cut.omega_c;
    *always_unphysical = cut.always_unphysical ? 1 : 0;
  });
}

rdkp_status rdkp_gap_width(const rdkp_model* model, int n, int m, double* out) {
  if (!model || !out) return fail(RDKP_ERR_INVALID_ARGUMENT, "rdkp_gap_width: null arg");
  return guarded(
      [&] { *out = rdkp::gap_width_case1(model->params, rdkp::QuantumNumbers{n, m}); });
}

rdkp_status rdkp_spinor_build(const rdkp_model* model, int n, int m, int branch, int points,
                              double r_max, rdkp_spinor** out) {
  if (!model || !out) return fail(RDKP_ERR_INVALID_ARGUMENT, "rdkp_spinor_build: null arg");
  *out = nullptr;
  return guarded([&] {
    const rdkp::QuantumNumbers q{n, m};
    const rdkp::SpectrumResult e =
        rdkp::energy_closed(model->scenario, model->params, q, to_branch(branch));
    const double extent = r_max > 0.0 ? r_max : rdkp::default_r_max(model->params, q);
    const rdkp::RadialGrid grid(extent, points);
    *out = new rdkp_spinor{rdkp::build_spinor(model->params, q, e, grid, model->scenario)};
  });
}

void rdkp_spinor_free(rdkp_spinor* spinor) { delete spinor; }

int rdkp_spinor_points(const rdkp_spinor* spinor) {
  return spinor ? spinor->spinor.grid.points : 0;
}

rdkp_status rdkp_spinor_radius(const rdkp_spinor* spinor, int i, double* out) {
  if (!spinor || !out) return fail(RDKP_ERR_INVALID_ARGUMENT, "rdkp_spinor_radius: null arg");
  if (i < 0 || i >= spinor->spinor.grid.points)
    return fail(RDKP_ERR_RANGE, "rdkp_spinor_radius: node index out of range");
  *out = spinor->spinor.grid.node(i + 1);
  return RDKP_OK;
}

rdkp_status rdkp_spinor_component(const rdkp_spinor* spinor, int component, int i, double* out) {
  if (!spinor || !out) return fail(RDKP_ERR_INVALID_ARGUMENT, "rdkp_spinor_component: null arg");
  if (component < 1 || component > 5)
    return fail(RDKP_ERR_RANGE, "rdkp_spinor_component: component must be in 1..5");
  if (i < 0 || i >= spinor->spinor.grid.points)
    return fail(RDKP_ERR_RANGE, "rdkp_spinor_component: node index out of range");
  *out = spinor->spinor.components[component - 1][i];
  return RDKP_OK;
}

rdkp_status rdkp_spinor_norm_constant(const rdkp_spinor* spinor, double* out) {
  if (!spinor || !out)
    return fail(RDKP_ERR_INVALID_ARGUMENT, "rdkp_spinor_norm_constant: null arg");
  *out = spinor->spinor.norm_constant;
  return RDKP_OK;
}

rdkp_status rdkp_spinor_energy(const rdkp_spinor* spinor, rdkp_spectrum_result* out) {
  if (!spinor || !out) return fail(RDKP_ERR_INVALID_ARGUMENT, "rdkp_spinor_energy: null arg");
  to_c(spinor->spinor.energy, out);
  return RDKP_OK;
}

rdkp_status rdkp_spinor_current_jt(const rdkp_spinor* spinor, double r, double* out) {
  if (!spinor || !out)
    return fail(RDKP_ERR_INVALID_ARGUMENT, "rdkp_spinor_current_jt: null arg");
  return guarded([&] { *out = rdkp::current_jt(spinor->spinor, r); });
}

rdkp_status rdkp_sweep_run_file(const char* config_path, const char* out_dir, int threads) {
  if (!config_path || !out_dir)
    return fail(RDKP_ERR_INVALID_ARGUMENT, "rdkp_sweep_run_file: null arg");
  return guarded([&] {
    const rdkp::SweepConfig cfg = rdkp::load_config(config_path);
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw rdkp::IoError(std::string("cannot create output directory '") + out_dir + "'");
    const rdkp::SweepResult result = rdkp::run_sweep(cfg, threads);
    const std::string base = std::string(out_dir) + "/sweep";
    rdkp::emit_csv(result.table, base + ".csv");
    rdkp::emit_json(result.table, base + ".json");
    rdkp::emit_svg(result, base + ".svg");
  });
}

rdkp_status rdkp_figure_write(int id, const char* out_dir, int threads, int* checks_passed,
                              int* checks_total) {
  if (!out_dir) return fail(RDKP_ERR_INVALID_ARGUMENT, "rdkp_figure_write: out_dir is null");
  return guarded([&] {
    const auto checks = rdkp::write_figure(id, out_dir, threads);
    int passed = 0;
    for (const auto& c : checks)
      if (c.pass) ++passed;
    if (checks_passed) *checks_passed = passed;
    if (checks_total) *checks_total = static_cast<int>(checks.size());
  });
}

rdkp_status rdkp_verify(const char* suite, char* buf, size_t buf_len, int* num_passed,
                        int* num_failed) {
  if (!suite) return fail(RDKP_ERR_INVALID_ARGUMENT, "rdkp_verify: suite is null");
  return guarded([&] {
    const auto results = rdkp::run_suite(suite);
    const std::string report = rdkp::format_report(results);
    int passed = 0, failed = 0;
    for (const auto& r : results) (r.pass ? passed : failed)++;
    if (num_passed) *num_passed = passed;
    if (num_failed) *num_failed = failed;
    if (buf && buf_len > 0) {
      const size_t len = std::min(buf_len - 1, report.size());
      std::memcpy(buf, report.data(), len);
      buf[len] = '\0';
    }
  });
}

rdkp_status rdkp_kemmer_summary(int mostly_plus, int* zero_triples, double* max_abs_residual) {
  return guarded([&] {
    const rdkp::Signature sig =
        mostly_plus ? rdkp::Signature::MostlyPlus : rdkp::Signature::MostlyMinus;
    int zeros = 0;
    double max_abs = 0.0;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        for (int c = 0; c < 4; ++c) {
          const rdkp::Matrix5 res = rdkp::kemmer_residual(a, b, c, sig);
          if (res.is_zero()) ++zeros;
          max_abs = std::max(max_abs, res.max_abs());
        }
    if (zero_triples) *zero_triples = zeros;
    if (max_abs_residual) *max_abs_residual = max_abs;
  });
}

}  // extern "C"
