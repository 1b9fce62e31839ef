// rainbow-dkp: spectra, wave functions, sweeps and verification suites for
// the DKP oscillator in cosmic-string rainbow gravity, over the C API of
// librainbow_dkp.
//
// Exit codes: 0 success, 1 domain/physics error, 2 usage error.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rainbow_dkp.h"

namespace {

int threads_from_env() {
  const char* v = std::getenv("RAINBOW_DKP_THREADS");
  if (!v || !*v) return 0;  // auto
  try {
    const int t = std::stoi(v);
    return t >= 0 ? t : 0;
  } catch (...) {
    return 0;
  }
}

[[noreturn]] void die_physics(const std::string& msg) {
  std::fprintf(stderr, "error: %s\n", msg.c_str());
  std::exit(1);
}

void check(rdkp_status status) {
  if (status != RDKP_OK) die_physics(rdkp_last_error());
}

struct SpectrumArgs {
  int case_id = 1;
  int n = 0;
  int m = 0;
  double alpha = 1.0;
  double epsilon = 0.0;
  double mass = 1.0;
  double omega = 1.0;
  std::string branch = "both";
  bool json = false;
};

void add_model_flags(CLI::App* cmd, SpectrumArgs& args) {
  cmd->add_option("--case", args.case_id, "rainbow scenario (1, 2 or 3)")
      ->required()
      ->check(CLI::Range(1, 3));
  cmd->add_option("--n", args.n, "radial quantum number (>= 0)")->required();
  cmd->add_option("--m", args.m, "magnetic quantum number")->required();
  cmd->add_option("--alpha", args.alpha, "angular parameter in (0,1]")->required();
  cmd->add_option("--epsilon", args.epsilon, "rainbow parameter (>= 0)")->required();
  cmd->add_option("--mass", args.mass, "M/E_P")->required();
  cmd->add_option("--omega", args.omega, "omega/E_P")->required();
}

rdkp_model* make_model(const SpectrumArgs& args) {
  rdkp_model* model = nullptr;
  check(rdkp_model_create(args.case_id, args.epsilon, args.alpha, args.mass, args.omega,
                          &model));
  return model;
}

std::string param_echo(const SpectrumArgs& args) {
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "case=%d n=%d m=%d alpha=%.17g epsilon=%.17g mass=%.17g omega=%.17g branch=%s",
                args.case_id, args.n, args.m, args.alpha, args.epsilon, args.mass, args.omega,
                args.branch.c_str());
  return buf;
}

std::vector<int> branches_of(const std::string& name) {
  if (name == "plus") return {RDKP_BRANCH_PLUS};
  if (name == "minus") return {RDKP_BRANCH_MINUS};
  return {RDKP_BRANCH_PLUS, RDKP_BRANCH_MINUS};
}

// A physics-level explanation for an unphysical branch, including the
// case-3 cutoff when it applies.
std::string unphysical_message(const SpectrumArgs& args, rdkp_model* model, int branch) {
  std::string msg = "unphysical: ";
  msg += branch == RDKP_BRANCH_MINUS ? "minus" : "plus";
  msg += " branch";
  if (args.case_id == 3 && branch == RDKP_BRANCH_MINUS) {
    double omega_c = 0.0;
    int always = 0;
    if (rdkp_cutoff_omega(model, args.n, args.m, &omega_c, &always) == RDKP_OK) {
      char buf[96];
      if (always)
        std::snprintf(buf, sizeof(buf), " (unphysical for every omega: eps*M >= 1)");
      else
        std::snprintf(buf, sizeof(buf), " beyond cutoff omega_c=%g", omega_c);
      msg += buf;
    }
  } else if (args.case_id == 1) {
    msg += " (negative radicand)";
  }
  return msg;
}

int run_spectrum(const SpectrumArgs& args) {
  rdkp_model* model = make_model(args);
  std::vector<rdkp_spectrum_result> results;
  for (int b : branches_of(args.branch)) {
    rdkp_spectrum_result res;
    check(rdkp_energy(model, args.n, args.m, b, &res));
    if (!res.physical) {
      const std::string msg = unphysical_message(args, model, b);
      rdkp_model_free(model);
      die_physics(msg);
    }
    results.push_back(res);
  }
  if (args.json) {
    std::printf("{\n  \"params\": {\"case\": %d, \"n\": %d, \"m\": %d, \"alpha\": %.17g, "
                "\"epsilon\": %.17g, \"mass_ratio\": %.17g, \"omega_ratio\": %.17g},\n",
                args.case_id, args.n, args.m, args.alpha, args.epsilon, args.mass, args.omega);
    std::printf("  \"results\": [\n");
    for (size_t i = 0; i < results.size(); ++i)
      std::printf("    {\"branch\": \"%s\", \"energy_ratio\": %.17g, \"kappa_sq\": %.17g, "
                  "\"physical\": true}%s\n",
                  results[i].branch == RDKP_BRANCH_PLUS ? "plus" : "minus",
                  results[i].energy_ratio, results[i].kappa_sq,
                  i + 1 < results.size() ? "," : "");
    std::printf("  ]\n}\n");
  } else {
    std::printf("# rainbow-dkp spectrum %s\n", param_echo(args).c_str());
    for (const auto& res : results)
      std::printf("branch=%-5s  E/E_P=%.17g  kappa_sq=%.17g\n",
                  res.branch == RDKP_BRANCH_PLUS ? "plus" : "minus", res.energy_ratio,
                  res.kappa_sq);
  }
  rdkp_model_free(model);
  return 0;
}

int run_wavefunction(const SpectrumArgs& args, int grid, double rmax, const std::string& out) {
  if (args.branch == "both") {
    std::fprintf(stderr, "usage: wavefunction needs --branch plus or --branch minus\n");
    return 2;
  }
  rdkp_model* model = make_model(args);
  rdkp_spinor* spinor = nullptr;
  const rdkp_status status =
      rdkp_spinor_build(model, args.n, args.m, branches_of(args.branch)[0], grid, rmax, &spinor);
  if (status != RDKP_OK) {
    std::string msg = rdkp_last_error();
    if (status == RDKP_ERR_UNPHYSICAL)
      msg = unphysical_message(args, model, branches_of(args.branch)[0]);
    rdkp_model_free(model);
    die_physics(msg);
  }

  std::ofstream file(out, std::ios::binary);
  if (!file) {
    rdkp_spinor_free(spinor);
    rdkp_model_free(model);
    die_physics("cannot open '" + out + "' for writing");
  }
  file << "r,phi1,phi2,phi3,phi4,phi5,jt\n";
  char line[512];
  const int points = rdkp_spinor_points(spinor);
  for (int i = 0; i < points; ++i) {
    double r, c[5], jt;
    check(rdkp_spinor_radius(spinor, i, &r));
    for (int comp = 1; comp <= 5; ++comp) check(rdkp_spinor_component(spinor, comp, i, &c[comp - 1]));
    check(rdkp_spinor_current_jt(spinor, r, &jt));
    std::snprintf(line, sizeof(line), "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", r, c[0],
                  c[1], c[2], c[3], c[4], jt);
    file << line;
  }
  rdkp_spectrum_result energy;
  check(rdkp_spinor_energy(spinor, &energy));
  double norm = 0.0;
  check(rdkp_spinor_norm_constant(spinor, &norm));
  std::printf("# rainbow-dkp wavefunction %s grid=%d rmax=%.17g out=%s\n",
              param_echo(args).c_str(), grid, rmax, out.c_str());
  std::printf("E/E_P=%.17g  norm_constant=%.17g  points=%d\n", energy.energy_ratio, norm,
              points);
  rdkp_spinor_free(spinor);
  rdkp_model_free(model);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bound states of the DKP oscillator in cosmic-string rainbow gravity"};
  app.require_subcommand(1);
  const int threads = threads_from_env();

  SpectrumArgs spec_args;
  CLI::App* spectrum = app.add_subcommand("spectrum", "closed-form bound-state energies");
  add_model_flags(spectrum, spec_args);
  spectrum->add_option("--branch", spec_args.branch, "plus, minus or both (default both)")
      ->check(CLI::IsMember({"plus", "minus", "both"}));
  spectrum->add_flag("--json", spec_args.json, "emit JSON");

  SpectrumArgs wf_args;
  int wf_grid = 4096;
  double wf_rmax = 0.0;
  std::string wf_out = "wavefunction.csv";
  CLI::App* wavefunction =
      app.add_subcommand("wavefunction", "radial spinor profile and probability density");
  add_model_flags(wavefunction, wf_args);
  wf_args.branch = "plus";
  wavefunction->add_option("--branch", wf_args.branch, "plus or minus (default plus)");
  wavefunction->add_option("--grid", wf_grid, "grid points (default 4096)");
  wavefunction->add_option("--rmax", wf_rmax, "grid extent (default: auto)");
  wavefunction->add_option("--out", wf_out, "output CSV path")->required();

  std::string sweep_config, sweep_out;
  CLI::App* sweep = app.add_subcommand("sweep", "parameter sweep from a config file");
  sweep->add_option("--config", sweep_config, "config file (key = value lines)")->required();
  sweep->add_option("--out", sweep_out, "output directory")->required();

  int figure_id = 0;
  std::string figure_out = ".";
  CLI::App* figure = app.add_subcommand("figure", "regenerate a bundled figure (1..6)");
  figure->add_option("--id", figure_id, "figure id in 1..6")->required();
  figure->add_option("--out", figure_out, "output directory");

  std::string verify_suite = "all";
  CLI::App* verify = app.add_subcommand("verify", "run the invariant suites");
  verify->add_option("--suite", verify_suite, "algebra, spectrum, oracle or all")
      ->check(CLI::IsMember({"algebra", "spectrum", "oracle", "all"}));

  CLI::App* algebra = app.add_subcommand("algebra-check", "Kemmer residual summary");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (spectrum->parsed()) return run_spectrum(spec_args);

  if (wavefunction->parsed())
    return run_wavefunction(wf_args, wf_grid, wf_rmax, wf_out);

  if (sweep->parsed()) {
    check(rdkp_sweep_run_file(sweep_config.c_str(), sweep_out.c_str(), threads));
    std::printf("# rainbow-dkp sweep config=%s out=%s\n", sweep_config.c_str(),
                sweep_out.c_str());
    std::printf("wrote %s/sweep.csv, sweep.json, sweep.svg\n", sweep_out.c_str());
    return 0;
  }

  if (figure->parsed()) {
    int passed = 0, total = 0;
    check(rdkp_figure_write(figure_id, figure_out.c_str(), threads, &passed, &total));
    std::printf("# rainbow-dkp figure id=%d out=%s\n", figure_id, figure_out.c_str());
    std::printf("wrote %s/fig%d.csv and fig%d.svg; checks: %d/%d passed\n", figure_out.c_str(),
                figure_id, figure_id, passed, total);
    return passed == total ? 0 : 1;
  }

  if (verify->parsed()) {
    std::vector<char> buf(1 << 16);
    int passed = 0, failed = 0;
    check(rdkp_verify(verify_suite.c_str(), buf.data(), buf.size(), &passed, &failed));
    std::printf("# rainbow-dkp verify suite=%s\n%s", verify_suite.c_str(), buf.data());
    return failed == 0 ? 0 : 1;
  }

  if (algebra->parsed()) {
    for (int mostly_plus = 0; mostly_plus <= 1; ++mostly_plus) {
      int zeros = 0;
      double max_abs = 0.0;
      check(rdkp_kemmer_summary(mostly_plus, &zeros, &max_abs));
      std::printf("signature %s: %d/64 triples with zero residual, max |residual entry| = %g\n",
                  mostly_plus ? "(-,+,+,+)" : "(+,-,-,-)", zeros, max_abs);
    }
    return 0;
  }

  return 2;
}
