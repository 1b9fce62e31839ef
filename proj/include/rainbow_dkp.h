/* rainbow_dkp.h - C interface to the rainbow-gravity DKP oscillator library.
 *
 * All functions return rdkp_status; RDKP_OK means success.  On failure a
 * thread-local message is available through rdkp_last_error().  Handles
 * returned by the create/build calls are owned by the caller and released
 * with the matching free call.
 *
 * Conventions: all energies, masses and frequencies are ratios to the
 * Planck energy (E_P = 1); scenario and branch arguments take the
 * RDKP_SCENARIO_* / RDKP_BRANCH_* enumerators.
 */
#ifndef RAINBOW_DKP_H
#define RAINBOW_DKP_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rdkp_status {
  RDKP_OK = 0,
  RDKP_ERR_DOMAIN = 1,           /* outside the mathematical domain (pole, radicand) */
  RDKP_ERR_RANGE = 2,            /* parameter outside its admissible range */
  RDKP_ERR_NO_CONVERGENCE = 3,   /* iteration budget exhausted */
  RDKP_ERR_NO_SIGN_CHANGE = 4,   /* root bracketing failed */
  RDKP_ERR_UNPHYSICAL = 5,       /* state not physical */
  RDKP_ERR_RESOLUTION = 6,       /* grid too coarse */
  RDKP_ERR_CONFIG = 7,           /* invalid sweep/figure configuration */
  RDKP_ERR_IO = 8,               /* file I/O failure */
  RDKP_ERR_INVALID_ARGUMENT = 9, /* null pointer or bad enumerator */
  RDKP_ERR_INTERNAL = 10
} rdkp_status;

typedef enum rdkp_scenario {
  RDKP_SCENARIO_IDENTITY = 0,
  RDKP_SCENARIO_CASE1 = 1, /* g0 = g1 = 1/(1 - eps x) */
  RDKP_SCENARIO_CASE2 = 2, /* g0 = 1, g1 = sqrt(1 - eps x^2) */
  RDKP_SCENARIO_CASE3 = 3  /* g0 = (e^{eps x} - 1)/(eps x), g1 = 1 */
} rdkp_scenario;

typedef enum rdkp_branch { RDKP_BRANCH_PLUS = 0, RDKP_BRANCH_MINUS = 1 } rdkp_branch;

typedef struct rdkp_spectrum_result {
  double energy_ratio; /* E/E_P; NaN when not physical */
  int branch;          /* rdkp_branch */
  int physical;        /* 0/1 */
  double kappa_sq;     /* scenario kappa^2 at this energy */
} rdkp_spectrum_result;

/* Opaque handles */
typedef struct rdkp_model rdkp_model;
typedef struct rdkp_spinor rdkp_spinor;

const char* rdkp_version(void);

/* Message describing the last error in the calling thread ("" if none). */
const char* rdkp_last_error(void);

/* ---- rainbow functions and geometry ---------------------------------- */

rdkp_status rdkp_g0(int scenario, double epsilon, double x, double* out);
rdkp_status rdkp_g1(int scenario, double epsilon, double x, double* out);

/* E^2 g0^2 - p^2 g1^2 - M^2 at x = E */
rdkp_status rdkp_mdr_residual(int scenario, double epsilon, double E, double p, double M,
                              double* out);

/* diag(g_tt, g_rr, g_phiphi, g_zz) into out_diag[4] */
rdkp_status rdkp_metric(int scenario, double epsilon, double x, double r, double alpha,
                        double out_diag[4]);

rdkp_status rdkp_deficit_angle(double alpha, double* out);

/* ---- model handle: scenario + physical parameters -------------------- */

rdkp_status rdkp_model_create(int scenario, double epsilon, double alpha, double mass_ratio,
                              double omega_ratio, rdkp_model** out);
void rdkp_model_free(rdkp_model* model);

/* 2 M w (2n + 1 + |m|/alpha) */
rdkp_status rdkp_kappa_sq_target(const rdkp_model* model, int n, int m, double* out);

/* Closed-form bound-state energy.  An unphysical branch is reported with
 * result->physical = 0 and RDKP_OK (querying it is not an error). */
rdkp_status rdkp_energy(const rdkp_model* model, int n, int m, int branch,
                        rdkp_spectrum_result* out);

/* Independent implicit-root oracle for the same energy.  Pass NULL
 * bracket pointers for the default bracket. */
rdkp_status rdkp_energy_implicit(const rdkp_model* model, int n, int m, int branch,
                                 const double* bracket_lo, const double* bracket_hi,
                                 rdkp_spectrum_result* out);

/* Cutoff frequency of the case-3 Minus branch.  *always_unphysical is set
 * to 1 (and *omega_c to 0) when eps*M >= 1. */
rdkp_status rdkp_cutoff_omega(const rdkp_model* model, int n, int m, double* omega_c,
                              int* always_unphysical);

/* Case-1 forbidden-gap width E+ - E-. */
rdkp_status rdkp_gap_width(const rdkp_model* model, int n, int m, double* out);

/* ---- spinor profiles -------------------------------------------------- */

/* Builds the five-component radial profile of state (n, m) on a uniform
 * grid of `points` nodes; pass r_max <= 0 for the default extent. */
rdkp_status rdkp_spinor_build(const rdkp_model* model, int n, int m, int branch, int points,
                              double r_max, rdkp_spinor** out);
void rdkp_spinor_free(rdkp_spinor* spinor);

int rdkp_spinor_points(const rdkp_spinor* spinor);
rdkp_status rdkp_spinor_radius(const rdkp_spinor* spinor, int i, double* out);
/* component in 1..5, node index i in 0..points-1 */
rdkp_status rdkp_spinor_component(const rdkp_spinor* spinor, int component, int i, double* out);
rdkp_status rdkp_spinor_norm_constant(const rdkp_spinor* spinor, double* out);
rdkp_status rdkp_spinor_energy(const rdkp_spinor* spinor, rdkp_spectrum_result* out);
/* probability density J^t at radius r (normalized profile) */
rdkp_status rdkp_spinor_current_jt(const rdkp_spinor* spinor, double r, double* out);

/* ---- sweeps, figures, verification ------------------------------------ */

/* Runs the sweep described by a config file and writes sweep.csv,
 * sweep.json and sweep.svg into out_dir.  threads = 0 selects one worker
 * per hardware thread. */
rdkp_status rdkp_sweep_run_file(const char* config_path, const char* out_dir, int threads);

/* Writes figK.csv / figK.svg for preset id (1..6) into out_dir and
 * reports the attached qualitative checks. */
rdkp_status rdkp_figure_write(int id, const char* out_dir, int threads, int* checks_passed,
                              int* checks_total);

/* Runs an invariant suite ("algebra", "spectrum", "oracle" or "all") and
 * writes a pass/fail report into buf (always NUL-terminated). */
rdkp_status rdkp_verify(const char* suite, char* buf, size_t buf_len, int* num_passed,
                        int* num_failed);

/* Kemmer-algebra summary under one signature (mostly_plus = 0 for
 * diag(+,-,-,-)): number of index triples with exactly zero residual and
 * the largest residual entry. */
rdkp_status rdkp_kemmer_summary(int mostly_plus, int* zero_triples, double* max_abs_residual);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* RAINBOW_DKP_H */
