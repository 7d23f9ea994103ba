/* cnsobs - spectral observer design and finite-volume validation for the
 * 1D compressible Navier-Stokes system.
 *
 * C interface of the shared library.  All functions return CNSOBS_OK (0) on
 * success or a nonzero status; cnsobs_last_error() returns a thread-local
 * message for the most recent failure on the calling thread.  Objects are
 * opaque handles released with the matching _destroy function.
 */
#ifndef CNSOBS_H
#define CNSOBS_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  CNSOBS_OK = 0,
  CNSOBS_EINVAL = 1,  /* invalid argument / precondition violated */
  CNSOBS_EPARSE = 2,  /* config text could not be parsed */
  CNSOBS_ERUNTIME = 3,/* solver or analysis failure */
  CNSOBS_EIO = 4      /* file system failure */
} cnsobs_status;

typedef struct cnsobs_params cnsobs_params;
typedef struct cnsobs_kernels cnsobs_kernels;
typedef struct cnsobs_scenario cnsobs_scenario;
typedef struct cnsobs_table cnsobs_table;

typedef enum {
  CNSOBS_OBSERVE_VELOCITY = 0,
  CNSOBS_OBSERVE_DENSITY = 1
} cnsobs_observed;

const char* cnsobs_version(void);
const char* cnsobs_last_error(void);

/* ---- fluid parameters and spectral constants ---- */

int cnsobs_params_create(double gamma, double mu, double lambda, double rho0,
                         int dim, cnsobs_params** out);
void cnsobs_params_destroy(cnsobs_params* p);

/* out[0..7] = c1, c2, c3, Re c4, Im c4, Re c5, Im c5, nu */
int cnsobs_constants(const cnsobs_params* p, double out[8]);

/* ---- feedback kernels ---- */

/* constant coefficients on modes 1 <= |k| <= kmax */
int cnsobs_kernels_flat(cnsobs_observed target, double coeff_rho,
                        double coeff_u, int kmax, int allow_negative,
                        cnsobs_kernels** out);
/* closed-form design for a prescribed decay rate up to mode cutoff */
int cnsobs_kernels_design(const cnsobs_params* p, cnsobs_observed target,
                          double rate, double cutoff, cnsobs_kernels** out);
int cnsobs_kernels_get(const cnsobs_kernels* k, const int* wave, int dim,
                       double* coeff_rho, double* coeff_u);
void cnsobs_kernels_destroy(cnsobs_kernels* k);

/* ---- closed-form mode theory ---- */

typedef struct {
  double lambda_diff;     /* diffusion eigenvalue; meaningful when has_diff */
  double lambda_plus_re, lambda_plus_im;
  double lambda_minus_re, lambda_minus_im;
  double discriminant;
  double decay_rate;
  double period;          /* meaningful when has_period */
  int has_diff;
  int has_period;
} cnsobs_mode_eigen;

int cnsobs_eigen_closed_form(const cnsobs_params* p, const cnsobs_kernels* k,
                             const int* wave, int dim, cnsobs_mode_eigen* out);

int cnsobs_optimal_nudging(const cnsobs_params* p, const int* wave, int dim,
                           cnsobs_observed observed, double* coefficient,
                           double* rate);

/* out[0..3] = A, B, velocity amplitude D, density amplitude E */
int cnsobs_forced_amplitude(const cnsobs_params* p, const cnsobs_kernels* k,
                            int mode, double amplitude, double frequency,
                            double out[4]);

int cnsobs_partial_obs_rate(const cnsobs_params* p, double phi_u, double L,
                            int mode, double* rate);

/* ---- scenario harness ---- */

/* id_or_path is either a scenario id (table1, table2, partial_obs,
 * partial_obs_mean_fix, forced, nonlinear, density_obs, kernel_design_demo)
 * for built-in defaults, or a path to a key-value config file. */
int cnsobs_scenario_create(const char* id_or_path, cnsobs_scenario** out);
int cnsobs_scenario_set(cnsobs_scenario* s, const char* key, const char* value);
/* serialized config; returns required size (excluding NUL) via *needed */
int cnsobs_scenario_serialize(const cnsobs_scenario* s, char* buf, size_t cap,
                              size_t* needed);
/* runs the sweep; writes CSV data under out_dir when out_dir != NULL */
int cnsobs_scenario_run(const cnsobs_scenario* s, const char* out_dir,
                        int workers, cnsobs_table** out);
void cnsobs_scenario_destroy(cnsobs_scenario* s);

int cnsobs_table_shape(const cnsobs_table* t, int* rows, int* cols);
const char* cnsobs_table_column(const cnsobs_table* t, int col);
int cnsobs_table_cell(const cnsobs_table* t, int row, int col, double* value);
/* "ok" or the failure message of that sweep row */
const char* cnsobs_table_row_status(const cnsobs_table* t, int row);
void cnsobs_table_destroy(cnsobs_table* t);

#ifdef __cplusplus
}
#endif

#endif /* CNSOBS_H */
