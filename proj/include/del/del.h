//------------------------------------------------------------------------------
//
//   Copyright 2026 The damped-euler-lab Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------
#ifndef DEL_DEL_H
#define DEL_DEL_H

/* C interface to the damped Euler toolkit. Every function returns a
 * del_status; on failure del_last_error() describes the problem for the
 * calling thread. Handles are opaque and released by their *_destroy call. */

#include <stddef.h>

#if defined(_WIN32)
#  define DEL_API __declspec(dllexport)
#elif defined(__GNUC__)
#  define DEL_API __attribute__((visibility("default")))
#else
#  define DEL_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum del_status
{
  DEL_OK                     = 0,
  DEL_ERR_DOMAIN             = 1,
  DEL_ERR_NON_CONVERGENCE    = 2,
  DEL_ERR_OUT_OF_RANGE       = 3,
  DEL_ERR_GRID_TOO_SMALL     = 4,
  DEL_ERR_CFL_VIOLATION      = 5,
  DEL_ERR_NON_FINITE         = 6,
  DEL_ERR_ALL_VACUUM         = 7,
  DEL_ERR_PARSE              = 8,
  DEL_ERR_UNKNOWN_KEY        = 9,
  DEL_ERR_MISSING_KEY        = 10,
  DEL_ERR_IO                 = 11,
  DEL_ERR_MASS_MISMATCH      = 12,
  DEL_ERR_INSUFFICIENT_SNAPS = 13,
  DEL_ERR_GRID_MISMATCH      = 14,
  DEL_ERR_STEP_UNDERFLOW     = 15,
  DEL_ERR_INVALID_ARGUMENT   = 16,
  DEL_ERR_OVERFLOW           = 17,
  DEL_ERR_NULL_ARGUMENT      = 98,
  DEL_ERR_INTERNAL           = 99
} del_status;

typedef struct del_tau      del_tau;
typedef struct del_gaussian del_gaussian;
typedef struct del_field    del_field;
typedef struct del_rescaled del_rescaled;
typedef struct del_report   del_report;

DEL_API char const *del_version(void);
DEL_API char const *del_last_error(void);
DEL_API char const *del_status_name(del_status status);

/* special functions */
DEL_API del_status del_log_gamma(double x, double *out);
DEL_API del_status del_wallis(double p, double *out);
DEL_API del_status del_kummer_m(double a, double b, double z, double *out);
DEL_API del_status del_kummer_m_scaled(double a, double b, double z, double *out);
DEL_API del_status del_tricomi_u(double a, double b, double z, double *out);
DEL_API del_status del_f1(double t, double *out);
DEL_API del_status del_f2(double t, double *out);
DEL_API del_status del_f2_scaled(double t, double *out);
DEL_API del_status del_wronskian_scaled(double t, double *out);

/* Barenblatt profiles */
DEL_API del_status del_barenblatt_coefficients(double gamma, double lambda, double *A, double *B);
DEL_API del_status del_barenblatt_density(double gamma, double lambda, double t, double x,
                                          double *out);
DEL_API del_status del_limit_gap(double gamma, double lambda, double *out);

/* dispersion trajectory tau'' = 2 alpha0 / tau - tau', tau(0) = 1, tau'(0) = beta0 */
DEL_API del_status del_tau_create(double alpha0, double beta0, double t_end, double tolerance,
                                  del_tau **out);
DEL_API del_status del_tau_eval(del_tau const *tau, double t, double *value, double *derivative);
DEL_API void       del_tau_destroy(del_tau *tau);

/* exact Gaussian solutions; state = {alpha, beta, b, c, xbar} */
DEL_API del_status del_gaussian_create(double alpha0, double beta0, double b0, double c0,
                                       double x0, double t_end, del_gaussian **out);
DEL_API del_status del_gaussian_state(del_gaussian const *g, double t, double state[5]);
DEL_API del_status del_gaussian_field(del_gaussian const *g, double t, double x_min, double x_max,
                                      int n_cells, del_field **out);
DEL_API void       del_gaussian_destroy(del_gaussian *g);

/* grid fields */
DEL_API del_status del_field_create(double x_min, double x_max, int n_cells, double gamma,
                                    double const *rho, double const *m, del_field **out);
DEL_API del_status del_field_size(del_field const *f, size_t *n);
DEL_API del_status del_field_time(del_field const *f, double *t);
DEL_API del_status del_field_copy(del_field const *f, double *rho, double *m);
DEL_API del_status del_field_mass(del_field const *f, double *mass);
DEL_API void       del_field_destroy(del_field *f);

/* solver */
DEL_API del_status del_cfl_dt(del_field const *f, double cfl, double *dt);
DEL_API del_status del_step(del_field const *f, double dt, del_field **out);

/* diagnostics; moments = {I1, I2, J1, J2}, energies = {E, E_kin, E_plus, rel_entropy} */
DEL_API del_status del_rescale(del_field const *f, double tau, double tau_dot, del_rescaled **out);
DEL_API del_status del_moments(del_rescaled const *r, double moments[4]);
DEL_API del_status del_energies(del_rescaled const *r, double energies[4]);
DEL_API del_status del_ck_gap(del_rescaled const *r, double *gap);
DEL_API void       del_rescaled_destroy(del_rescaled *r);

/* experiments. subcommand may be NULL; otherwise it must agree with the
 * config's name (a config without a name takes it). out_root may be NULL to
 * use the config's `out` key. Configuration problems are reported before any
 * file is written. */
DEL_API del_status  del_experiment_run(char const *subcommand, char const *config_text,
                                       char const *out_root, del_report **out);
DEL_API int         del_report_passed(del_report const *r);
DEL_API size_t      del_report_check_count(del_report const *r);
DEL_API del_status  del_report_check(del_report const *r, size_t index, char const **name,
                                     char const **verdict, char const **detail);
DEL_API char const *del_report_summary(del_report const *r);
DEL_API char const *del_report_output_dir(del_report const *r);
DEL_API void        del_report_destroy(del_report *r);

/* nonzero for statuses that stem from the configuration rather than the run */
DEL_API int del_status_is_config_error(del_status status);

#ifdef __cplusplus
}
#endif

#endif
