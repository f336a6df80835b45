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
#include "del/del.h"

#include "../diagnostics.hpp"
#include "../error.hpp"
#include "../experiments.hpp"
#include "../gaussdyn.hpp"
#include "../profiles.hpp"
#include "../solver.hpp"
#include "../specfun.hpp"

#include <cmath>
#include <exception>
#include <new>
#include <string>

struct del_tau
{
  del::gaussdyn::TauTrajectory traj;
};

struct del_gaussian
{
  del::gaussdyn::GaussianParams params;
};

struct del_field
{
  del::GridField field;
};

struct del_rescaled
{
  del::diagnostics::RescaledField rf;
};

struct del_report
{
  del::expcli::RunReport report;
  std::string            summary;
  std::string            output_dir;
};

namespace {

thread_local std::string g_last_error;

del_status Record(del_status status, char const *what)
{
  g_last_error = what ? what : "";
  return status;
}

template <class F>
del_status Guard(F &&body)
{
  try
  {
    body();
    g_last_error.clear();
    return DEL_OK;
  }
  catch (del::Error const &e)
  {
    return Record(static_cast<del_status>(e.code()), e.what());
  }
  catch (std::bad_alloc const &)
  {
    return Record(DEL_ERR_INTERNAL, "out of memory");
  }
  catch (std::exception const &e)
  {
    return Record(DEL_ERR_INTERNAL, e.what());
  }
  catch (...)
  {
    return Record(DEL_ERR_INTERNAL, "unknown error");
  }
}

#define DEL_REQUIRE(ptr)                                                                  \
  do                                                                                      \
  {                                                                                       \
    if (!(ptr))                                                                           \
    {                                                                                     \
      return Record(DEL_ERR_NULL_ARGUMENT, "null argument: " #ptr);                      \
    }                                                                                     \
  } while (0)

template <class F>
del_status Scalar(double *out, F &&f)
{
  DEL_REQUIRE(out);
  return Guard([&] { *out = f(); });
}

}  // namespace

extern "C" {

char const *del_version(void)
{
  return del::expcli::kToolVersion;
}

char const *del_last_error(void)
{
  return g_last_error.c_str();
}

char const *del_status_name(del_status status)
{
  switch (status)
  {
  case DEL_OK: return "ok";
  case DEL_ERR_DOMAIN: return "domain";
  case DEL_ERR_NON_CONVERGENCE: return "non_convergence";
  case DEL_ERR_OUT_OF_RANGE: return "out_of_range";
  case DEL_ERR_GRID_TOO_SMALL: return "grid_too_small";
  case DEL_ERR_CFL_VIOLATION: return "cfl_violation";
  case DEL_ERR_NON_FINITE: return "non_finite";
  case DEL_ERR_ALL_VACUUM: return "all_vacuum";
  case DEL_ERR_PARSE: return "parse";
  case DEL_ERR_UNKNOWN_KEY: return "unknown_key";
  case DEL_ERR_MISSING_KEY: return "missing_key";
  case DEL_ERR_IO: return "io";
  case DEL_ERR_MASS_MISMATCH: return "mass_mismatch";
  case DEL_ERR_INSUFFICIENT_SNAPS: return "insufficient_snapshots";
  case DEL_ERR_GRID_MISMATCH: return "grid_mismatch";
  case DEL_ERR_STEP_UNDERFLOW: return "step_underflow";
  case DEL_ERR_INVALID_ARGUMENT: return "invalid_argument";
  case DEL_ERR_OVERFLOW: return "overflow";
  case DEL_ERR_NULL_ARGUMENT: return "null_argument";
  case DEL_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

int del_status_is_config_error(del_status status)
{
  return status == DEL_ERR_PARSE || status == DEL_ERR_UNKNOWN_KEY ||
         status == DEL_ERR_MISSING_KEY || status == DEL_ERR_INVALID_ARGUMENT ||
         status == DEL_ERR_NULL_ARGUMENT;
}

/* special functions */

del_status del_log_gamma(double x, double *out)
{
  return Scalar(out, [&] { return del::specfun::log_gamma(x); });
}

del_status del_wallis(double p, double *out)
{
  return Scalar(out, [&] { return del::specfun::wallis(p); });
}

del_status del_kummer_m(double a, double b, double z, double *out)
{
  return Scalar(out, [&] { return del::specfun::kummer_m({a, b, z}); });
}

del_status del_kummer_m_scaled(double a, double b, double z, double *out)
{
  return Scalar(out, [&] { return del::specfun::kummer_m_scaled({a, b, z}); });
}

del_status del_tricomi_u(double a, double b, double z, double *out)
{
  return Scalar(out, [&] { return del::specfun::tricomi_u({a, b, z}); });
}

del_status del_f1(double t, double *out)
{
  return Scalar(out, [&] { return del::specfun::f1(t); });
}

del_status del_f2(double t, double *out)
{
  return Scalar(out, [&] { return del::specfun::f2(t); });
}

del_status del_f2_scaled(double t, double *out)
{
  return Scalar(out, [&] { return del::specfun::f2_scaled(t); });
}

del_status del_wronskian_scaled(double t, double *out)
{
  return Scalar(out, [&] { return del::specfun::wronskian_scaled(t); });
}

/* profiles */

del_status del_barenblatt_coefficients(double gamma, double lambda, double *A, double *B)
{
  DEL_REQUIRE(A);
  DEL_REQUIRE(B);
  return Guard([&] {
    auto const p = del::profiles::barenblatt_coefficients(gamma, lambda);
    *A           = p.A;
    *B           = p.B;
  });
}

del_status del_barenblatt_density(double gamma, double lambda, double t, double x, double *out)
{
  return Scalar(out, [&] {
    return del::profiles::barenblatt_density(del::profiles::barenblatt_coefficients(gamma, lambda),
                                             t, x);
  });
}

del_status del_limit_gap(double gamma, double lambda, double *out)
{
  return Scalar(out, [&] { return del::profiles::limit_gap(gamma, lambda); });
}

/* tau */

del_status del_tau_create(double alpha0, double beta0, double t_end, double tolerance, del_tau **out)
{
  DEL_REQUIRE(out);
  *out = nullptr;
  return Guard([&] { *out = new del_tau{del::gaussdyn::integrate_tau({alpha0, beta0, t_end, tolerance})}; });
}

del_status del_tau_eval(del_tau const *tau, double t, double *value, double *derivative)
{
  DEL_REQUIRE(tau);
  DEL_REQUIRE(value);
  return Guard([&] {
    auto const p = tau->traj.eval(t);
    *value       = p.tau;
    if (derivative)
    {
      *derivative = p.tau_dot;
    }
  });
}

void del_tau_destroy(del_tau *tau)
{
  delete tau;
}

/* gaussian */

del_status del_gaussian_create(double alpha0, double beta0, double b0, double c0, double x0,
                               double t_end, del_gaussian **out)
{
  DEL_REQUIRE(out);
  *out = nullptr;
  return Guard([&] {
    *out = new del_gaussian{del::gaussdyn::GaussianParams({alpha0, beta0, b0, c0, x0}, t_end)};
  });
}

del_status del_gaussian_state(del_gaussian const *g, double t, double state[5])
{
  DEL_REQUIRE(g);
  DEL_REQUIRE(state);
  return Guard([&] {
    auto const s = del::gaussdyn::params_at(g->params, t);
    state[0]     = s.alpha;
    state[1]     = s.beta;
    state[2]     = s.b;
    state[3]     = s.c;
    state[4]     = s.xbar;
  });
}

del_status del_gaussian_field(del_gaussian const *g, double t, double x_min, double x_max,
                              int n_cells, del_field **out)
{
  DEL_REQUIRE(g);
  DEL_REQUIRE(out);
  *out = nullptr;
  return Guard([&] {
    *out = new del_field{del::gaussdyn::exact_state(g->params, t, {x_min, x_max, n_cells})};
  });
}

void del_gaussian_destroy(del_gaussian *g)
{
  delete g;
}

/* fields */

del_status del_field_create(double x_min, double x_max, int n_cells, double gamma,
                            double const *rho, double const *m, del_field **out)
{
  DEL_REQUIRE(rho);
  DEL_REQUIRE(m);
  DEL_REQUIRE(out);
  *out = nullptr;
  return Guard([&] {
    del::MeshSpec const mesh{x_min, x_max, n_cells};
    mesh.validate();
    del::GridField field(mesh, gamma);
    field.rho.assign(rho, rho + n_cells);
    field.m.assign(m, m + n_cells);
    field.validate();
    *out = new del_field{std::move(field)};
  });
}

del_status del_field_size(del_field const *f, size_t *n)
{
  DEL_REQUIRE(f);
  DEL_REQUIRE(n);
  *n = f->field.size();
  return DEL_OK;
}

del_status del_field_time(del_field const *f, double *t)
{
  DEL_REQUIRE(f);
  DEL_REQUIRE(t);
  *t = f->field.time;
  return DEL_OK;
}

del_status del_field_copy(del_field const *f, double *rho, double *m)
{
  DEL_REQUIRE(f);
  for (size_t i = 0; i < f->field.size(); ++i)
  {
    if (rho)
    {
      rho[i] = f->field.rho[i];
    }
    if (m)
    {
      m[i] = f->field.m[i];
    }
  }
  return DEL_OK;
}

del_status del_field_mass(del_field const *f, double *mass)
{
  DEL_REQUIRE(f);
  return Scalar(mass, [&] { return f->field.mass(); });
}

void del_field_destroy(del_field *f)
{
  delete f;
}

/* solver */

del_status del_cfl_dt(del_field const *f, double cfl, double *dt)
{
  DEL_REQUIRE(f);
  return Scalar(dt, [&] { return del::solver::cfl_dt(f->field, cfl); });
}

del_status del_step(del_field const *f, double dt, del_field **out)
{
  DEL_REQUIRE(f);
  DEL_REQUIRE(out);
  *out = nullptr;
  return Guard([&] { *out = new del_field{del::solver::step(f->field, dt)}; });
}

/* diagnostics */

del_status del_rescale(del_field const *f, double tau, double tau_dot, del_rescaled **out)
{
  DEL_REQUIRE(f);
  DEL_REQUIRE(out);
  *out = nullptr;
  return Guard([&] { *out = new del_rescaled{del::diagnostics::rescale(f->field, tau, tau_dot)}; });
}

del_status del_moments(del_rescaled const *r, double moments[4])
{
  DEL_REQUIRE(r);
  DEL_REQUIRE(moments);
  return Guard([&] {
    auto const m = del::diagnostics::moments(r->rf);
    moments[0]   = m.I1;
    moments[1]   = m.I2;
    moments[2]   = m.J1;
    moments[3]   = m.J2;
  });
}

del_status del_energies(del_rescaled const *r, double energies[4])
{
  DEL_REQUIRE(r);
  DEL_REQUIRE(energies);
  return Guard([&] {
    auto const e = del::diagnostics::energies(r->rf);
    energies[0]  = e.E;
    energies[1]  = e.E_kin;
    energies[2]  = e.E_plus;
    energies[3]  = e.rel_entropy;
  });
}

del_status del_ck_gap(del_rescaled const *r, double *gap)
{
  DEL_REQUIRE(r);
  return Scalar(gap, [&] { return del::diagnostics::csiszar_kullback_gap(r->rf); });
}

void del_rescaled_destroy(del_rescaled *r)
{
  delete r;
}

/* experiments */

del_status del_experiment_run(char const *subcommand, char const *config_text, char const *out_root,
                              del_report **out)
{
  DEL_REQUIRE(config_text);
  DEL_REQUIRE(out);
  *out = nullptr;
  return Guard([&] {
    std::string const sub  = subcommand ? subcommand : "";
    auto const        spec = del::expcli::parse_config(config_text, sub);
    if (!sub.empty() && spec.name != sub)
    {
      del::Fail(del::Errc::invalid_argument,
                "config is for experiment '" + spec.name + "', not '" + sub + "'");
    }
    auto report = out_root ? del::expcli::run(spec, out_root) : del::expcli::run(spec);
    auto *r     = new del_report{std::move(report), {}, {}};
    r->summary    = r->report.summary();
    r->output_dir = r->report.output_dir.string();
    *out          = r;
  });
}

int del_report_passed(del_report const *r)
{
  return r && r->report.passed() ? 1 : 0;
}

size_t del_report_check_count(del_report const *r)
{
  return r ? r->report.checks.size() : 0;
}

del_status del_report_check(del_report const *r, size_t index, char const **name,
                            char const **verdict, char const **detail)
{
  DEL_REQUIRE(r);
  if (index >= r->report.checks.size())
  {
    return Record(DEL_ERR_OUT_OF_RANGE, "check index out of range");
  }
  auto const &c = r->report.checks[index];
  if (name)
  {
    *name = c.name.c_str();
  }
  if (verdict)
  {
    *verdict = del::expcli::verdict_name(c.verdict);
  }
  if (detail)
  {
    *detail = c.detail.c_str();
  }
  return DEL_OK;
}

char const *del_report_summary(del_report const *r)
{
  return r ? r->summary.c_str() : "";
}

char const *del_report_output_dir(del_report const *r)
{
  return r ? r->output_dir.c_str() : "";
}

void del_report_destroy(del_report *r)
{
  delete r;
}

}  // extern "C"
