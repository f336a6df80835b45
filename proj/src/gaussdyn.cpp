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
#include "gaussdyn.hpp"

#include "error.hpp"
#include "ode.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

namespace del::gaussdyn {
namespace {

struct Hermite
{
  double value;
  double slope;
};

// Cubic Hermite on [0, h] at s = (t - t0) / h.
Hermite CubicHermite(double f0, double d0, double f1, double d1, double h, double s)
{
  double const s2 = s * s, s3 = s2 * s;
  double const h00 = 2 * s3 - 3 * s2 + 1, h10 = s3 - 2 * s2 + s;
  double const h01 = -2 * s3 + 3 * s2, h11 = s3 - s2;
  double const value = h00 * f0 + h10 * h * d0 + h01 * f1 + h11 * h * d1;
  double const g00 = 6 * s2 - 6 * s, g10 = 3 * s2 - 4 * s + 1;
  double const g01 = -6 * s2 + 6 * s, g11 = 3 * s2 - 2 * s;
  double const slope = (g00 * f0 + g01 * f1) / h + g10 * d0 + g11 * d1;
  return {value, slope};
}

// 4-point Gauss-Legendre on [-1, 1].
constexpr std::array<double, 4> kGaussNodes = {-0.8611363115940526, -0.3399810435848563,
                                               0.3399810435848563, 0.8611363115940526};
constexpr std::array<double, 4> kGaussWeights = {0.3478548451374538, 0.6521451548625461,
                                                 0.6521451548625461, 0.3478548451374538};

}  // namespace

double tau_sample_spacing(double tolerance)
{
  // keeps the cubic-Hermite derivative error at midpoints below the
  // integration tolerance; never coarser than 5% of max(1, t)
  return std::min(0.05, 0.2 * std::cbrt(tolerance));
}

TauTrajectory integrate_tau(TauConfig const &cfg)
{
  if (!(cfg.alpha0 > 0.0) || !std::isfinite(cfg.beta0) || !(cfg.t_end >= 0.0) ||
      !(cfg.tolerance > 0.0))
  {
    Fail(Errc::invalid_argument, "integrate_tau: need alpha0 > 0, t_end >= 0, tolerance > 0");
  }
  double const alpha0 = cfg.alpha0;
  auto         rhs    = [alpha0](double, ode::State<2> const &y) -> ode::State<2> {
    return {y[1], 2.0 * alpha0 / y[0] - y[1]};
  };
  ode::StepperOptions opt;
  opt.rtol   = cfg.tolerance;
  opt.atol   = cfg.tolerance;
  opt.h_init = 1e-3;
  auto stepper = ode::MakeStepper<2>(rhs, 0.0, ode::State<2>{1.0, cfg.beta0}, opt);

  TauTrajectory traj;
  traj.alpha0_ = cfg.alpha0;
  traj.beta0_  = cfg.beta0;
  traj.samples_.push_back({0.0, 1.0, cfg.beta0});

  double const q = tau_sample_spacing(cfg.tolerance);
  double       t = 0.0;
  while (t < cfg.t_end)
  {
    t = std::min(cfg.t_end, t + q * std::max(1.0, t));
    stepper.advance_to(t);
    auto const &y = stepper.y();
    if (!(y[0] > 0.0) || !std::isfinite(y[0]) || !std::isfinite(y[1]))
    {
      Fail(Errc::non_finite, "integrate_tau: tau left the positive reals");
    }
    traj.samples_.push_back({t, y[0], y[1]});
  }
  return traj;
}

TauTrajectory::Point TauTrajectory::eval(double t) const
{
  if (samples_.empty())
  {
    Fail(Errc::out_of_range, "tau trajectory is empty");
  }
  double const t_max = samples_.back().t;
  double const slack = 1e-12 * std::max(1.0, t_max);
  if (!(t >= -slack) || !(t <= t_max + slack))
  {
    Fail(Errc::out_of_range, "tau trajectory: time " + std::to_string(t) + " outside [0, " +
                                 std::to_string(t_max) + "]");
  }
  auto ddot = [this](Sample const &s) { return 2.0 * alpha0_ / s.tau - s.tau_dot; };
  if (samples_.size() == 1)
  {
    Sample const &s = samples_.front();
    return {s.tau, s.tau_dot, ddot(s)};
  }
  t        = std::clamp(t, 0.0, t_max);
  auto it  = std::upper_bound(samples_.begin(), samples_.end(), t,
                              [](double v, Sample const &s) { return v < s.t; });
  auto idx = static_cast<std::size_t>(std::distance(samples_.begin(), it));
  idx      = std::clamp<std::size_t>(idx, 1, samples_.size() - 1);
  Sample const &s0 = samples_[idx - 1];
  Sample const &s1 = samples_[idx];
  double const  h  = s1.t - s0.t;
  double const  s  = (t - s0.t) / h;
  Hermite const pos = CubicHermite(s0.tau, s0.tau_dot, s1.tau, s1.tau_dot, h, s);
  Hermite const vel = CubicHermite(s0.tau_dot, ddot(s0), s1.tau_dot, ddot(s1), h, s);
  return {pos.value, vel.value, vel.slope};
}

double TauTrajectory::min_tau() const
{
  double v = samples_.empty() ? 0.0 : samples_.front().tau;
  for (Sample const &s : samples_)
  {
    v = std::min(v, s.tau);
  }
  return v;
}

GaussianParams::GaussianParams(GaussianInit const &init, double t_end, double tolerance)
  : init_(init)
{
  if (!(init.alpha0 > 0.0) || !(init.b0 > 0.0) || !std::isfinite(init.beta0) ||
      !std::isfinite(init.c0) || !std::isfinite(init.x0))
  {
    Fail(Errc::invalid_argument, "gaussian: need alpha0 > 0 and b0 > 0");
  }
  mass_          = init.b0 * std::sqrt(std::numbers::pi / init.alpha0);
  first_moment0_ = mass_ * init.x0;
  momentum0_     = mass_ * (init.beta0 * init.x0 + init.c0);
  trajectory_    = integrate_tau({init.alpha0, init.beta0, t_end, tolerance});
}

double center_xbar(GaussianParams const &p, double t)
{
  return (p.first_moment0() - std::expm1(-t) * p.momentum0()) / p.mass();
}

double xbar_infinity(GaussianParams const &p)
{
  return (p.first_moment0() + p.momentum0()) / p.mass();
}

GaussianState params_at(GaussianParams const &p, double t)
{
  TauTrajectory::Point const tp = p.trajectory().eval(t);
  GaussianState              s;
  s.alpha = p.alpha0() / (tp.tau * tp.tau);
  s.beta  = tp.tau_dot / tp.tau;
  s.b     = p.b0() / tp.tau;
  s.xbar  = center_xbar(p, t);
  s.c     = std::exp(-t) * p.momentum0() / p.mass() - s.beta * s.xbar;
  return s;
}

double exact_density(GaussianParams const &p, double t, double x)
{
  GaussianState const s = params_at(p, t);
  double const        u = x - s.xbar;
  return s.b * std::exp(-s.alpha * u * u);
}

double exact_momentum(GaussianParams const &p, double t, double x)
{
  GaussianState const s = params_at(p, t);
  double const        u = x - s.xbar;
  return (s.beta * x + s.c) * s.b * std::exp(-s.alpha * u * u);
}

GridField exact_state(GaussianParams const &p, double t, MeshSpec const &mesh,
                      double vacuum_floor)
{
  mesh.validate();
  GaussianState const s = params_at(p, t);
  auto density = [&s](double x) { return s.b * std::exp(-s.alpha * (x - s.xbar) * (x - s.xbar)); };
  double const edge = std::max(density(mesh.x_min), density(mesh.x_max));
  if (edge > 1e-12 * s.b)
  {
    Fail(Errc::grid_too_small, "exact_state: Gaussian tail truncated at the domain boundary");
  }

  GridField    field(mesh, 1.0, t, vacuum_floor);
  double const dx = mesh.dx();
  for (std::size_t i = 0; i < field.size(); ++i)
  {
    double const xc = mesh.center(i);
    double       r = 0.0, mm = 0.0;
    for (std::size_t q = 0; q < kGaussNodes.size(); ++q)
    {
      double const x   = xc + 0.5 * dx * kGaussNodes[q];
      double const rho = density(x);
      r += 0.5 * kGaussWeights[q] * rho;
      mm += 0.5 * kGaussWeights[q] * (s.beta * x + s.c) * rho;
    }
    field.rho[i] = std::max(r, vacuum_floor);
    field.m[i]   = r > vacuum_floor ? mm : 0.0;
  }
  return field;
}

AnsatzResidual ansatz_residual(GaussianParams const &p, double t, MeshSpec const &mesh,
                               double h_t)
{
  if (!(h_t > 0.0) || t - h_t < 0.0)
  {
    Fail(Errc::invalid_argument, "ansatz_residual: need h_t > 0 and t - h_t >= 0");
  }
  GridField const now   = exact_state(p, t, mesh);
  GridField const ahead = exact_state(p, t + h_t, mesh);
  GridField const back  = exact_state(p, t - h_t, mesh);

  double const dx   = mesh.dx();
  double const peak = *std::max_element(now.rho.begin(), now.rho.end());
  auto         flux = [](GridField const &f, std::size_t i) {
    return f.m[i] * f.m[i] / f.rho[i] + f.rho[i];
  };

  AnsatzResidual res{0.0, 0.0};
  for (std::size_t i = 1; i + 1 < now.size(); ++i)
  {
    if (now.rho[i] < 1e-10 * peak || now.rho[i - 1] <= 0.0 || now.rho[i + 1] <= 0.0)
    {
      continue;
    }
    double const drho_dt = (ahead.rho[i] - back.rho[i]) / (2.0 * h_t);
    double const dm_dt   = (ahead.m[i] - back.m[i]) / (2.0 * h_t);
    double const dm_dx   = (now.m[i + 1] - now.m[i - 1]) / (2.0 * dx);
    double const dF_dx   = (flux(now, i + 1) - flux(now, i - 1)) / (2.0 * dx);
    res.res_continuity   = std::max(res.res_continuity, std::abs(drho_dt + dm_dx));
    res.res_momentum     = std::max(res.res_momentum, std::abs(dm_dt + dF_dx + now.m[i]));
  }
  return res;
}

}  // namespace del::gaussdyn
