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
#pragma once

// Dispersion rate tau'' = 2 alpha0 / tau - tau' and the exact Gaussian
// solutions of the damped isothermal Euler system built on it:
//   rho(t, x) = b(t) exp(-alpha(t) (x - xbar(t))^2),  m = (beta(t) x + c(t)) rho.

#include "grid.hpp"

#include <span>
#include <vector>

namespace del::gaussdyn {

struct TauConfig
{
  double alpha0    = 1.0;
  double beta0     = 0.0;
  double t_end     = 1.0;
  double tolerance = 1e-10;
};

/// Dense solution of the tau ODE with tau(0) = 1, tau'(0) = beta0. Samples
/// are stored on a grid with spacing proportional to max(1, t); cubic
/// Hermite interpolation on (tau, tau') fills in between.
class TauTrajectory
{
public:
  struct Sample
  {
    double t;
    double tau;
    double tau_dot;
  };

  struct Point
  {
    double tau;
    double tau_dot;
    double tau_ddot;  // derivative of the tau' interpolant
  };

  TauTrajectory() = default;

  double alpha0() const
  {
    return alpha0_;
  }
  double beta0() const
  {
    return beta0_;
  }
  double t_end() const
  {
    return samples_.empty() ? 0.0 : samples_.back().t;
  }
  std::span<Sample const> samples() const
  {
    return samples_;
  }
  static constexpr int interpolation_order()
  {
    return 3;
  }

  /// Throws Errc::out_of_range outside [0, t_end].
  Point  eval(double t) const;
  double tau(double t) const
  {
    return eval(t).tau;
  }
  double tau_dot(double t) const
  {
    return eval(t).tau_dot;
  }

  double min_tau() const;

private:
  friend TauTrajectory integrate_tau(TauConfig const &cfg);

  double              alpha0_ = 1.0;
  double              beta0_  = 0.0;
  std::vector<Sample> samples_;
};

TauTrajectory integrate_tau(TauConfig const &cfg);

/// Relative sample spacing used by integrate_tau for a given tolerance.
double tau_sample_spacing(double tolerance);

/// Initial Gaussian: rho0 = b0 exp(-alpha0 (x - x0)^2), m0 = (beta0 x + c0) rho0.
struct GaussianInit
{
  double alpha0 = 1.0;
  double beta0  = 0.0;
  double b0     = 1.0;
  double c0     = 0.0;
  double x0     = 0.0;
};

struct GaussianState
{
  double alpha;
  double beta;
  double b;
  double c;
  double xbar;
};

class GaussianParams
{
public:
  GaussianParams(GaussianInit const &init, double t_end, double tolerance = 1e-10);

  GaussianInit const &init() const
  {
    return init_;
  }
  double alpha0() const
  {
    return init_.alpha0;
  }
  double beta0() const
  {
    return init_.beta0;
  }
  double b0() const
  {
    return init_.b0;
  }
  double c0() const
  {
    return init_.c0;
  }
  double mass() const
  {
    return mass_;
  }
  double first_moment0() const
  {
    return first_moment0_;
  }
  double momentum0() const
  {
    return momentum0_;
  }
  TauTrajectory const &trajectory() const
  {
    return trajectory_;
  }

private:
  GaussianInit  init_;
  double        mass_;
  double        first_moment0_;
  double        momentum0_;
  TauTrajectory trajectory_;
};

GaussianState params_at(GaussianParams const &p, double t);

/// (int x rho0 + (1 - e^{-t}) int m0) / mass.
double center_xbar(GaussianParams const &p, double t);
double xbar_infinity(GaussianParams const &p);

double exact_density(GaussianParams const &p, double t, double x);
double exact_momentum(GaussianParams const &p, double t, double x);

/// Cell averages (4-point Gauss-Legendre per cell) of the exact solution.
/// Throws Errc::grid_too_small when the density at either domain end
/// exceeds 1e-12 of the peak.
GridField exact_state(GaussianParams const &p, double t, MeshSpec const &mesh,
                      double vacuum_floor = 0.0);

struct AnsatzResidual
{
  double res_continuity;
  double res_momentum;
};

/// Max-norm PDE residuals of exact_state by centered differences in t (step
/// h_t) and x, restricted to interior cells with rho >= 1e-10 of the peak.
AnsatzResidual ansatz_residual(GaussianParams const &p, double t, MeshSpec const &mesh,
                               double h_t);

}  // namespace del::gaussdyn
