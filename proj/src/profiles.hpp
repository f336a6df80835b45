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

// Self-similar Barenblatt profiles of the porous-medium equation
// d_t rho = d_xx rho^gamma and their gamma -> 1 Gaussian limit.

namespace del::profiles {

/// [A - B xi^2]_+^{1/(gamma-1)} with total mass lambda. Build through
/// barenblatt_coefficients(); A is held in log form to survive gamma ~ 1.
struct BarenblattProfile
{
  double gamma;
  double lambda;
  double A;
  double B;
  double log_A;

  double support_edge() const;
};

BarenblattProfile barenblatt_coefficients(double gamma, double lambda);

/// Residual of the mass constraint 2 A^{(g+1)/(2(g-1))} B^{-1/2} W_{(g+1)/(g-1)} = lambda,
/// relative to lambda, evaluated in the log domain.
double barenblatt_mass_residual(BarenblattProfile const &p);

double barenblatt_shape(BarenblattProfile const &p, double xi);

/// Self-similar solution with the Dirac initial mass placed at t = -1.
double barenblatt_density(BarenblattProfile const &p, double t, double x);

/// Darcy momentum -d_x(rho^gamma) of the Barenblatt density; equals
/// x rho / ((gamma + 1)(1 + t)).
double barenblatt_momentum(BarenblattProfile const &p, double t, double x);

double gaussian_limit(double lambda, double xi);

struct SamplingGrid
{
  double xi_min = -8.0;
  double xi_max = 8.0;
  int    points = 20001;
};

/// sup over the grid of |B_gamma(xi) - gaussian_limit(lambda, xi)|.
double limit_gap(double gamma, double lambda, SamplingGrid const &grid = {});

}  // namespace del::profiles
