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
#include "profiles.hpp"

#include "error.hpp"
#include "specfun.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace del::profiles {
namespace {

// Below this gamma - 1 the shape is evaluated entirely in the log domain.
constexpr double kLogPathThreshold = 1e-3;

void CheckProfileArgs(double gamma, double lambda)
{
  if (!(gamma > 1.0) || !std::isfinite(gamma))
  {
    Fail(Errc::domain, "barenblatt: gamma must be > 1");
  }
  if (!(lambda > 0.0) || !std::isfinite(lambda))
  {
    Fail(Errc::domain, "barenblatt: lambda must be > 0");
  }
}

}  // namespace

double BarenblattProfile::support_edge() const
{
  return std::sqrt(A / B);
}

BarenblattProfile barenblatt_coefficients(double gamma, double lambda)
{
  CheckProfileArgs(gamma, lambda);
  double const B     = (gamma - 1.0) / (2.0 * gamma * (gamma + 1.0));
  double const p     = (gamma + 1.0) / (gamma - 1.0);
  double const log_A = 2.0 * (gamma - 1.0) / (gamma + 1.0) *
                       (std::log(lambda) + 0.5 * std::log(B) - std::log(2.0) -
                        specfun::log_wallis(p));
  return {gamma, lambda, std::exp(log_A), B, log_A};
}

double barenblatt_mass_residual(BarenblattProfile const &p)
{
  double const g     = p.gamma;
  double const log_m = std::log(2.0) + (g + 1.0) / (2.0 * (g - 1.0)) * p.log_A -
                       0.5 * std::log(p.B) + specfun::log_wallis((g + 1.0) / (g - 1.0));
  return std::abs(std::expm1(log_m - std::log(p.lambda)));
}

double barenblatt_shape(BarenblattProfile const &p, double xi)
{
  double const ratio = p.B / p.A * xi * xi;
  if (ratio >= 1.0)
  {
    return 0.0;
  }
  double const inv = 1.0 / (p.gamma - 1.0);
  if (p.gamma - 1.0 < kLogPathThreshold)
  {
    return std::exp(inv * p.log_A + inv * std::log1p(-ratio));
  }
  return std::pow(p.A - p.B * xi * xi, inv);
}

double barenblatt_density(BarenblattProfile const &p, double t, double x)
{
  if (!(t >= 0.0))
  {
    Fail(Errc::domain, "barenblatt_density: requires t >= 0");
  }
  double const scale = std::pow(1.0 + t, -1.0 / (p.gamma + 1.0));
  return scale * barenblatt_shape(p, x * scale);
}

double barenblatt_momentum(BarenblattProfile const &p, double t, double x)
{
  return x * barenblatt_density(p, t, x) / ((p.gamma + 1.0) * (1.0 + t));
}

double gaussian_limit(double lambda, double xi)
{
  return lambda / (2.0 * std::sqrt(std::numbers::pi)) * std::exp(-0.25 * xi * xi);
}

double limit_gap(double gamma, double lambda, SamplingGrid const &grid)
{
  if (grid.points < 2 || !(grid.xi_max > grid.xi_min))
  {
    Fail(Errc::invalid_argument, "limit_gap: sampling grid needs >= 2 points");
  }
  BarenblattProfile const p   = barenblatt_coefficients(gamma, lambda);
  double const            dxi = (grid.xi_max - grid.xi_min) / (grid.points - 1);
  double                  gap = 0.0;
  for (int i = 0; i < grid.points; ++i)
  {
    double const xi = grid.xi_min + i * dxi;
    gap = std::max(gap, std::abs(barenblatt_shape(p, xi) - gaussian_limit(lambda, xi)));
  }
  return gap;
}

}  // namespace del::profiles
