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

// Special-function kernels: log-gamma, Wallis integrals, the confluent
// hypergeometric functions M (Kummer) and U (Tricomi), and the two
// fundamental solutions of  t f'' + t f' + f/4 = 0  built from them.

#include <functional>

namespace del::specfun {

/// ln Gamma(x) for x > 0 (Lanczos, g = 7).
double log_gamma(double x);

/// W_p = integral of cos^p over [0, pi/2], p >= 0.
double wallis(double p);
double log_wallis(double p);

struct KummerArgs
{
  double a;
  double b;  // not 0, -1, -2, ...
  double z;
};

/// M(a, b, z) by its power series; throws Errc::overflow when z is too large
/// for the unscaled value to be representable.
double kummer_m(KummerArgs const &args);

/// e^{-z} M(a, b, z) for z >= 0, finite for arbitrarily large z.
double kummer_m_scaled(KummerArgs const &args);

struct TricomiValue
{
  double u;   // U(a, b, z)
  double du;  // dU/dz
};

/// U(a, b, z) for z > 0.
double       tricomi_u(KummerArgs const &args);
TricomiValue tricomi_u_with_derivative(KummerArgs const &args);

/// Anchor beyond which U is taken from its asymptotic series.
inline constexpr double kTricomiAnchor = 50.0;

// Fundamental solutions of t f'' + t f' + f/4 = 0:
//   f1(t) = t e^{-t} M(3/4, 2, t) = t M(5/4, 2, -t)
//   f2(t) = t e^{-t} U(3/4, 2, t)
double f1(double t);
double f1_reflected(double t);  // the t M(5/4, 2, -t) route
double f1_derivative(double t);
double f2(double t);
double f2_derivative(double t);

/// e^{t} f2(t) = t U(3/4, 2, t); stays representable where f2 underflows.
double f2_scaled(double t);

/// W(t) = f1 f2' - f1' f2, and e^{t} W(t) computed without underflow.
double wronskian(double t);
double wronskian_scaled(double t);

/// |t f'' + t f' + f/4| at t by centered differences of step h (t > 2h > 0).
double kummer_ode_residual(std::function<double(double)> const &f, double t, double h);

}  // namespace del::specfun
