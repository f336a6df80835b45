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
#include "specfun.hpp"

#include "error.hpp"
#include "ode.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

namespace del::specfun {
namespace {

constexpr long kSeriesCap = 1'000'000;

// Lanczos coefficients for g = 7, n = 9 (P. Godfrey, as tabulated in
// W. H. Press et al., Numerical Recipes, 3rd ed., and widely reproduced).
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

bool IsNonPositiveInteger(double v)
{
  return v <= 0.0 && v == std::floor(v);
}

void CheckB(double b)
{
  if (IsNonPositiveInteger(b) || !std::isfinite(b))
  {
    Fail(Errc::domain, "kummer: b must not be a nonpositive integer");
  }
}

struct SeriesResult
{
  double sum;
  double max_term;
};

// Direct power series sum_n (a)_n z^n / ((b)_n n!) with Neumaier summation.
SeriesResult KummerSeries(double a, double b, double z)
{
  double sum = 1.0, comp = 0.0, term = 1.0, max_term = 1.0;
  for (long n = 0; n < kSeriesCap; ++n)
  {
    double const ratio = (a + n) / (b + n) * z / (n + 1.0);
    term *= ratio;
    double const t = sum + term;
    comp += std::abs(sum) >= std::abs(term) ? (sum - t) + term : (term - t) + sum;
    sum = t;
    max_term = std::max(max_term, std::abs(term));
    if (term == 0.0)
    {
      return {sum + comp, max_term};
    }
    // stop once the terms are decreasing and negligible
    if (std::abs(ratio) < 1.0 && std::abs(term) <= 1e-17 * std::abs(sum + comp))
    {
      return {sum + comp, max_term};
    }
    if (!std::isfinite(sum))
    {
      Fail(Errc::overflow, "kummer_m: series overflow");
    }
  }
  Fail(Errc::non_convergence, "kummer_m: series did not converge");
}

// Large-z asymptotic series for e^{-z} M(a, b, z) (Abramowitz & Stegun 13.5.1,
// dropping the exponentially small branch).
double KummerScaledAsymptotic(double a, double b, double z)
{
  double sum = 1.0, term = 1.0, last = 1.0;
  for (int n = 0; n < 200; ++n)
  {
    term *= (b - a + n) * (1.0 - a + n) / ((n + 1.0) * z);
    if (std::abs(term) > std::abs(last) && n > 2)
    {
      break;
    }
    sum += term;
    last = term;
    if (std::abs(term) <= 1e-17 * std::abs(sum))
    {
      break;
    }
  }
  double const log_pref = log_gamma(b) - log_gamma(a) + (a - b) * std::log(z);
  return std::exp(log_pref) * sum;
}

// z^{-a} sum_n (a)_n (a-b+1)_n / n! (-1/z)^n, truncated at its smallest term.
double TricomiAsymptotic(double a, double b, double z)
{
  double sum = 1.0, term = 1.0, last = 1.0;
  bool   converged = false;
  for (int n = 0; n < 1000; ++n)
  {
    term *= -(a + n) * (a - b + 1.0 + n) / ((n + 1.0) * z);
    if (term == 0.0)
    {
      converged = true;
      break;
    }
    if (std::abs(term) > std::abs(last))
    {
      converged = std::abs(last) <= 1e-13 * std::abs(sum);
      break;
    }
    sum += term;
    last = term;
    if (std::abs(term) <= 1e-17 * std::abs(sum))
    {
      converged = true;
      break;
    }
  }
  if (!converged)
  {
    Fail(Errc::non_convergence, "tricomi_u: asymptotic series did not reach tolerance");
  }
  return std::pow(z, -a) * sum;
}

}  // namespace

double log_gamma(double x)
{
  if (!(x > 0.0) || !std::isfinite(x))
  {
    Fail(Errc::domain, "log_gamma: argument must be positive, got " + std::to_string(x));
  }
  if (x < 0.5)
  {
    // Gamma(x) = Gamma(x + 1) / x
    return log_gamma(x + 1.0) - std::log(x);
  }
  double const z = x - 1.0;
  double       s = kLanczos[0];
  for (std::size_t k = 1; k < kLanczos.size(); ++k)
  {
    s += kLanczos[k] / (z + static_cast<double>(k));
  }
  double const t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(s);
}

double log_wallis(double p)
{
  if (!(p >= 0.0) || !std::isfinite(p))
  {
    Fail(Errc::domain, "wallis: index must be nonnegative");
  }
  return std::log(0.5 * std::sqrt(std::numbers::pi)) + log_gamma(0.5 * (p + 1.0)) -
         log_gamma(0.5 * p + 1.0);
}

double wallis(double p)
{
  return std::exp(log_wallis(p));
}

double kummer_m(KummerArgs const &args)
{
  auto const [a, b, z] = args;
  CheckB(b);
  if (z == 0.0 || a == 0.0)
  {
    return 1.0;
  }
  if (z > 700.0 && !IsNonPositiveInteger(a))
  {
    Fail(Errc::overflow, "kummer_m: value not representable; use kummer_m_scaled");
  }
  if (z > 0.0)
  {
    return KummerSeries(a, b, z).sum;
  }
  // Alternating series: fall back to Kummer's transformation
  // M(a,b,z) = e^z M(b-a,b,-z) when cancellation would eat more than four digits.
  if (z >= -30.0 || IsNonPositiveInteger(a))
  {
    SeriesResult const direct = KummerSeries(a, b, z);
    if (direct.max_term <= 1e4 * std::abs(direct.sum) || IsNonPositiveInteger(a))
    {
      return direct.sum;
    }
  }
  // e^{z} M(b-a, b, -z) is exactly the scaled function at -z
  return kummer_m_scaled({b - a, b, -z});
}

double kummer_m_scaled(KummerArgs const &args)
{
  auto const [a, b, z] = args;
  CheckB(b);
  if (z < 0.0)
  {
    Fail(Errc::domain, "kummer_m_scaled: requires z >= 0");
  }
  if (a == 0.0)
  {
    return std::exp(-z);
  }
  if (z <= 600.0 || IsNonPositiveInteger(a))
  {
    SeriesResult const s = KummerSeries(a, b, z);
    return s.sum * std::exp(-z);
  }
  return KummerScaledAsymptotic(a, b, z);
}

TricomiValue tricomi_u_with_derivative(KummerArgs const &args)
{
  auto const [a, b, z] = args;
  if (!(z > 0.0) || !std::isfinite(z))
  {
    Fail(Errc::domain, "tricomi_u: requires z > 0");
  }
  CheckB(b);
  if (a == 0.0)
  {
    return {1.0, 0.0};
  }
  // dU/dz = -a U(a+1, b+1, z)
  if (z >= kTricomiAnchor)
  {
    return {TricomiAsymptotic(a, b, z), -a * TricomiAsymptotic(a + 1.0, b + 1.0, z)};
  }

  // Integrate z w'' + (b - z) w' - a w = 0 backward from the anchor, where the
  // asymptotic series seeds (w, w'). U is recessive going forward, so the
  // backward direction is the stable one.
  double const      anchor = std::max(kTricomiAnchor, 2.0 * z);
  ode::State<2>     seed   = {TricomiAsymptotic(a, b, anchor),
                              -a * TricomiAsymptotic(a + 1.0, b + 1.0, anchor)};
  auto              rhs    = [a, b](double x, ode::State<2> const &w) -> ode::State<2> {
    return {w[1], (a * w[0] - (b - x) * w[1]) / x};
  };
  ode::StepperOptions opt;
  opt.rtol   = 1e-14;
  opt.atol   = 1e-300;
  opt.h_init = 0.25;
  auto stepper = ode::MakeStepper<2>(rhs, anchor, seed, opt);
  stepper.advance_to(z);
  return {stepper.y()[0], stepper.y()[1]};
}

double tricomi_u(KummerArgs const &args)
{
  return tricomi_u_with_derivative(args).u;
}

namespace {

constexpr double kA = 0.75;
constexpr double kB = 2.0;

void CheckT(double t)
{
  if (!(t > 0.0) || !std::isfinite(t))
  {
    Fail(Errc::domain, "fundamental solutions require t > 0");
  }
}

}  // namespace

double f1(double t)
{
  CheckT(t);
  return t * kummer_m_scaled({kA, kB, t});
}

double f1_reflected(double t)
{
  CheckT(t);
  return t * kummer_m({kB - kA, kB, -t});
}

double f1_derivative(double t)
{
  CheckT(t);
  // d/dt [t e^{-t} M] = e^{-t} [(1 - t) M + t (a/b) M(a+1, b+1, t)]
  return (1.0 - t) * kummer_m_scaled({kA, kB, t}) +
         t * (kA / kB) * kummer_m_scaled({kA + 1.0, kB + 1.0, t});
}

double f2_scaled(double t)
{
  CheckT(t);
  return t * tricomi_u({kA, kB, t});
}

double f2(double t)
{
  return std::exp(-t) * f2_scaled(t);
}

namespace {

// e^{t} f2'(t) = (1 - t) U + t U'
double F2DerivativeScaled(double t)
{
  CheckT(t);
  TricomiValue const u = tricomi_u_with_derivative({kA, kB, t});
  return (1.0 - t) * u.u + t * u.du;
}

}  // namespace

double f2_derivative(double t)
{
  return std::exp(-t) * F2DerivativeScaled(t);
}

double wronskian_scaled(double t)
{
  return f1(t) * F2DerivativeScaled(t) - f1_derivative(t) * f2_scaled(t);
}

double wronskian(double t)
{
  return std::exp(-t) * wronskian_scaled(t);
}

double kummer_ode_residual(std::function<double(double)> const &f, double t, double h)
{
  if (!(h > 0.0) || !(t > 2.0 * h))
  {
    Fail(Errc::domain, "kummer_ode_residual: requires t > 2h > 0");
  }
  double const fp = f(t + h), f0 = f(t), fm = f(t - h);
  double const d2 = (fp - 2.0 * f0 + fm) / (h * h);
  double const d1 = (fp - fm) / (2.0 * h);
  return std::abs(t * d2 + t * d1 + 0.25 * f0);
}

}  // namespace del::specfun
