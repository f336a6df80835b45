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
#include "error.hpp"
#include "gaussdyn.hpp"

#include <doctest.h>

#include <array>
#include <cmath>
#include <numbers>

using namespace del;
using namespace del::gaussdyn;

namespace {

// classical RK4 with a fixed small step, independent of the adaptive stepper
std::array<double, 2> Rk4Tau(double alpha0, double beta0, double t_end, int steps)
{
  std::array<double, 2> y = {1.0, beta0};
  auto f = [alpha0](std::array<double, 2> const &v) {
    return std::array<double, 2>{v[1], 2.0 * alpha0 / v[0] - v[1]};
  };
  double const h = t_end / steps;
  for (int i = 0; i < steps; ++i)
  {
    auto k1 = f(y);
    auto k2 = f({y[0] + 0.5 * h * k1[0], y[1] + 0.5 * h * k1[1]});
    auto k3 = f({y[0] + 0.5 * h * k2[0], y[1] + 0.5 * h * k2[1]});
    auto k4 = f({y[0] + h * k3[0], y[1] + h * k3[1]});
    for (int j = 0; j < 2; ++j)
    {
      y[j] += h / 6.0 * (k1[j] + 2 * k2[j] + 2 * k3[j] + k4[j]);
    }
  }
  return y;
}

}  // namespace

TEST_CASE("tau at t = 0.1 from the Taylor expansion")
{
  auto const traj = integrate_tau({1.0, 0.0, 1.0, 1e-10});
  // 1 + t^2 - t^3/3 - t^4/12 to 1e-5
  CHECK(std::abs(traj.tau(0.1) - 1.009667) <= 1e-5);
  CHECK(traj.tau(0.0) == 1.0);
  CHECK(traj.tau_dot(0.0) == 0.0);
}

TEST_CASE("tau agrees with a fixed-step RK4 reference")
{
  for (auto [a, b] : {std::pair{1.0, 0.0}, std::pair{2.0, 0.3}, std::pair{0.5, -0.4}})
  {
    auto const traj = integrate_tau({a, b, 20.0, 1e-10});
    for (double t : {0.5, 3.0, 20.0})
    {
      auto const ref = Rk4Tau(a, b, t, 20000);
      CHECK(traj.tau(t) == doctest::Approx(ref[0]).epsilon(1e-8));
      CHECK(traj.tau_dot(t) == doctest::Approx(ref[1]).epsilon(1e-7));
    }
  }
}

TEST_CASE("tau asymptotics to t = 1e4")
{
  auto const   traj = integrate_tau({1.0, 0.0, 1e4, 1e-10});
  double const t    = 1e4;
  CHECK(std::abs(traj.tau(t) / (2.0 * std::sqrt(t)) - 1.0) < 0.05);
  CHECK(std::abs(traj.tau_dot(t) * std::sqrt(t) - 1.0) < 0.1);
  double dev = 0.0;
  for (auto const &s : traj.samples())
  {
    dev = std::max(dev, std::abs(s.tau - 2.0 * std::sqrt(s.t)));
  }
  CHECK(dev < 5.0);
  CHECK(traj.min_tau() >= 1.0);
}

TEST_CASE("tau is increasing for beta0 >= 0 and scales with alpha0")
{
  auto const traj = integrate_tau({4.0, 0.0, 1e3, 1e-10});
  double     prev = 0.0;
  for (auto const &s : traj.samples())
  {
    CHECK(s.tau >= prev);
    CHECK(s.tau_dot >= 0.0);
    prev = s.tau;
  }
  CHECK(traj.tau(1e3) / (2.0 * std::sqrt(4.0 * 1e3)) == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("dense output satisfies the ODE between samples")
{
  double const tol  = 1e-10;
  auto const   traj = integrate_tau({1.0, 0.0, 50.0, tol});
  auto const   s    = traj.samples();
  double       worst = 0.0;
  for (std::size_t i = 0; i + 1 < s.size(); i += 7)
  {
    double const tm = 0.5 * (s[i].t + s[i + 1].t);
    auto const   p  = traj.eval(tm);
    worst           = std::max(worst, std::abs(p.tau_ddot - (2.0 / p.tau - p.tau_dot)));
  }
  CHECK(worst <= 10.0 * tol);
  CHECK(TauTrajectory::interpolation_order() == 3);
}

TEST_CASE("tau evaluation outside the range")
{
  auto const traj = integrate_tau({1.0, 0.0, 2.0, 1e-10});
  CHECK_THROWS_AS(traj.eval(2.5), Error);
  CHECK_THROWS_AS(traj.eval(-0.1), Error);
  CHECK_THROWS_AS(integrate_tau({0.0, 0.0, 1.0, 1e-10}), Error);
}

TEST_CASE("gaussian parameters at t = 0 are the initial data")
{
  GaussianParams const p({1.5, 0.2, 0.8, -0.3, 0.4}, 1.0);
  auto const           s = params_at(p, 0.0);
  CHECK(s.alpha == doctest::Approx(1.5));
  CHECK(s.beta == doctest::Approx(0.2));
  CHECK(s.b == doctest::Approx(0.8));
  CHECK(s.c == doctest::Approx(-0.3));
  CHECK(s.xbar == doctest::Approx(0.4));
  CHECK(p.mass() == doctest::Approx(0.8 * std::sqrt(std::numbers::pi / 1.5)));
}

TEST_CASE("gaussian center follows (X0 + (1 - e^-t) P0) / mass")
{
  // centered, momentum c0 = 1: xbar = 1 - e^{-t}
  GaussianParams const p({1.0, 0.0, 1.0, 1.0, 0.0}, 10.0);
  for (double t : {0.0, 0.5, 2.0, 10.0})
  {
    CHECK(center_xbar(p, t) == doctest::Approx(1.0 - std::exp(-t)).epsilon(1e-13));
  }
  CHECK(xbar_infinity(p) == doctest::Approx(1.0));
}

TEST_CASE("gaussian exact state conserves mass and the momentum law")
{
  GaussianParams const p({2.0, 0.3, 1.0, 0.2, 0.1}, 5.0);
  MeshSpec const       mesh{-40.0, 40.0, 8000};
  double const         P0 = p.momentum0();
  for (double t : {0.0, 1.0, 5.0})
  {
    GridField const f = exact_state(p, t, mesh);
    CHECK(f.mass() == doctest::Approx(p.mass()).epsilon(1e-12));
    CHECK(f.momentum() == doctest::Approx(std::exp(-t) * P0).epsilon(1e-10));
    CHECK(f.first_moment() / f.mass() == doctest::Approx(center_xbar(p, t)).epsilon(1e-10));
  }
}

TEST_CASE("gaussian parameter asymptotics")
{
  GaussianParams const p({1.0, 0.5, 1.0, 0.7, 0.4}, 1e4);
  double const         t = 1e4;
  auto const           s = params_at(p, t);
  CHECK(s.alpha * 4.0 * t == doctest::Approx(1.0).epsilon(0.01));
  CHECK(s.beta * 2.0 * t == doctest::Approx(1.0).epsilon(0.01));
  CHECK(std::abs(s.c) < 1e-3);
  CHECK(s.xbar == doctest::Approx(xbar_infinity(p)).epsilon(1e-12));
}

TEST_CASE("ansatz residual shrinks at second order")
{
  GaussianParams const p({1.0, 0.0, 1.0, 0.0, 0.0}, 2.0);
  double               prev = 0.0;
  for (double h : {0.1, 0.05, 0.025})
  {
    int const  n = static_cast<int>(24.0 / h);
    auto const r = ansatz_residual(p, 1.0, {-12.0, 12.0, n}, h);
    double const res = std::max(r.res_continuity, r.res_momentum);
    if (prev > 0.0)
    {
      CHECK(prev / res == doctest::Approx(4.0).epsilon(0.1));
    }
    prev = res;
  }
}

TEST_CASE("exact_state refuses a domain that truncates the tail")
{
  GaussianParams const p({1.0, 0.0, 1.0, 0.0, 0.0}, 1.0);
  CHECK_THROWS_AS(exact_state(p, 0.0, {-3.0, 3.0, 100}), Error);
  try
  {
    exact_state(p, 0.0, {-3.0, 3.0, 100});
  }
  catch (Error const &e)
  {
    CHECK(e.code() == Errc::grid_too_small);
  }
}
