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
#include "profiles.hpp"
#include "solver.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace del;
using namespace del::solver;

namespace {

GridField Uniform(int n, double dx, double rho, double m, double gamma = 1.0)
{
  GridField f({0.0, n * dx, n}, gamma);
  f.rho.assign(n, rho);
  f.m.assign(n, m);
  return f;
}

double PhysicalEnergy(GridField const &f)
{
  double e = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i)
  {
    if (f.rho[i] > f.vacuum_floor)
    {
      e += (0.5 * f.m[i] * f.m[i] / f.rho[i] + f.rho[i] * std::log(f.rho[i])) * f.dx();
    }
  }
  return e;
}

SimConfig GaussianRun(gaussdyn::GaussianInit const &g, double t_end, int n)
{
  SimConfig cfg;
  cfg.mesh    = default_gaussian_mesh(g, t_end, n);
  cfg.t_end   = t_end;
  cfg.initial = GaussianData{g};
  return cfg;
}

Errc CodeOf(auto &&fn)
{
  try
  {
    fn();
  }
  catch (Error const &e)
  {
    return e.code();
  }
  return Errc{};
}

}  // namespace

TEST_CASE("pressure and sound speed")
{
  CHECK(pressure(0.0, 1.0) == 0.0);
  CHECK(pressure(0.0, 2.0) == 0.0);
  CHECK(pressure(2.0, 1.0) == 2.0);
  CHECK(pressure(2.0, 2.0) == doctest::Approx(4.0));
  CHECK(sound_speed(2.0, 2.0) == doctest::Approx(2.0));
  CHECK(sound_speed(0.3, 1.0) == 1.0);
}

TEST_CASE("cfl_dt examples")
{
  CHECK(cfl_dt(Uniform(10, 0.01, 1.0, 0.0), 0.5) == doctest::Approx(0.005));
  CHECK(cfl_dt(Uniform(10, 0.01, 1.0, 1.0), 0.5) == doctest::Approx(0.0025));

  GridField f = Uniform(10, 0.01, 1.0, 0.0);
  f.rho[3]    = f.vacuum_floor;
  f.m[3]      = 5.0;
  CHECK(cfl_dt(f, 0.5) == doctest::Approx(0.005));

  GridField const vac = Uniform(10, 0.01, 1e-12, 0.0);
  CHECK(CodeOf([&] { cfl_dt(vac, 0.5); }) == Errc::all_vacuum);
}

TEST_CASE("constant state at rest is exactly stationary")
{
  GridField f = Uniform(50, 0.1, 1.3, 0.0);
  for (int k = 0; k < 20; ++k)
  {
    f = step(f, 0.9 * cfl_dt(f, 1.0));
  }
  for (std::size_t i = 0; i < f.size(); ++i)
  {
    CHECK(f.rho[i] == 1.3);
    CHECK(f.m[i] == 0.0);
  }
}

TEST_CASE("uniform momentum decays exactly as e^{-t}")
{
  GridField f = Uniform(40, 0.1, 2.0, 0.8);
  double    t = 0.0;
  for (int k = 0; k < 50; ++k)
  {
    double const dt = 0.4 * cfl_dt(f, 1.0);
    f               = step(f, dt);
    t += dt;
  }
  CHECK(f.time == doctest::Approx(t));
  for (std::size_t i = 0; i < f.size(); ++i)
  {
    CHECK(f.m[i] == doctest::Approx(0.8 * std::exp(-t)).epsilon(1e-13));
    CHECK(f.rho[i] == doctest::Approx(2.0).epsilon(1e-14));
  }
}

TEST_CASE("step errors")
{
  GridField const f = Uniform(10, 0.1, 1.0, 0.0);
  CHECK(CodeOf([&] { step(f, 1.01 * cfl_dt(f, 1.0)); }) == Errc::cfl_violation);
  CHECK(CodeOf([&] { step(f, 0.0); }) == Errc::invalid_argument);
  GridField const huge = Uniform(10, 0.1, 1e308, 1e308);
  CHECK(CodeOf([&] { step(huge, 0.5 * cfl_dt(huge, 1.0)); }) == Errc::non_finite);
}

TEST_CASE("mass balance holds to roundoff with positivity after every step")
{
  auto const cfg   = GaussianRun({2.0, 0.3, std::sqrt(2.0), 0.2, 0.1}, 3.0, 1000);
  double     mass0 = initial_field(cfg).mass();
  double     out = 0.0, floor_added = 0.0;
  bool       positive = true;
  auto const snaps    = simulate(cfg, [&](GridField const &, GridField const &b, double,
                                       StepStats const &s) {
    out += s.boundary_outflow;
    floor_added += s.floor_mass_added;
    positive = positive && std::all_of(b.rho.begin(), b.rho.end(),
                                       [&](double r) { return r >= b.vacuum_floor; });
  });
  CHECK(positive);
  CHECK(std::abs(snaps.back().mass() - mass0 + out - floor_added) <= 1e-12 * mass0);
}

TEST_CASE("total momentum follows e^{-t}")
{
  auto cfg           = GaussianRun({1.0, 0.0, 1.0, 0.5, 0.0}, 5.0, 1000);
  cfg.snapshot_times = {0.0, 1.0, 2.5, 5.0};
  auto const   s     = simulate(cfg);
  double const P0    = s.front().momentum();
  for (auto const &f : s)
  {
    CAPTURE(f.time);
    CHECK(std::abs(f.momentum() - std::exp(-f.time) * P0) <= 1e-10);
  }
}

TEST_CASE("first moment follows X0 + (1 - e^{-t}) P0 up to a first-order error")
{
  // Rusanov diffusion with a cell-dependent wave speed perturbs d/dt int x rho at O(dx)
  double prev = 0.0;
  for (int n : {500, 1000, 2000})
  {
    auto cfg           = GaussianRun({2.0, 0.3, std::sqrt(2.0), 0.2, 0.1}, 4.0, n);
    cfg.snapshot_times = {0.0, 4.0};
    auto const   s     = simulate(cfg);
    double const X0    = s.front().first_moment();
    double const P0    = s.front().momentum();
    double const err   = std::abs(s.back().first_moment() - X0 + P0 * std::expm1(-4.0));
    CHECK(err <= 0.1 * std::abs(X0 - P0 * std::expm1(-4.0)));
    if (prev > 0.0)
    {
      CHECK(prev / err >= 1.6);
    }
    prev = err;
  }
}

TEST_CASE("physical energy does not increase along a smooth run")
{
  auto const cfg   = GaussianRun({1.0, 0.0, 1.0, 0.5, 0.0}, 2.0, 800);
  double     E0    = PhysicalEnergy(initial_field(cfg));
  double     worst = -1.0;
  simulate(cfg, [&](GridField const &a, GridField const &b, double, StepStats const &) {
    worst = std::max(worst, PhysicalEnergy(b) - PhysicalEnergy(a));
  });
  CHECK(worst <= 1e-6 * std::abs(E0));
}

TEST_CASE("snapshots land exactly on the requested times")
{
  auto cfg           = GaussianRun({1.0, 0.0, 1.0, 0.0, 0.0}, 1.0, 200);
  cfg.snapshot_times = {0.0, 0.123, 0.5, 1.0};
  auto const s       = simulate(cfg);
  REQUIRE(s.size() == 4);
  for (std::size_t k = 0; k < s.size(); ++k)
  {
    CHECK(s[k].time == cfg.snapshot_times[k]);
  }
}

TEST_CASE("t_end = 0 yields the initial data")
{
  auto const      cfg  = GaussianRun({1.0, 0.0, 1.0, 0.0, 0.0}, 0.0, 200);
  auto const      s    = simulate(cfg);
  GridField const init = initial_field(cfg);
  REQUIRE(s.size() == 1);
  CHECK(s[0].time == 0.0);
  CHECK(s[0].rho == init.rho);
  CHECK(s[0].m == init.m);
}

TEST_CASE("first-order convergence to the exact Gaussian")
{
  gaussdyn::GaussianInit const   g{1.0, 0.0, 1.0, 0.0, 0.0};
  gaussdyn::GaussianParams const p(g, 1.0);
  double                         prev = 0.0;
  for (int n : {200, 400, 800})
  {
    auto const      cfg   = GaussianRun(g, 1.0, n);
    GridField const num   = simulate(cfg).back();
    GridField const exact = gaussdyn::exact_state(p, 1.0, cfg.mesh);
    double          err   = 0.0;
    for (std::size_t i = 0; i < num.size(); ++i)
    {
      err += std::abs(num.rho[i] - exact.rho[i]) * num.dx();
    }
    if (prev > 0.0)
    {
      CHECK(prev / err >= 1.7);
      CHECK(prev / err <= 2.3);
    }
    prev = err;
  }
}

TEST_CASE("isentropic run from Barenblatt data relaxes towards the Barenblatt profile")
{
  SimConfig cfg;
  cfg.gamma          = 2.0;
  cfg.mesh           = {-12.0, 12.0, 800};
  cfg.t_end          = 40.0;
  cfg.snapshot_times = {0.0, 5.0, 10.0, 20.0, 40.0};
  cfg.initial        = BarenblattData{1.0};
  auto const          prof = profiles::barenblatt_coefficients(2.0, 1.0);
  std::vector<double> err;
  for (auto const &f : simulate(cfg))
  {
    double e = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i)
    {
      e += std::abs(f.rho[i] - profiles::barenblatt_density(prof, f.time, f.mesh.center(i))) *
           f.dx();
    }
    err.push_back(e);
  }
  CHECK(err[0] < 1e-4);
  CHECK(err[1] < 0.15);
  CHECK(err[2] < err[1]);
  CHECK(err[3] < err[2]);
  CHECK(err[4] < err[3]);
}

TEST_CASE("custom tabulated data is interpolated onto cell centers")
{
  SimConfig cfg;
  cfg.mesh          = {0.0, 1.0, 4};
  cfg.t_end         = 0.0;
  cfg.initial       = CustomData{{0.0, 1.0}, {1.0, 3.0}, {0.0, 1.0}};
  GridField const f = initial_field(cfg);
  CHECK(f.rho[0] == doctest::Approx(1.25));
  CHECK(f.rho[3] == doctest::Approx(2.75));
  CHECK(f.m[1] == doctest::Approx(0.375));
}

TEST_CASE("config validation")
{
  auto const cfg = GaussianRun({1.0, 0.0, 1.0, 0.0, 0.0}, 1.0, 100);
  auto       bad = cfg;
  bad.cfl        = 1.0;
  CHECK_THROWS_AS(bad.validate(), Error);
  bad                = cfg;
  bad.snapshot_times = {0.5, 2.0};
  CHECK_THROWS_AS(bad.validate(), Error);
  bad                = cfg;
  bad.snapshot_times = {0.5, 0.2};
  CHECK_THROWS_AS(bad.validate(), Error);
  bad         = cfg;
  bad.initial = BarenblattData{1.0};
  CHECK_THROWS_AS(bad.validate(), Error);
  CHECK_NOTHROW(cfg.validate());
}
