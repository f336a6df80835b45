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
#include "solver.hpp"

#include "error.hpp"
#include "profiles.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

namespace del::solver {
namespace {

constexpr std::array<double, 4> kGaussNodes = {-0.8611363115940526, -0.3399810435848563,
                                               0.3399810435848563, 0.8611363115940526};
constexpr std::array<double, 4> kGaussWeights = {0.3478548451374538, 0.6521451548625461,
                                                 0.6521451548625461, 0.3478548451374538};

double Velocity(GridField const &f, std::size_t i)
{
  return f.rho[i] > f.vacuum_floor ? f.m[i] / f.rho[i] : 0.0;
}

void Damp(GridField &f, double factor)
{
  for (double &v : f.m)
  {
    v *= factor;
  }
}

void ApplyFloor(GridField &f, StepStats *stats)
{
  for (std::size_t i = 0; i < f.size(); ++i)
  {
    if (f.rho[i] <= f.vacuum_floor)
    {
      if (stats)
      {
        stats->floor_mass_added += (f.vacuum_floor - f.rho[i]) * f.dx();
        ++stats->floored_cells;
      }
      f.rho[i] = f.vacuum_floor;
      f.m[i]   = 0.0;
    }
  }
}

}  // namespace

double pressure(double rho, double gamma)
{
  return gamma == 1.0 ? rho : std::pow(rho, gamma);
}

double sound_speed(double rho, double gamma)
{
  return gamma == 1.0 ? 1.0 : std::sqrt(gamma * std::pow(rho, gamma - 1.0));
}

double cfl_dt(GridField const &field, double cfl)
{
  double speed = 0.0;
  bool   any   = false;
  for (std::size_t i = 0; i < field.size(); ++i)
  {
    if (field.rho[i] <= field.vacuum_floor)
    {
      continue;
    }
    any   = true;
    speed = std::max(speed, std::abs(Velocity(field, i)) + sound_speed(field.rho[i], field.gamma));
  }
  if (!any)
  {
    Fail(Errc::all_vacuum, "cfl_dt: every cell is at the vacuum floor");
  }
  return cfl * field.dx() / speed;
}

GridField step(GridField const &field, double dt, StepStats *stats)
{
  field.validate();
  if (!(dt > 0.0))
  {
    Fail(Errc::invalid_argument, "step: dt must be positive");
  }
  if (dt > cfl_dt(field, 1.0) * (1.0 + 1e-12))
  {
    Fail(Errc::cfl_violation, "step: dt exceeds the CFL limit");
  }

  GridField out = field;
  Damp(out, std::exp(-0.5 * dt));

  std::size_t const n     = out.size();
  double const      gamma = out.gamma;

  // physical fluxes and wave speeds; outflow ghosts copy the edge cells
  std::vector<double> f_rho(n), f_m(n), speed(n);
  for (std::size_t i = 0; i < n; ++i)
  {
    double const u = Velocity(out, i);
    f_rho[i]       = out.m[i];
    f_m[i]         = u * out.m[i] + pressure(out.rho[i], gamma);
    speed[i]       = std::abs(u) + sound_speed(out.rho[i], gamma);
  }

  // interface fluxes, index k is the face between cells k-1 and k
  std::vector<double> face_rho(n + 1), face_m(n + 1);
  face_rho[0] = f_rho[0];
  face_m[0]   = f_m[0];
  face_rho[n] = f_rho[n - 1];
  face_m[n]   = f_m[n - 1];
  for (std::size_t k = 1; k < n; ++k)
  {
    std::size_t const l = k - 1, r = k;
    double const      a = std::max(speed[l], speed[r]);
    face_rho[k] = 0.5 * (f_rho[l] + f_rho[r]) - 0.5 * a * (out.rho[r] - out.rho[l]);
    face_m[k]   = 0.5 * (f_m[l] + f_m[r]) - 0.5 * a * (out.m[r] - out.m[l]);
  }

  double const lambda = dt / out.dx();
  for (std::size_t i = 0; i < n; ++i)
  {
    out.rho[i] -= lambda * (face_rho[i + 1] - face_rho[i]);
    out.m[i] -= lambda * (face_m[i + 1] - face_m[i]);
  }
  if (stats)
  {
    stats->boundary_outflow += dt * (face_rho[n] - face_rho[0]);
  }

  Damp(out, std::exp(-0.5 * dt));
  ApplyFloor(out, stats);
  for (std::size_t i = 0; i < n; ++i)
  {
    if (!std::isfinite(out.rho[i]) || !std::isfinite(out.m[i]))
    {
      Fail(Errc::non_finite, "step: non-finite state in cell " + std::to_string(i));
    }
  }
  out.time = field.time + dt;
  return out;
}

void SimConfig::validate() const
{
  mesh.validate();
  if (!(gamma >= 1.0))
  {
    Fail(Errc::invalid_argument, "simulate: gamma must be >= 1");
  }
  if (!(cfl > 0.0 && cfl < 1.0))
  {
    Fail(Errc::invalid_argument, "simulate: cfl must lie in (0, 1)");
  }
  if (!(t_end >= 0.0) || !std::isfinite(t_end))
  {
    Fail(Errc::invalid_argument, "simulate: t_end must be >= 0");
  }
  if (!(vacuum_floor > 0.0))
  {
    Fail(Errc::invalid_argument, "simulate: vacuum_floor must be > 0");
  }
  if (!std::is_sorted(snapshot_times.begin(), snapshot_times.end()))
  {
    Fail(Errc::invalid_argument, "simulate: snapshot times must be sorted");
  }
  for (double s : snapshot_times)
  {
    if (!(s >= 0.0 && s <= t_end))
    {
      Fail(Errc::invalid_argument, "simulate: snapshot times must lie in [0, t_end]");
    }
  }
  if (std::holds_alternative<BarenblattData>(initial) && !(gamma > 1.0))
  {
    Fail(Errc::invalid_argument, "simulate: Barenblatt initial data needs gamma > 1");
  }
}

MeshSpec default_gaussian_mesh(gaussdyn::GaussianInit const &init, double t_end, int n_cells)
{
  gaussdyn::GaussianParams const p(init, t_end, 1e-8);
  double const half  = std::max(12.0, 8.0 * p.trajectory().tau(t_end));
  double const shift = std::max(std::abs(gaussdyn::center_xbar(p, 0.0)),
                                std::abs(gaussdyn::center_xbar(p, t_end)));
  return {-(half + shift), half + shift, n_cells};
}

GridField initial_field(SimConfig const &cfg)
{
  cfg.validate();
  GridField field(cfg.mesh, cfg.gamma, 0.0, cfg.vacuum_floor);

  if (auto const *g = std::get_if<GaussianData>(&cfg.initial))
  {
    gaussdyn::GaussianParams const p(g->init, 0.0);
    GridField const               exact = gaussdyn::exact_state(p, 0.0, cfg.mesh);
    field.rho = exact.rho;
    field.m   = exact.m;
  }
  else if (auto const *b = std::get_if<BarenblattData>(&cfg.initial))
  {
    profiles::BarenblattProfile const prof = profiles::barenblatt_coefficients(cfg.gamma, b->lambda);
    double const                      dx   = cfg.mesh.dx();
    for (std::size_t i = 0; i < field.size(); ++i)
    {
      double r = 0.0, mm = 0.0;
      for (std::size_t q = 0; q < kGaussNodes.size(); ++q)
      {
        double const x = cfg.mesh.center(i) + 0.5 * dx * kGaussNodes[q];
        r += 0.5 * kGaussWeights[q] * profiles::barenblatt_density(prof, 0.0, x);
        mm += 0.5 * kGaussWeights[q] * profiles::barenblatt_momentum(prof, 0.0, x);
      }
      field.rho[i] = r;
      field.m[i]   = mm;
    }
  }
  else
  {
    auto const &c = std::get<CustomData>(cfg.initial);
    if (c.x.size() < 2 || c.rho.size() != c.x.size() || c.m.size() != c.x.size() ||
        !std::is_sorted(c.x.begin(), c.x.end()))
    {
      Fail(Errc::invalid_argument, "custom initial data needs >= 2 sorted rows of (x, rho, m)");
    }
    for (std::size_t i = 0; i < field.size(); ++i)
    {
      double const x = cfg.mesh.center(i);
      if (x < c.x.front() || x > c.x.back())
      {
        continue;
      }
      auto        it = std::upper_bound(c.x.begin(), c.x.end(), x);
      std::size_t k  = std::clamp<std::size_t>(
          static_cast<std::size_t>(std::distance(c.x.begin(), it)), 1, c.x.size() - 1);
      double const w = (x - c.x[k - 1]) / (c.x[k] - c.x[k - 1]);
      field.rho[i]   = (1 - w) * c.rho[k - 1] + w * c.rho[k];
      field.m[i]     = (1 - w) * c.m[k - 1] + w * c.m[k];
    }
  }

  for (std::size_t i = 0; i < field.size(); ++i)
  {
    if (!(field.rho[i] > cfg.vacuum_floor))
    {
      field.rho[i] = cfg.vacuum_floor;
      field.m[i]   = 0.0;
    }
  }
  return field;
}

std::vector<GridField> simulate(SimConfig const &cfg, StepObserver const &observer)
{
  GridField field = initial_field(cfg);

  std::vector<double> targets = cfg.snapshot_times;
  if (targets.empty())
  {
    targets.push_back(cfg.t_end);
  }

  std::vector<GridField> snapshots;
  snapshots.reserve(targets.size());
  for (double target : targets)
  {
    while (field.time < target)
    {
      double dt   = cfl_dt(field, cfg.cfl);
      bool   last = false;
      if (field.time + dt >= target)
      {
        dt   = target - field.time;
        last = true;
      }
      StepStats stats;
      GridField next = step(field, dt, &stats);
      if (last)
      {
        next.time = target;
      }
      if (observer)
      {
        observer(field, next, dt, stats);
      }
      field = std::move(next);
    }
    snapshots.push_back(field);
  }
  return snapshots;
}

}  // namespace del::solver
