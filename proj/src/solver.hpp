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

// First-order finite-volume solver for
//   d_t rho + d_x m = 0,
//   d_t m + d_x(m^2/rho + rho^gamma) + m = 0,
// with a Rusanov flux and exact integration of the damping term by Strang
// splitting.

#include "gaussdyn.hpp"
#include "grid.hpp"

#include <functional>
#include <variant>
#include <vector>

namespace del::solver {

double pressure(double rho, double gamma);
double sound_speed(double rho, double gamma);

/// cfl * dx / max(|m/rho| + c) over non-vacuum cells.
double cfl_dt(GridField const &field, double cfl);

struct StepStats
{
  double boundary_outflow = 0.0;  // net mass leaving through the two boundaries
  double floor_mass_added = 0.0;  // mass injected by clipping at the vacuum floor
  int    floored_cells    = 0;
};

/// One Strang-split step: damp dt/2, Rusanov update over dt, damp dt/2, then
/// clip at the vacuum floor. Throws Errc::cfl_violation if dt exceeds the
/// unit-CFL step and Errc::non_finite on a blow-up.
GridField step(GridField const &field, double dt, StepStats *stats = nullptr);

enum class Boundary
{
  outflow
};

struct GaussianData
{
  gaussdyn::GaussianInit init;
};

struct BarenblattData
{
  double lambda = 1.0;
};

/// Tabulated (x, rho, m), interpolated linearly onto cell centers.
struct CustomData
{
  std::vector<double> x;
  std::vector<double> rho;
  std::vector<double> m;
};

using InitialData = std::variant<GaussianData, BarenblattData, CustomData>;

struct SimConfig
{
  MeshSpec            mesh;
  double              gamma = 1.0;
  double              cfl   = 0.45;
  double              t_end = 0.0;
  std::vector<double> snapshot_times;  // empty means {t_end}
  Boundary            boundary     = Boundary::outflow;
  double              vacuum_floor = 1e-12;
  InitialData         initial      = GaussianData{};

  void validate() const;
};

/// [-L, L] with L = max(12, 8 tau(t_end)) widened by the largest center offset.
MeshSpec default_gaussian_mesh(gaussdyn::GaussianInit const &init, double t_end, int n_cells);

GridField initial_field(SimConfig const &cfg);

using StepObserver = std::function<void(GridField const &before, GridField const &after,
                                        double dt, StepStats const &stats)>;

/// Runs to t_end and returns one snapshot per requested time, each hit
/// exactly by shortening the preceding step.
std::vector<GridField> simulate(SimConfig const &cfg, StepObserver const &observer = {});

}  // namespace del::solver
