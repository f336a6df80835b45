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
#include "grid.hpp"

#include "error.hpp"

#include <cmath>

namespace del {

void MeshSpec::validate() const
{
  if (n_cells < 1 || !(x_max > x_min) || !std::isfinite(x_min) || !std::isfinite(x_max))
  {
    Fail(Errc::invalid_argument, "mesh: need n_cells >= 1 and x_max > x_min");
  }
}

GridField::GridField(MeshSpec const &mesh_in, double gamma_in, double time_in, double floor)
  : mesh(mesh_in)
  , rho(static_cast<std::size_t>(mesh_in.n_cells), 0.0)
  , m(static_cast<std::size_t>(mesh_in.n_cells), 0.0)
  , gamma(gamma_in)
  , time(time_in)
  , vacuum_floor(floor)
{
  mesh.validate();
}

double GridField::mass() const
{
  double s = 0.0;
  for (double r : rho)
  {
    s += r;
  }
  return s * dx();
}

double GridField::momentum() const
{
  double s = 0.0;
  for (double v : m)
  {
    s += v;
  }
  return s * dx();
}

double GridField::first_moment() const
{
  double s = 0.0;
  for (std::size_t i = 0; i < rho.size(); ++i)
  {
    s += mesh.center(i) * rho[i];
  }
  return s * dx();
}

void GridField::validate() const
{
  mesh.validate();
  if (rho.size() != static_cast<std::size_t>(mesh.n_cells) || m.size() != rho.size())
  {
    Fail(Errc::invalid_argument, "field: data size does not match n_cells");
  }
  if (!(gamma >= 1.0) || !(vacuum_floor >= 0.0) || !(time >= 0.0))
  {
    Fail(Errc::invalid_argument, "field: need gamma >= 1, vacuum_floor >= 0, time >= 0");
  }
}

}  // namespace del
