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

#include <cstddef>
#include <vector>

namespace del {

/// Uniform 1D mesh of n_cells cells on [x_min, x_max].
struct MeshSpec
{
  double x_min   = -1.0;
  double x_max   = 1.0;
  int    n_cells = 1;

  double dx() const
  {
    return (x_max - x_min) / n_cells;
  }

  double center(std::size_t i) const
  {
    return x_min + (static_cast<double>(i) + 0.5) * dx();
  }

  void validate() const;
};

/// Cell-averaged density and momentum; the solver state.
struct GridField
{
  MeshSpec            mesh;
  std::vector<double> rho;
  std::vector<double> m;
  double              gamma        = 1.0;
  double              time         = 0.0;
  double              vacuum_floor = 1e-12;

  GridField() = default;
  GridField(MeshSpec const &mesh_in, double gamma_in, double time_in = 0.0,
            double floor = 1e-12);

  std::size_t size() const
  {
    return rho.size();
  }

  double dx() const
  {
    return mesh.dx();
  }

  double mass() const;
  double momentum() const;
  double first_moment() const;

  /// Throws Errc::invalid_argument when sizes or metadata are inconsistent.
  void validate() const;
};

}  // namespace del
