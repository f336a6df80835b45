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

// Measured functionals on snapshots: the self-similar rescaling, moments and
// their closed-form oracles, energies and entropies, the Csiszar-Kullback gap,
// the Fokker-Planck residual and the weighted-decay quantities.

#include "gaussdyn.hpp"
#include "grid.hpp"

#include <map>
#include <string>
#include <vector>

namespace del::diagnostics {

/// Integral of Gamma = exp(-y^2) over the real line.
double gamma_mass();

/// Trapezoidal integral of nodal values on a uniform mesh (nodes at cell centers).
double trapezoid(std::vector<double> const &values, double h);

/// State in the self-similar frame y = x / tau.
struct RescaledField
{
  MeshSpec            y_mesh;
  std::vector<double> R;
  std::vector<double> M;
  double              tau     = 1.0;
  double              tau_dot = 0.0;
  double              time    = 0.0;

  std::size_t size() const
  {
    return R.size();
  }
  double dy() const
  {
    return y_mesh.dx();
  }
  double y(std::size_t i) const
  {
    return y_mesh.center(i);
  }
  double mass() const;
};

/// R(y) = tau rho(tau y), M(y) = tau^2 m(tau y) - tau tau_dot y R(y).
RescaledField rescale(GridField const &field, double tau, double tau_dot);

/// rescale() with tau, tau_dot read off the trajectory at field.time.
RescaledField rescale(GridField const &field, gaussdyn::TauTrajectory const &traj);

struct Moments
{
  double I1 = 0.0;  // int M
  double I2 = 0.0;  // int y R
  double J1 = 0.0;  // int y^2 (R - Gamma)
  double J2 = 0.0;  // int y M
  double tail_ratio   = 0.0;  // max(R at the two edges) / max R
  bool   tail_warning = false;
};

inline constexpr double kTailThreshold = 1e-10;

Moments moments(RescaledField const &rf);

struct MomentOracle
{
  double I1         = 0.0;  // exact law for int M
  double I2         = 0.0;  // exact law for int y R
  double I1_literal = 0.0;  // the pure exponential e^{-t} I1(0)
};

/// Closed forms for I1 and I2 driven by the momentum law d/dt int m = -int m
/// and the trajectory used for rescaling. Throws out_of_range outside it.
MomentOracle moment_oracle(double t, double I1_0, double I2_0,
                           gaussdyn::TauTrajectory const &traj);

struct Energies
{
  double E           = 0.0;  // E_kin / 2 + rel_entropy
  double E_kin       = 0.0;  // tau^-2 int M^2 / R
  double E_plus      = 0.0;  // E_kin / 2 + int_{R>1} R log R + int y^2 R
  double rel_entropy = 0.0;  // int R log(R / Gamma)
  double dissipation = 0.0;  // tau^-2 int M^2 / R, the rate of decay of E
  double tail_bound  = 0.0;  // size of what the excluded cells could contribute
};

/// Cells with R <= kEntropyCut * max R are excluded from log and M^2/R terms.
inline constexpr double kEntropyCut = 1e-12;

Energies energies(RescaledField const &rf);

/// Tolerance on |mass(R) - int Gamma| / int Gamma accepted by the gap.
inline constexpr double kMassMatchTolerance = 1e-6;

/// 2 mass(R) int R log(R/Gamma) - ||R - Gamma||_1^2 after normalizing R to the
/// discrete mass of Gamma. Throws Errc::mass_mismatch beyond the tolerance.
double csiszar_kullback_gap(RescaledField const &rf);

double l1_to_gamma(RescaledField const &rf);

/// Discrete L = d_yy + 2 d_y(y .) at interior nodes; zero at the two edges.
std::vector<double> fokker_planck_operator(std::vector<double> const &R, MeshSpec const &y_mesh);

/// ||tau^2 d_t R - L R||_1 at every snapshot. Neighbours are interpolated
/// onto each snapshot's y grid; end points use one-sided three-point stencils.
/// Throws Errc::insufficient_snapshots for fewer than three snapshots.
std::vector<double> fokker_planck_residual(std::vector<RescaledField> const &sequence);

struct AppendixValues
{
  double eta_star_int = 0.0;
  double Q_int        = 0.0;
  double Q_min        = 0.0;  // pointwise minimum of Q over non-vacuum cells
  double weighted_eta = 0.0;  // (1 + t)^k int eta_*
  double tauJ1        = 0.0;
  double tauJ2        = 0.0;
};

inline constexpr double kDefaultWeightExponent = 0.75;

/// exact must be the reference solution on the same mesh (Errc::grid_mismatch otherwise).
AppendixValues appendix_diagnostics(GridField const &field, GridField const &exact,
                                    RescaledField const &rf, double t,
                                    double k = kDefaultWeightExponent);

/// Time series of named channels sharing one time axis. NaN marks a value that
/// is unavailable (for example a residual needing more snapshots); infinities
/// are rejected.
class DiagnosticSeries
{
public:
  explicit DiagnosticSeries(std::vector<std::string> channel_names, std::string provenance = {});

  void append(double t, std::vector<double> const &values);

  std::vector<std::string> const &names() const
  {
    return names_;
  }
  std::vector<double> const &times() const
  {
    return times_;
  }
  std::vector<double> const &channel(std::string const &name) const;
  std::vector<double> const &channel(std::size_t index) const
  {
    return columns_.at(index);
  }
  std::size_t size() const
  {
    return times_.size();
  }
  std::string const &provenance() const
  {
    return provenance_;
  }
  void set_provenance(std::string p)
  {
    provenance_ = std::move(p);
  }

private:
  std::vector<std::string>         names_;
  std::vector<std::vector<double>> columns_;
  std::vector<double>              times_;
  std::string                      provenance_;
};

/// Channel order of the wide diagnose table, after the time column.
std::vector<std::string> const &standard_channels();

}  // namespace del::diagnostics
