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
#include "diagnostics.hpp"

#include "error.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

namespace del::diagnostics {
namespace {

double Gamma(double y)
{
  return std::exp(-y * y);
}

double MaxOf(std::vector<double> const &v)
{
  double mx = 0.0;
  for (double x : v)
  {
    mx = std::max(mx, x);
  }
  return mx;
}

// trapezoid weight of node i out of n
double Weight(std::size_t i, std::size_t n, double h)
{
  return (i == 0 || i + 1 == n) ? 0.5 * h : h;
}

// Linear interpolation of nodal values onto y; zero outside the mesh.
double Sample(RescaledField const &rf, double y)
{
  double const s = (y - rf.y(0)) / rf.dy();
  if (s < 0.0 || s > static_cast<double>(rf.size() - 1))
  {
    return 0.0;
  }
  auto const   k = std::min(static_cast<std::size_t>(s), rf.size() - 2);
  double const w = s - static_cast<double>(k);
  return (1.0 - w) * rf.R[k] + w * rf.R[k + 1];
}

// d/dt at t[c] from three (t, value) pairs by differentiating the Lagrange
// interpolant
double ThreePointDerivative(std::array<double, 3> const &t, std::array<double, 3> const &v,
                            std::size_t c)
{
  double d = 0.0;
  for (std::size_t j = 0; j < 3; ++j)
  {
    // derivative of the j-th basis polynomial at t[c]
    double lj = 0.0;
    for (std::size_t k = 0; k < 3; ++k)
    {
      if (k == j)
      {
        continue;
      }
      double term = 1.0 / (t[j] - t[k]);
      for (std::size_t l = 0; l < 3; ++l)
      {
        if (l != j && l != k)
        {
          term *= (t[c] - t[l]) / (t[j] - t[l]);
        }
      }
      lj += term;
    }
    d += lj * v[j];
  }
  return d;
}

}  // namespace

double gamma_mass()
{
  return std::sqrt(std::numbers::pi);
}

double trapezoid(std::vector<double> const &values, double h)
{
  std::size_t const n = values.size();
  if (n == 0)
  {
    return 0.0;
  }
  if (n == 1)
  {
    return values[0] * h;
  }
  double s = 0.5 * (values.front() + values.back());
  for (std::size_t i = 1; i + 1 < n; ++i)
  {
    s += values[i];
  }
  return s * h;
}

double RescaledField::mass() const
{
  return trapezoid(R, dy());
}

RescaledField rescale(GridField const &field, double tau, double tau_dot)
{
  field.validate();
  if (!(tau > 0.0) || !std::isfinite(tau) || !std::isfinite(tau_dot))
  {
    Fail(Errc::domain, "rescale: tau must be positive");
  }
  RescaledField rf;
  rf.y_mesh  = {field.mesh.x_min / tau, field.mesh.x_max / tau, field.mesh.n_cells};
  rf.tau     = tau;
  rf.tau_dot = tau_dot;
  rf.time    = field.time;
  rf.R.resize(field.size());
  rf.M.resize(field.size());
  for (std::size_t i = 0; i < field.size(); ++i)
  {
    double const y = rf.y(i);
    rf.R[i]        = tau * field.rho[i];
    rf.M[i]        = tau * tau * field.m[i] - tau * tau_dot * y * rf.R[i];
  }
  return rf;
}

RescaledField rescale(GridField const &field, gaussdyn::TauTrajectory const &traj)
{
  auto const p = traj.eval(field.time);
  return rescale(field, p.tau, p.tau_dot);
}

Moments moments(RescaledField const &rf)
{
  std::size_t const   n = rf.size();
  std::vector<double> yR(n), y2R(n), yM(n);
  for (std::size_t i = 0; i < n; ++i)
  {
    double const y = rf.y(i);
    yR[i]          = y * rf.R[i];
    y2R[i]         = y * y * rf.R[i];
    yM[i]          = y * rf.M[i];
  }
  Moments out;
  double const h = rf.dy();
  out.I1         = trapezoid(rf.M, h);
  out.I2         = trapezoid(yR, h);
  out.J1         = trapezoid(y2R, h) - 0.5 * gamma_mass();
  out.J2         = trapezoid(yM, h);

  double const peak = MaxOf(rf.R);
  if (peak > 0.0)
  {
    out.tail_ratio = std::max(rf.R.front(), rf.R.back()) / peak;
  }
  out.tail_warning = out.tail_ratio > kTailThreshold;
  return out;
}

MomentOracle moment_oracle(double t, double I1_0, double I2_0, gaussdyn::TauTrajectory const &traj)
{
  if (!(t >= 0.0))
  {
    Fail(Errc::out_of_range, "moment_oracle: t must be >= 0");
  }
  auto const start = traj.eval(0.0);
  auto const now   = traj.eval(t);

  // back to physical moments: X = tau I2 and int m = (I1 + tau' X) / tau
  double const X0    = start.tau * I2_0;
  double const P0    = (I1_0 + start.tau_dot * X0) / start.tau;
  double const decay = std::exp(-t);
  double const X     = X0 - std::expm1(-t) * P0;

  MomentOracle out;
  out.I2         = X / now.tau;
  out.I1         = now.tau * decay * P0 - now.tau_dot * X;
  out.I1_literal = decay * I1_0;
  return out;
}

Energies energies(RescaledField const &rf)
{
  std::size_t const n    = rf.size();
  double const      h    = rf.dy();
  double const      cut  = kEntropyCut * MaxOf(rf.R);
  double const      inv2 = 1.0 / (rf.tau * rf.tau);

  double kin = 0.0, rel = 0.0, plus_log = 0.0, second = 0.0, tail = 0.0;
  for (std::size_t i = 0; i < n; ++i)
  {
    double const w = Weight(i, n, h);
    double const y = rf.y(i);
    double const r = rf.R[i];
    second += w * y * y * r;
    if (r > cut)
    {
      double const log_r = std::log(r);
      kin += w * rf.M[i] * rf.M[i] / r;
      rel += w * r * (log_r + y * y);
      if (r > 1.0)
      {
        plus_log += w * r * log_r;
      }
    }
    else
    {
      // what the excluded cell and the matching piece of Gamma could carry
      if (r > 0.0)
      {
        tail += w * std::abs(r * (std::log(r) + y * y));
      }
      tail += w * Gamma(y);
    }
  }
  Energies e;
  e.E_kin       = inv2 * kin;
  e.dissipation = e.E_kin;
  e.rel_entropy = rel;
  e.E           = 0.5 * e.E_kin + rel;
  e.E_plus      = 0.5 * e.E_kin + plus_log + second;
  e.tail_bound  = tail;
  return e;
}

double l1_to_gamma(RescaledField const &rf)
{
  std::vector<double> d(rf.size());
  for (std::size_t i = 0; i < rf.size(); ++i)
  {
    d[i] = std::abs(rf.R[i] - Gamma(rf.y(i)));
  }
  return trapezoid(d, rf.dy());
}

double csiszar_kullback_gap(RescaledField const &rf)
{
  std::size_t const   n = rf.size();
  double const        h = rf.dy();
  std::vector<double> g(n);
  for (std::size_t i = 0; i < n; ++i)
  {
    g[i] = Gamma(rf.y(i));
  }
  double const mass = rf.mass();
  double const ref  = trapezoid(g, h);
  if (!(std::abs(mass - gamma_mass()) <= kMassMatchTolerance * gamma_mass()))
  {
    Fail(Errc::mass_mismatch, "csiszar_kullback_gap: mass(R) = " + std::to_string(mass) +
                                  " differs from the mass of Gamma");
  }

  // with equal discrete masses the inequality holds exactly for the quadrature
  double const scale = ref / mass;
  double       H = 0.0, L1 = 0.0;
  for (std::size_t i = 0; i < n; ++i)
  {
    double const w = Weight(i, n, h);
    double const r = scale * rf.R[i];
    if (r > 0.0)
    {
      H += w * r * (std::log(r) - std::log(g[i] > 0.0 ? g[i] : std::numeric_limits<double>::min()));
    }
    L1 += w * std::abs(r - g[i]);
  }
  return 2.0 * ref * H - L1 * L1;
}

std::vector<double> fokker_planck_operator(std::vector<double> const &R, MeshSpec const &y_mesh)
{
  std::size_t const   n = R.size();
  double const        h = y_mesh.dx();
  std::vector<double> out(n, 0.0);
  for (std::size_t i = 1; i + 1 < n; ++i)
  {
    double const yl = y_mesh.center(i - 1), yr = y_mesh.center(i + 1);
    out[i] = (R[i + 1] - 2.0 * R[i] + R[i - 1]) / (h * h) + (yr * R[i + 1] - yl * R[i - 1]) / h;
  }
  return out;
}

std::vector<double> fokker_planck_residual(std::vector<RescaledField> const &sequence)
{
  std::size_t const count = sequence.size();
  if (count < 3)
  {
    Fail(Errc::insufficient_snapshots, "fokker_planck_residual: needs at least three snapshots");
  }
  for (std::size_t k = 1; k < count; ++k)
  {
    if (!(sequence[k].time > sequence[k - 1].time))
    {
      Fail(Errc::invalid_argument, "fokker_planck_residual: snapshot times must increase");
    }
  }

  std::vector<double> result(count);
  for (std::size_t k = 0; k < count; ++k)
  {
    std::size_t const first  = k == 0 ? 0 : (k + 1 == count ? count - 3 : k - 1);
    std::size_t const centre = k - first;

    RescaledField const  &rf = sequence[k];
    std::array<double, 3> t  = {sequence[first].time, sequence[first + 1].time,
                                sequence[first + 2].time};

    std::vector<double> const LR = fokker_planck_operator(rf.R, rf.y_mesh);
    std::size_t const         n  = rf.size();
    std::vector<double>       r(n, 0.0);
    for (std::size_t i = 1; i + 1 < n; ++i)
    {
      double const          y = rf.y(i);
      std::array<double, 3> v{};
      for (std::size_t j = 0; j < 3; ++j)
      {
        v[j] = first + j == k ? rf.R[i] : Sample(sequence[first + j], y);
      }
      double const dR = ThreePointDerivative(t, v, centre);
      r[i]            = std::abs(rf.tau * rf.tau * dR - LR[i]);
    }
    result[k] = trapezoid(r, rf.dy());
  }
  return result;
}

AppendixValues appendix_diagnostics(GridField const &field, GridField const &exact,
                                    RescaledField const &rf, double t, double k)
{
  if (field.size() != exact.size() || field.mesh.x_min != exact.mesh.x_min ||
      field.mesh.x_max != exact.mesh.x_max || rf.size() != field.size())
  {
    Fail(Errc::grid_mismatch, "appendix_diagnostics: field, reference and rescaled grids differ");
  }
  if (!(k > 0.0 && k < 1.0))
  {
    Fail(Errc::invalid_argument, "appendix_diagnostics: k must lie in (0, 1)");
  }

  std::size_t const   n = field.size();
  std::vector<double> eta(n, 0.0), q(n, 0.0);
  double              q_min = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i)
  {
    double const rho = field.rho[i], m = field.m[i];
    double const rb = exact.rho[i], mb = exact.m[i];
    if (!(rho > field.vacuum_floor) || !(rb > 0.0))
    {
      continue;
    }
    double const u_bar = mb / rb;
    eta[i]             = rho * std::log(rho / rb) + m * m / rho;
    q[i]               = m * m / rho - 2.0 * u_bar * m + u_bar * u_bar * rho;
    q_min              = std::min(q_min, q[i]);
  }

  AppendixValues out;
  out.eta_star_int = trapezoid(eta, field.dx());
  out.Q_int        = trapezoid(q, field.dx());
  out.Q_min        = std::isfinite(q_min) ? q_min : 0.0;
  out.weighted_eta = std::pow(1.0 + t, k) * out.eta_star_int;
  Moments const mo = moments(rf);
  out.tauJ1        = rf.tau * std::abs(mo.J1);
  out.tauJ2        = rf.tau * std::abs(mo.J2);
  return out;
}

DiagnosticSeries::DiagnosticSeries(std::vector<std::string> channel_names, std::string provenance)
    : names_(std::move(channel_names))
    , columns_(names_.size())
    , provenance_(std::move(provenance))
{}

void DiagnosticSeries::append(double t, std::vector<double> const &values)
{
  if (values.size() != names_.size())
  {
    Fail(Errc::invalid_argument, "DiagnosticSeries: row width does not match the channel count");
  }
  if (!times_.empty() && !(t >= times_.back()))
  {
    Fail(Errc::invalid_argument, "DiagnosticSeries: times must be non-decreasing");
  }
  for (double v : values)
  {
    if (std::isinf(v))
    {
      Fail(Errc::non_finite, "DiagnosticSeries: infinite value");
    }
  }
  times_.push_back(t);
  for (std::size_t c = 0; c < values.size(); ++c)
  {
    columns_[c].push_back(values[c]);
  }
}

std::vector<double> const &DiagnosticSeries::channel(std::string const &name) const
{
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end())
  {
    Fail(Errc::invalid_argument, "DiagnosticSeries: no channel named " + name);
  }
  return columns_[static_cast<std::size_t>(it - names_.begin())];
}

std::vector<std::string> const &standard_channels()
{
  static std::vector<std::string> const names = {
      "I1",     "I2",          "J1",          "J2",       "E",            "E_kin",
      "E_plus", "rel_entropy", "L1_to_Gamma", "ck_gap",   "eta_star",     "weighted_eta",
      "tauJ1",  "tauJ2",       "fp_residual"};
  return names;
}

}  // namespace del::diagnostics
