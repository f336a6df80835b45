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
#include "experiments.hpp"

#include "diagnostics.hpp"
#include "error.hpp"
#include "gaussdyn.hpp"
#include "io.hpp"
#include "profiles.hpp"
#include "solver.hpp"
#include "specfun.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <fstream>
#include <limits>
#include <memory>
#include <numbers>

namespace del::expcli {
namespace fs = std::filesystem;
namespace dg = del::diagnostics;

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string Fmt(char const *fmt, ...)
{
  char    buf[512];
  va_list args;
  va_start(args, fmt);
  std::vsnprintf(buf, sizeof buf, fmt, args);
  va_end(args);
  return buf;
}

class Context
{
public:
  Context(ExperimentSpec const &spec, fs::path dir, RunReport &report)
      : spec(spec)
      , dir_(std::move(dir))
      , report_(report)
  {}

  fs::path file(std::string const &name)
  {
    report_.files.push_back(name);
    return dir_ / name;
  }

  fs::path const &dir() const
  {
    return dir_;
  }

  void check(std::string name, bool ok, std::string detail)
  {
    report_.checks.push_back({std::move(name), ok ? Verdict::pass : Verdict::fail, std::move(detail)});
  }

  void skip(std::string name, std::string detail)
  {
    report_.checks.push_back({std::move(name), Verdict::skip, std::move(detail)});
  }

  ExperimentSpec const &spec;

private:
  fs::path   dir_;
  RunReport &report_;
};

gaussdyn::GaussianInit GaussianFromSpec(ExperimentSpec const &spec)
{
  return {spec.real("alpha0"), spec.real("beta0"), spec.real("b0"), spec.real("c0"), spec.real("x0")};
}

double L1Difference(std::vector<double> const &a, std::vector<double> const &b, double dx)
{
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
  {
    s += std::abs(a[i] - b[i]);
  }
  return s * dx;
}

std::vector<double> Linspace(double a, double b, long n)
{
  std::vector<double> out;
  if (n <= 1)
  {
    out.push_back(b);
    return out;
  }
  for (long k = 0; k < n; ++k)
  {
    out.push_back(a + (b - a) * static_cast<double>(k) / static_cast<double>(n - 1));
  }
  out.back() = b;
  return out;
}

std::vector<double> Logspace(double a, double b, long n)
{
  std::vector<double> out = Linspace(std::log(a), std::log(b), n);
  for (double &v : out)
  {
    v = std::exp(v);
  }
  out.front() = a;
  out.back()  = b;
  return out;
}

// --- figure1 ---------------------------------------------------------------

void RunFigure1(Context &ctx)
{
  auto const   gammas = ctx.spec.real_list("gammas");
  double const lambda = ctx.spec.real("lambda");
  double const w      = ctx.spec.real("x_half_width");
  profiles::SamplingGrid const grid{-w, w, static_cast<int>(ctx.spec.integer("samples"))};
  if (gammas.empty())
  {
    Fail(Errc::invalid_argument, "figure1: gammas must not be empty");
  }

  Table                                gaps{{"gamma", "sup_gap"}, {}};
  std::vector<std::pair<double, double>> pairs;
  for (double g : gammas)
  {
    double const gap = profiles::limit_gap(g, lambda, grid);
    gaps.rows.push_back({g, gap});
    pairs.emplace_back(g, gap);
  }
  write_csv(ctx.file("figure1_gaps.csv"), gaps);

  Table profiles_table;
  profiles_table.columns = {"xi", "gaussian"};
  std::vector<profiles::BarenblattProfile> profs;
  for (double g : gammas)
  {
    profs.push_back(profiles::barenblatt_coefficients(g, lambda));
    profiles_table.columns.push_back("B_" + Fmt("%g", g));
  }
  for (double xi : Linspace(-w, w, ctx.spec.integer("profile_points")))
  {
    std::vector<double> row = {xi, profiles::gaussian_limit(lambda, xi)};
    for (auto const &p : profs)
    {
      row.push_back(profiles::barenblatt_shape(p, xi));
    }
    profiles_table.rows.push_back(std::move(row));
  }
  write_csv(ctx.file("figure1_profiles.csv"), profiles_table);
  write_dat(ctx.file("figure1_profiles.dat"), profiles_table);
  write_gnuplot_script(profiles_table.columns, "figure1_profiles.dat", ctx.file("figure1_profiles.gp"));

  std::sort(pairs.begin(), pairs.end(), [](auto const &a, auto const &b) { return a.first > b.first; });
  bool        decreasing = true;
  std::string detail;
  for (std::size_t k = 0; k < pairs.size(); ++k)
  {
    detail += Fmt("%sgap(%g)=%.4g", k ? " > " : "", pairs[k].first, pairs[k].second);
    if (k > 0 && !(pairs[k].second < pairs[k - 1].second))
    {
      decreasing = false;
    }
  }
  ctx.check("sup_gap strictly decreasing as gamma decreases", decreasing, detail);

  auto find = [&](double g) -> double {
    for (auto const &[gg, gap] : pairs)
    {
      if (std::abs(gg - g) < 1e-12)
      {
        return gap;
      }
    }
    return kNaN;
  };
  double const g101 = find(1.01), g11 = find(1.1);
  if (std::isnan(g101) || std::isnan(g11))
  {
    ctx.skip("gap(1.01)/gap(1.1) in [0.05, 0.3]", "needs gamma = 1.01 and 1.1 in the list");
  }
  else
  {
    double const r = g101 / g11;
    ctx.check("gap(1.01)/gap(1.1) in [0.05, 0.3]", r >= 0.05 && r <= 0.3, Fmt("ratio %.4g", r));
  }
}

// --- tau-study ---------------------------------------------------------------

void RunTauStudy(Context &ctx)
{
  double const alpha0 = ctx.spec.real("alpha0");
  double const t_end  = ctx.spec.real("t_end");
  if (!(t_end > 0.0))
  {
    Fail(Errc::invalid_argument, "tau-study: t_end must be positive");
  }
  auto const traj = gaussdyn::integrate_tau(
      {alpha0, ctx.spec.real("beta0"), t_end, ctx.spec.real("tolerance")});

  Table table{{"t", "tau", "tau_dot", "tau_over_2sqrt_at", "tau_dot_sqrt_t_over_a"}, {}};
  for (double t : Logspace(std::min(1e-2, t_end), t_end, ctx.spec.integer("samples")))
  {
    auto const p = traj.eval(t);
    table.rows.push_back({t, p.tau, p.tau_dot, p.tau / (2.0 * std::sqrt(alpha0 * t)),
                          p.tau_dot * std::sqrt(t / alpha0)});
  }
  write_csv(ctx.file("tau.csv"), table);
  write_dat(ctx.file("tau.dat"), table);
  write_gnuplot_script(table.columns, "tau.dat", ctx.file("tau.gp"), true);

  auto const   end = traj.eval(t_end);
  double const r1  = std::abs(end.tau / (2.0 * std::sqrt(alpha0 * t_end)) - 1.0);
  double const r2  = std::abs(end.tau_dot * std::sqrt(t_end / alpha0) - 1.0);
  double       dev = 0.0;
  for (auto const &s : traj.samples())
  {
    dev = std::max(dev, std::abs(s.tau - 2.0 * std::sqrt(alpha0 * s.t)));
  }
  ctx.check("|tau/(2 sqrt(a t)) - 1| < 0.05 at t_end", r1 < 0.05, Fmt("%.4g", r1));
  ctx.check("|tau' sqrt(t/a) - 1| < 0.1 at t_end", r2 < 0.1, Fmt("%.4g", r2));
  ctx.check("max |tau - 2 sqrt(a t)| < 5", dev < 5.0, Fmt("%.4g", dev));
}

// --- gaussian-evolve ---------------------------------------------------------

void RunGaussianEvolve(Context &ctx)
{
  auto const   init  = GaussianFromSpec(ctx.spec);
  double const t_end = ctx.spec.real("t_end");
  gaussdyn::GaussianParams const p(init, t_end);

  Table params{{"t", "alpha", "beta", "b", "c", "xbar", "tau", "tau_dot"}, {}};
  for (double t : Linspace(0.0, t_end, ctx.spec.integer("output_times")))
  {
    auto const s  = gaussdyn::params_at(p, t);
    auto const tp = p.trajectory().eval(t);
    params.rows.push_back({t, s.alpha, s.beta, s.b, s.c, s.xbar, tp.tau, tp.tau_dot});
  }
  write_csv(ctx.file("gaussian_params.csv"), params);

  Table conv{{"n_cells", "dx", "l1_error", "ratio"}, {}};
  double prev = kNaN;
  bool   ok   = true;
  std::string detail;
  for (double nd : ctx.spec.real_list("n_cells"))
  {
    int const         n = static_cast<int>(nd);
    solver::SimConfig cfg;
    cfg.mesh    = solver::default_gaussian_mesh(init, t_end, n);
    cfg.t_end   = t_end;
    cfg.cfl     = ctx.spec.real("cfl");
    cfg.initial = solver::GaussianData{init};
    GridField const num   = solver::simulate(cfg).back();
    GridField const exact = gaussdyn::exact_state(p, t_end, cfg.mesh);
    double const    err   = L1Difference(num.rho, exact.rho, cfg.mesh.dx());
    double const    ratio = prev / err;
    conv.rows.push_back({nd, cfg.mesh.dx(), err, ratio});
    if (!std::isnan(ratio))
    {
      ok = ok && ratio >= 1.7 && ratio <= 2.3;
      detail += Fmt("%s%.4g", detail.empty() ? "ratios " : ", ", ratio);
    }
    prev = err;
  }
  write_csv(ctx.file("convergence.csv"), conv);
  if (conv.rows.size() < 2)
  {
    ctx.skip("L1 error ratio in [1.7, 2.3] per doubling", "needs at least two grids");
  }
  else
  {
    ctx.check("L1 error ratio in [1.7, 2.3] per doubling", ok, detail);
  }

  Table  ans{{"n_cells", "dx", "res_continuity", "res_momentum", "order"}, {}};
  double prev_res = kNaN;
  double worst    = std::numeric_limits<double>::infinity();
  std::vector<MeshSpec> meshes;
  double                h_max = 0.0;
  for (double nd : ctx.spec.real_list("ansatz_cells"))
  {
    meshes.push_back(solver::default_gaussian_mesh(init, t_end, static_cast<int>(nd)));
    h_max = std::max(h_max, meshes.back().dx());
  }
  // the time differences reach t_end + dx
  gaussdyn::GaussianParams const pa(init, t_end + 2.0 * h_max);
  for (MeshSpec const &mesh : meshes)
  {
    double const   nd   = mesh.n_cells;
    auto const     r    = gaussdyn::ansatz_residual(pa, t_end, mesh, mesh.dx());
    double const   res  = std::max(r.res_continuity, r.res_momentum);
    double const   ord  = std::log2(prev_res / res);
    if (!std::isnan(ord))
    {
      worst = std::min(worst, ord);
    }
    ans.rows.push_back({nd, mesh.dx(), r.res_continuity, r.res_momentum, ord});
    prev_res = res;
  }
  write_csv(ctx.file("ansatz_residual.csv"), ans);
  if (ans.rows.size() < 2)
  {
    ctx.skip("ansatz residual order >= 1.8", "needs at least two grids");
  }
  else
  {
    ctx.check("ansatz residual order >= 1.8", worst >= 1.8, Fmt("worst observed order %.3f", worst));
  }
}

// --- simulate ------------------------------------------------------------------

solver::SimConfig SimConfigFromSpec(ExperimentSpec const &spec)
{
  solver::SimConfig cfg;
  cfg.gamma          = spec.real("gamma");
  cfg.cfl            = spec.real("cfl");
  cfg.t_end          = spec.real("t_end");
  cfg.snapshot_times = spec.real_list("snapshots");
  cfg.vacuum_floor   = spec.real("vacuum_floor");
  int const n        = static_cast<int>(spec.integer("n_cells"));

  std::string const initial = spec.text("initial");
  if (initial == "gaussian")
  {
    auto const init = GaussianFromSpec(spec);
    cfg.initial     = solver::GaussianData{init};
    cfg.mesh        = solver::default_gaussian_mesh(init, cfg.t_end, n);
  }
  else if (initial == "barenblatt")
  {
    double const lambda = spec.real("lambda");
    cfg.initial         = solver::BarenblattData{lambda};
    if (!(cfg.gamma > 1.0))
    {
      Fail(Errc::invalid_argument, "simulate: barenblatt initial data needs gamma > 1");
    }
    auto const   prof = profiles::barenblatt_coefficients(cfg.gamma, lambda);
    double const edge = prof.support_edge() * std::pow(1.0 + cfg.t_end, 1.0 / (cfg.gamma + 1.0));
    double const half = std::max(4.0, 2.0 * edge);
    cfg.mesh          = {-half, half, n};
  }
  else if (initial == "custom")
  {
    if (spec.text("table").empty())
    {
      Fail(Errc::missing_key, "simulate: initial = custom needs 'table'");
    }
    Table const        t = read_csv(spec.text("table"));
    solver::CustomData data;
    if (t.columns.size() != 3)
    {
      Fail(Errc::parse, "simulate: custom table needs columns x,rho,m");
    }
    for (auto const &row : t.rows)
    {
      data.x.push_back(row[0]);
      data.rho.push_back(row[1]);
      data.m.push_back(row[2]);
    }
    if (data.x.empty())
    {
      Fail(Errc::parse, "simulate: custom table is empty");
    }
    cfg.mesh    = {data.x.front(), data.x.back(), n};
    cfg.initial = std::move(data);
  }
  else
  {
    Fail(Errc::invalid_argument,
         "simulate: initial must be gaussian, barenblatt or custom, got '" + initial + "'");
  }

  if (spec.has("x_min") != spec.has("x_max"))
  {
    Fail(Errc::missing_key, "simulate: give both x_min and x_max or neither");
  }
  if (spec.has("x_min"))
  {
    cfg.mesh = {spec.real("x_min"), spec.real("x_max"), n};
  }
  cfg.validate();
  return cfg;
}

std::string SnapshotName(std::size_t k)
{
  return Fmt("snapshot_%04zu.csv", k);
}

void RunSimulate(Context &ctx)
{
  solver::SimConfig const cfg = SimConfigFromSpec(ctx.spec);
  GridField const         initial = solver::initial_field(cfg);
  double const            mass0   = initial.mass();

  solver::StepStats totals;
  long              steps = 0;
  Table             mass_table{{"t", "mass", "outflow", "floor_added", "floored_cells"}, {}};

  auto const snaps = solver::simulate(cfg, [&](GridField const &, GridField const &, double,
                                              solver::StepStats const &s) {
    totals.boundary_outflow += s.boundary_outflow;
    totals.floor_mass_added += s.floor_mass_added;
    totals.floored_cells += s.floored_cells;
    ++steps;
  });

  // universal rescaling trajectory, shared by every initial datum
  auto const traj = gaussdyn::integrate_tau({1.0, 0.0, cfg.t_end, 1e-10});
  Table      trajectory{{"t", "tau", "tau_dot"}, {}};
  for (std::size_t k = 0; k < snaps.size(); ++k)
  {
    write_snapshot_csv(ctx.file(SnapshotName(k)), snaps[k]);
    auto const p = traj.eval(snaps[k].time);
    trajectory.rows.push_back({snaps[k].time, p.tau, p.tau_dot});
  }
  write_csv(ctx.file("trajectory.csv"), trajectory);

  GridField const &last = snaps.back();
  mass_table.rows.push_back({last.time, last.mass(), totals.boundary_outflow,
                             totals.floor_mass_added, static_cast<double>(totals.floored_cells)});
  write_csv(ctx.file("mass.csv"), mass_table);

  double const drift =
      std::abs(last.mass() - mass0 + totals.boundary_outflow - totals.floor_mass_added);
  ctx.check("mass conserved up to measured outflow and floor injection",
            drift <= 1e-12 * mass0,
            Fmt("|drift| = %.3g, outflow %.3g, floor %.3g, %ld steps", drift,
                totals.boundary_outflow, totals.floor_mass_added, steps));
  ctx.check("vacuum floor injected no material mass",
            totals.floor_mass_added <= 1e-10 * mass0,
            Fmt("floor added %.3g over %d cell clips", totals.floor_mass_added, totals.floored_cells));
}

// --- diagnose ------------------------------------------------------------------

struct Loaded
{
  std::vector<GridField>     fields;
  std::vector<dg::RescaledField> rescaled;
};

Loaded LoadRun(fs::path const &input)
{
  if (!fs::is_directory(input))
  {
    Fail(Errc::io, "diagnose: input '" + input.string() + "' is not a directory");
  }
  std::vector<fs::path> files;
  for (auto const &entry : fs::directory_iterator(input))
  {
    auto const name = entry.path().filename().string();
    if (name.rfind("snapshot_", 0) == 0 && entry.path().extension() == ".csv")
    {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  if (files.empty())
  {
    Fail(Errc::insufficient_snapshots, "diagnose: no snapshot_*.csv in '" + input.string() + "'");
  }
  Table const traj = read_csv(input / "trajectory.csv");

  Loaded out;
  for (auto const &f : files)
  {
    GridField field = read_snapshot_csv(f);
    auto      row   = std::find_if(traj.rows.begin(), traj.rows.end(), [&](auto const &r) {
      return std::abs(r[0] - field.time) <= 1e-12 * std::max(1.0, std::abs(field.time));
    });
    if (row == traj.rows.end() || row->size() < 3)
    {
      Fail(Errc::parse, "diagnose: trajectory.csv has no row for t = " + format_real(field.time));
    }
    out.rescaled.push_back(dg::rescale(field, (*row)[1], (*row)[2]));
    out.fields.push_back(std::move(field));
  }
  return out;
}

void RunDiagnose(Context &ctx)
{
  // relative inputs name a sibling experiment directory under the same output root
  fs::path input = ctx.spec.text("input");
  if (input.is_relative())
  {
    input = ctx.dir().parent_path() / input;
  }
  Loaded const run = LoadRun(input);
  double const k   = ctx.spec.real("k");

  std::string const ref_mode = ctx.spec.text("reference");
  if (ref_mode != "auto" && ref_mode != "gaussian" && ref_mode != "none")
  {
    Fail(Errc::invalid_argument, "diagnose: reference must be auto, gaussian or none");
  }
  double const           mass0 = run.fields.front().mass();
  gaussdyn::GaussianInit ref_init{1.0, 0.0, mass0 / dg::gamma_mass(), 0.0, 0.0};
  if (ref_mode == "gaussian")
  {
    ref_init = GaussianFromSpec(ctx.spec);
  }
  double const t_last = run.fields.back().time;
  std::unique_ptr<gaussdyn::GaussianParams> ref;
  if (ref_mode != "none")
  {
    ref = std::make_unique<gaussdyn::GaussianParams>(ref_init, t_last);
  }

  std::vector<double> fp(run.fields.size(), kNaN);
  if (run.rescaled.size() >= 3)
  {
    fp = dg::fokker_planck_residual(run.rescaled);
  }

  dg::DiagnosticSeries series(dg::standard_channels(), input.string());
  double q_min = std::numeric_limits<double>::infinity();
  double worst_mass = 0.0, worst_rel = std::numeric_limits<double>::infinity();
  double worst_ck = std::numeric_limits<double>::infinity();
  int    ck_rows = 0, rel_rows = 0, tail_rows = 0;
  for (std::size_t s = 0; s < run.fields.size(); ++s)
  {
    GridField const         &field = run.fields[s];
    dg::RescaledField const &rf    = run.rescaled[s];
    auto const               mo    = dg::moments(rf);
    auto const               en    = dg::energies(rf);
    tail_rows += mo.tail_warning ? 1 : 0;

    double const mass_rel = std::abs(rf.mass() - dg::trapezoid(field.rho, field.dx())) / field.mass();
    worst_mass            = std::max(worst_mass, mass_rel);

    double ck = kNaN;
    try
    {
      ck = dg::csiszar_kullback_gap(rf);
      worst_ck = std::min(worst_ck, ck);
      ++ck_rows;
      worst_rel = std::min(worst_rel, en.rel_entropy);
      ++rel_rows;
    }
    catch (Error const &e)
    {
      if (e.code() != Errc::mass_mismatch)
      {
        throw;
      }
    }

    dg::AppendixValues ap;
    double eta = kNaN, weighted = kNaN;
    ap.tauJ1 = rf.tau * std::abs(mo.J1);
    ap.tauJ2 = rf.tau * std::abs(mo.J2);
    if (ref)
    {
      GridField const exact = gaussdyn::exact_state(*ref, field.time, field.mesh);
      ap                    = dg::appendix_diagnostics(field, exact, rf, field.time, k);
      eta                   = ap.eta_star_int;
      weighted              = ap.weighted_eta;
      q_min                 = std::min(q_min, ap.Q_min);
    }
    series.append(field.time, {mo.I1, mo.I2, mo.J1, mo.J2, en.E, en.E_kin, en.E_plus, en.rel_entropy,
                               dg::l1_to_gamma(rf), ck, eta, weighted, ap.tauJ1, ap.tauJ2, fp[s]});
  }

  Table wide;
  wide.columns.push_back("t");
  wide.columns.insert(wide.columns.end(), series.names().begin(), series.names().end());
  for (std::size_t r = 0; r < series.size(); ++r)
  {
    std::vector<double> row = {series.times()[r]};
    for (std::size_t c = 0; c < series.names().size(); ++c)
    {
      row.push_back(series.channel(c)[r]);
    }
    wide.rows.push_back(std::move(row));
  }
  write_csv(ctx.file("diagnostics.csv"), wide);
  emit_plotdata(series, ctx.file("diagnostics.dat"));
  write_gnuplot_script(wide.columns, "diagnostics.dat", ctx.file("diagnostics.gp"), true);

  ctx.check("rescaling preserves mass to 1e-10", worst_mass <= 1e-10, Fmt("worst %.3g", worst_mass));
  ctx.check("rescaled tails below 1e-10 of peak", tail_rows == 0,
            Fmt("%d of %zu snapshots flagged", tail_rows, series.size()));
  if (rel_rows == 0)
  {
    ctx.skip("rel_entropy >= 0", "no snapshot carries the mass of Gamma");
    ctx.skip("Csiszar-Kullback gap >= -1e-8", "no snapshot carries the mass of Gamma");
  }
  else
  {
    ctx.check("rel_entropy >= 0", worst_rel >= 0.0,
              Fmt("min %.3g over %d snapshots", worst_rel, rel_rows));
    ctx.check("Csiszar-Kullback gap >= -1e-8", worst_ck >= -1e-8,
              Fmt("min %.3g over %d snapshots", worst_ck, ck_rows));
  }
  if (ref)
  {
    ctx.check("Q >= -1e-12 pointwise", q_min >= -1e-12, Fmt("min %.3g", q_min));
  }
  else
  {
    ctx.skip("Q >= -1e-12 pointwise", "reference = none");
  }

  // late-time monitors need snapshots spanning [1, 100]
  auto at = [&](double t) -> std::ptrdiff_t {
    auto const &ts = series.times();
    for (std::size_t i = 0; i < ts.size(); ++i)
    {
      if (std::abs(ts[i] - t) <= 1e-9 * t)
      {
        return static_cast<std::ptrdiff_t>(i);
      }
    }
    return -1;
  };
  std::ptrdiff_t const i1 = at(1.0), i10 = at(10.0), i100 = at(100.0);
  if (i1 >= 0 && i100 >= 0 && !std::isnan(fp[i1]) && !std::isnan(fp[i100]))
  {
    ctx.check("Fokker-Planck residual at t=100 below t=1", fp[i100] < fp[i1],
              Fmt("%.4g vs %.4g", fp[i100], fp[i1]));
  }
  else
  {
    ctx.skip("Fokker-Planck residual at t=100 below t=1", "needs three or more snapshots incl. t=1, t=100");
  }
  for (char const *name : {"tauJ1", "tauJ2"})
  {
    std::string const label = std::string(name) + " non-growing on [1, 100]";
    if (i1 < 0 || i10 < 0 || i100 < 0)
    {
      ctx.skip(label, "needs snapshots at t = 1, 10 and 100");
      continue;
    }
    auto const &v     = series.channel(name);
    auto const &ts    = series.times();
    double      early = 0.0, late = 0.0;
    for (std::size_t i = 0; i < ts.size(); ++i)
    {
      if (ts[i] >= 1.0 && ts[i] <= 10.0)
      {
        early = std::max(early, v[i]);
      }
      if (ts[i] >= 10.0 && ts[i] <= 100.0)
      {
        late = std::max(late, v[i]);
      }
    }
    ctx.check(label, late <= early, Fmt("max on [10,100] %.4g vs max on [1,10] %.4g", late, early));
  }
}

// --- moments-study -------------------------------------------------------------

void RunMomentsStudy(Context &ctx)
{
  auto const   init  = GaussianFromSpec(ctx.spec);
  double const t_end = ctx.spec.real("t_end");
  double const every = ctx.spec.real("snapshot_every");
  if (!(every > 0.0))
  {
    Fail(Errc::invalid_argument, "moments-study: snapshot_every must be positive");
  }

  solver::SimConfig cfg;
  cfg.t_end   = t_end;
  cfg.cfl     = ctx.spec.real("cfl");
  cfg.mesh    = solver::default_gaussian_mesh(init, t_end, static_cast<int>(ctx.spec.integer("n_cells")));
  cfg.initial = solver::GaussianData{init};
  for (long i = 0; every * static_cast<double>(i) < t_end - 1e-12; ++i)
  {
    cfg.snapshot_times.push_back(every * static_cast<double>(i));
  }
  cfg.snapshot_times.push_back(t_end);

  auto const traj = gaussdyn::integrate_tau({1.0, 0.0, t_end, 1e-10});
  double     E0 = kNaN, worst_inc = -std::numeric_limits<double>::infinity();
  auto       observe = [&](GridField const &a, GridField const &b, double dt, solver::StepStats const &) {
    auto const ea = dg::energies(dg::rescale(a, traj));
    auto const eb = dg::energies(dg::rescale(b, traj));
    if (std::isnan(E0))
    {
      E0 = ea.E;
    }
    worst_inc = std::max(worst_inc, eb.E + 0.5 * dt * (ea.dissipation + eb.dissipation) - ea.E);
  };
  auto const snaps = solver::simulate(cfg, observe);

  gaussdyn::GaussianParams const p(init, t_end);
  Table table{{"t", "I1", "I2", "J1", "J2", "I1_oracle", "I2_oracle", "I1_literal", "int_m",
               "int_m_law", "E", "rel_entropy", "ck_gap", "Q_min"},
              {}};
  dg::Moments m0;
  double      im0 = 0.0;
  double      e_lit = 0.0, e_i1 = 0.0, e_i2 = 0.0, e_im = 0.0;
  double      min_rel = std::numeric_limits<double>::infinity(), min_ck = min_rel, min_q = min_rel;
  for (std::size_t s = 0; s < snaps.size(); ++s)
  {
    auto const &f  = snaps[s];
    auto const  rf = dg::rescale(f, traj);
    auto const  mo = dg::moments(rf);
    if (s == 0)
    {
      m0  = mo;
      im0 = f.momentum();
    }
    auto const   orc   = dg::moment_oracle(f.time, m0.I1, m0.I2, traj);
    auto const   en    = dg::energies(rf);
    double const ck    = dg::csiszar_kullback_gap(rf);
    double const law   = std::exp(-f.time) * im0;
    auto const   exact = gaussdyn::exact_state(p, f.time, cfg.mesh);
    auto const   ap    = dg::appendix_diagnostics(f, exact, rf, f.time);
    table.rows.push_back({f.time, mo.I1, mo.I2, mo.J1, mo.J2, orc.I1, orc.I2, orc.I1_literal,
                          f.momentum(), law, en.E, en.rel_entropy, ck, ap.Q_min});

    e_lit = std::max(e_lit, std::abs(mo.I1 / m0.I1 - std::exp(-f.time)));
    e_i1  = std::max(e_i1, std::abs(mo.I1 - orc.I1));
    e_i2  = std::max(e_i2, std::abs(mo.I2 - orc.I2));
    e_im  = std::max(e_im, std::abs(f.momentum() - law));
    min_rel = std::min(min_rel, en.rel_entropy);
    min_ck  = std::min(min_ck, ck);
    min_q   = std::min(min_q, ap.Q_min);
  }
  write_csv(ctx.file("moments.csv"), table);
  write_dat(ctx.file("moments.dat"), table);
  write_gnuplot_script(table.columns, "moments.dat", ctx.file("moments.gp"));

  ctx.check("|I1(t)/I1(0) - e^-t| <= 1e-3", e_lit <= 1e-3,
            Fmt("max %.4g; the rescaled momentum obeys I1' = -I1 - 2 I2, see I1_oracle", e_lit));
  ctx.check("|I1 - exact law| <= 0.02 |I1(0)|", e_i1 <= 0.02 * std::abs(m0.I1),
            Fmt("max %.4g vs %.4g", e_i1, 0.02 * std::abs(m0.I1)));
  ctx.check("|int m - e^-t int m0| <= 1e-3 |int m0|", e_im <= 1e-3 * std::abs(im0),
            Fmt("max %.4g", e_im));
  ctx.check("|I2 - oracle| <= 0.02 |I2(0)|", e_i2 <= 0.02 * std::abs(m0.I2),
            Fmt("max %.4g vs %.4g", e_i2, 0.02 * std::abs(m0.I2)));
  ctx.check("E + dissipation non-increasing per step within 1e-6 |E(0)|",
            worst_inc <= 1e-6 * std::abs(E0), Fmt("worst increment %.3g, E(0) = %.6g", worst_inc, E0));
  ctx.check("rel_entropy >= 0", min_rel >= 0.0, Fmt("min %.3g", min_rel));
  ctx.check("Csiszar-Kullback gap >= -1e-8", min_ck >= -1e-8, Fmt("min %.3g", min_ck));
  ctx.check("Q >= -1e-12 pointwise", min_q >= -1e-12, Fmt("min %.3g", min_q));

  // J1 rate on the exact solution, late times
  double const t_max = ctx.spec.real("exact_t_max");
  if (!(t_max > 10.0))
  {
    ctx.skip("sqrt(t)|J1| <= 3x its t=10 value on [1, t_max]", "exact_t_max must exceed 10");
    return;
  }
  gaussdyn::GaussianParams const  pe(init, t_max);
  auto const                      traj_e = gaussdyn::integrate_tau({1.0, 0.0, t_max, 1e-10});
  std::vector<double>             ts     = Logspace(1.0, t_max, 41);
  ts.push_back(10.0);
  std::sort(ts.begin(), ts.end());
  Table  jt{{"t", "J1", "sqrt_t_J1", "E_kin", "sqrt_t_E_kin"}, {}};
  double at10 = kNaN, worst = 0.0;
  for (double t : ts)
  {
    double const   half = 12.0 * pe.trajectory().tau(t) / std::sqrt(init.alpha0) + 1.0;
    double const   xc   = gaussdyn::center_xbar(pe, t);
    MeshSpec const mesh{xc - half, xc + half, 20000};
    GridField      ex = gaussdyn::exact_state(pe, t, mesh);
    auto const     rf = dg::rescale(ex, traj_e.tau(t), traj_e.tau_dot(t));
    auto const     mo = dg::moments(rf);
    auto const     en = dg::energies(rf);
    double const   v  = std::sqrt(t) * std::abs(mo.J1);
    jt.rows.push_back({t, mo.J1, v, en.E_kin, std::sqrt(t) * en.E_kin});
    if (t == 10.0)
    {
      at10 = v;
    }
    worst = std::max(worst, v);
  }
  write_csv(ctx.file("j1_exact.csv"), jt);
  ctx.check("sqrt(t)|J1| <= 3x its t=10 value on [1, t_max]", worst <= 3.0 * at10,
            Fmt("max %.4g vs 3 x %.4g", worst, at10));
}

// --- specfun-check -------------------------------------------------------------

void RunSpecfunCheck(Context &ctx)
{
  double const t_min = ctx.spec.real("t_min"), t_max = ctx.spec.real("t_max");
  double const w_max = ctx.spec.real("wronskian_t_max"), h = ctx.spec.real("h");
  long const   n     = ctx.spec.integer("samples");

  Table  table{{"t", "f1", "f2", "f2_scaled", "wronskian_scaled", "res_f1", "res_f2"}, {}};
  double worst_res = 0.0, w_lo = std::numeric_limits<double>::infinity(), w_hi = -w_lo;
  for (double t : Linspace(t_min, t_max, n))
  {
    double const r1 = specfun::kummer_ode_residual(specfun::f1, t, h);
    double const r2 = specfun::kummer_ode_residual(specfun::f2, t, h);
    double const w  = specfun::wronskian_scaled(t);
    table.rows.push_back({t, specfun::f1(t), specfun::f2(t), specfun::f2_scaled(t), w, r1, r2});
    worst_res = std::max({worst_res, r1, r2});
    if (t <= w_max)
    {
      w_lo = std::min(w_lo, w);
      w_hi = std::max(w_hi, w);
    }
  }
  write_csv(ctx.file("specfun.csv"), table);

  Table  asym{{"t", "f1_t_quarter", "f2_scaled_t_minus_quarter"}, {}};
  double a_lo = std::numeric_limits<double>::infinity(), a_hi = -a_lo, b_lo = a_lo, b_hi = -a_lo;
  for (double t : Logspace(ctx.spec.real("asym_t_min"), ctx.spec.real("asym_t_max"), n))
  {
    double const a = specfun::f1(t) * std::pow(t, 0.25);
    double const b = specfun::f2_scaled(t) * std::pow(t, -0.25);
    asym.rows.push_back({t, a, b});
    a_lo = std::min(a_lo, a);
    a_hi = std::max(a_hi, a);
    b_lo = std::min(b_lo, b);
    b_hi = std::max(b_hi, b);
  }
  write_csv(ctx.file("specfun_asymptotics.csv"), asym);

  double const w_ref = -1.0 / std::exp(specfun::log_gamma(0.75));
  double const w_var = (w_hi - w_lo) / std::abs(w_ref);
  double const a_var = (a_hi - a_lo) / a_lo;
  double const b_var = (b_hi - b_lo) / b_lo;
  ctx.check("Kummer ODE residual of f1, f2 <= 1e-6", worst_res <= 1e-6, Fmt("max %.3g", worst_res));
  ctx.check("e^t W constant to 1e-6 relative", w_var <= 1e-6,
            Fmt("spread %.3g, value %.12g vs -1/Gamma(3/4) = %.12g", w_var, w_lo, w_ref));
  ctx.check("f1 t^(1/4) varies < 2%", a_var < 0.02, Fmt("%.4g", a_var));
  ctx.check("f2 e^t t^(-1/4) varies < 2%", b_var < 0.02, Fmt("%.4g", b_var));
}

}  // namespace

char const *verdict_name(Verdict v)
{
  switch (v)
  {
  case Verdict::pass:
    return "PASS";
  case Verdict::fail:
    return "FAIL";
  case Verdict::skip:
    return "SKIP";
  }
  return "?";
}

bool RunReport::passed() const
{
  return std::none_of(checks.begin(), checks.end(),
                      [](CheckResult const &c) { return c.verdict == Verdict::fail; });
}

std::string RunReport::summary() const
{
  std::string s = experiment + " (" + version + ")\n";
  for (auto const &c : checks)
  {
    s += std::string(verdict_name(c.verdict)) + "  " + c.name + ": " + c.detail + "\n";
  }
  s += Fmt("%s in %.2f s, output in %s\n", passed() ? "passed" : "FAILED", wall_seconds,
           output_dir.string().c_str());
  return s;
}

std::string RunReport::to_json() const
{
  nlohmann::ordered_json j;
  j["experiment"]   = experiment;
  j["version"]      = version;
  j["wall_seconds"] = wall_seconds;
  j["output_dir"]   = output_dir.string();
  j["files"]        = files;
  j["passed"]       = passed();
  auto &checks_json = j["checks"] = nlohmann::ordered_json::array();
  for (auto const &c : checks)
  {
    checks_json.push_back({{"name", c.name}, {"verdict", verdict_name(c.verdict)}, {"detail", c.detail}});
  }
  return j.dump(2) + "\n";
}

fs::path experiment_dir(ExperimentSpec const &spec, fs::path const &root)
{
  return root / spec.name;
}

RunReport run(ExperimentSpec const &spec, fs::path const &root)
{
  auto const start = std::chrono::steady_clock::now();

  RunReport report;
  report.experiment = spec.name;
  report.output_dir = experiment_dir(spec, root);
  std::error_code ec;
  fs::create_directories(report.output_dir, ec);
  if (ec || !fs::is_directory(report.output_dir))
  {
    Fail(Errc::io, "cannot create output directory '" + report.output_dir.string() + "'");
  }

  Context ctx(spec, report.output_dir, report);
  if (spec.name == "figure1")
    RunFigure1(ctx);
  else if (spec.name == "tau-study")
    RunTauStudy(ctx);
  else if (spec.name == "gaussian-evolve")
    RunGaussianEvolve(ctx);
  else if (spec.name == "simulate")
    RunSimulate(ctx);
  else if (spec.name == "diagnose")
    RunDiagnose(ctx);
  else if (spec.name == "moments-study")
    RunMomentsStudy(ctx);
  else if (spec.name == "specfun-check")
    RunSpecfunCheck(ctx);
  else
    Fail(Errc::unknown_key, "unknown experiment '" + spec.name + "'");

  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report.files.push_back("report.json");
  std::ofstream out(report.output_dir / "report.json", std::ios::binary);
  out << report.to_json();
  if (!out)
  {
    Fail(Errc::io, "cannot write report.json");
  }
  return report;
}

RunReport run(ExperimentSpec const &spec)
{
  return run(spec, spec.output_dir);
}

}  // namespace del::expcli
