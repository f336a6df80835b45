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

// Text file formats: snapshot CSVs, plain numeric tables, gnuplot data.

#include "diagnostics.hpp"
#include "grid.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace del::expcli {

/// 17 significant digits, enough to round-trip any double.
std::string format_real(double v);

/// "# t=<time> gamma=<g> n=<cells>" followed by x_center,rho,m rows.
void      write_snapshot_csv(std::filesystem::path const &path, GridField const &field);
GridField read_snapshot_csv(std::filesystem::path const &path, double vacuum_floor = 1e-12);

struct Table
{
  std::vector<std::string>         columns;
  std::vector<std::vector<double>> rows;
};

/// Comma-separated with a header line of column names.
void  write_csv(std::filesystem::path const &path, Table const &table);
Table read_csv(std::filesystem::path const &path);

/// Whitespace-delimited columns under a "# <names...>" header.
void write_dat(std::filesystem::path const &path, Table const &table);

/// write_dat of the series with t as the first column.
void emit_plotdata(diagnostics::DiagnosticSeries const &series, std::filesystem::path const &path);
Table read_plotdata(std::filesystem::path const &path);

/// A gnuplot script plotting every channel of a .dat file against t.
/// A gnuplot script plotting columns 2.. of a .dat file against column 1.
void write_gnuplot_script(std::vector<std::string> const &columns,
                          std::filesystem::path const &data_file,
                          std::filesystem::path const &script_path, bool log_x = false);

}  // namespace del::expcli
