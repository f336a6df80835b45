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
#include "io.hpp"

#include "error.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace del::expcli {
namespace {

std::ofstream OpenOut(std::filesystem::path const &path)
{
  if (path.has_parent_path())
  {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary);
  if (!out)
  {
    Fail(Errc::io, "cannot open '" + path.string() + "' for writing");
  }
  return out;
}

std::ifstream OpenIn(std::filesystem::path const &path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
  {
    Fail(Errc::io, "cannot open '" + path.string() + "'");
  }
  return in;
}

void Close(std::ofstream &out, std::filesystem::path const &path)
{
  out.close();
  if (!out)
  {
    Fail(Errc::io, "write to '" + path.string() + "' failed");
  }
}

double ParseCell(std::string const &s, std::filesystem::path const &path, int line)
{
  char const *b   = s.c_str();
  char       *end = nullptr;
  double      v   = std::strtod(b, &end);
  while (end && (*end == ' ' || *end == '\t' || *end == '\r'))
  {
    ++end;
  }
  if (end == b || *end != '\0')
  {
    Fail(Errc::parse, path.string() + ":" + std::to_string(line) + ": bad number '" + s + "'");
  }
  return v;
}

std::vector<std::string> Split(std::string const &line, char sep)
{
  std::vector<std::string> out;
  if (sep == ' ')
  {
    std::istringstream ss(line);
    std::string        tok;
    while (ss >> tok)
    {
      out.push_back(tok);
    }
    return out;
  }
  std::stringstream ss(line);
  std::string       tok;
  while (std::getline(ss, tok, sep))
  {
    out.push_back(tok);
  }
  return out;
}

double HeaderValue(std::string const &header, std::string const &key, std::filesystem::path const &path)
{
  for (auto const &tok : Split(header, ' '))
  {
    if (tok.rfind(key + "=", 0) == 0)
    {
      return ParseCell(tok.substr(key.size() + 1), path, 1);
    }
  }
  Fail(Errc::parse, path.string() + ": snapshot header lacks '" + key + "='");
}

}  // namespace

std::string format_real(double v)
{
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_snapshot_csv(std::filesystem::path const &path, GridField const &field)
{
  auto out = OpenOut(path);
  out << "# t=" << format_real(field.time) << " gamma=" << format_real(field.gamma)
      << " n=" << field.size() << "\n";
  out << "x_center,rho,m\n";
  for (std::size_t i = 0; i < field.size(); ++i)
  {
    out << format_real(field.mesh.center(i)) << ',' << format_real(field.rho[i]) << ','
        << format_real(field.m[i]) << '\n';
  }
  Close(out, path);
}

GridField read_snapshot_csv(std::filesystem::path const &path, double vacuum_floor)
{
  auto        in = OpenIn(path);
  std::string header;
  std::getline(in, header);
  if (header.rfind("# ", 0) != 0)
  {
    Fail(Errc::parse, path.string() + ": missing '# t=... gamma=... n=...' header");
  }
  double const t     = HeaderValue(header, "t", path);
  double const gamma = HeaderValue(header, "gamma", path);
  double const n_hdr = HeaderValue(header, "n", path);

  std::string         line;
  std::vector<double> x, rho, m;
  int                 number = 1;
  while (std::getline(in, line))
  {
    ++number;
    if (line.empty() || line[0] == '#' || line.rfind("x_center", 0) == 0)
    {
      continue;
    }
    auto const cells = Split(line, ',');
    if (cells.size() != 3)
    {
      Fail(Errc::parse, path.string() + ":" + std::to_string(number) + ": expected 3 columns");
    }
    x.push_back(ParseCell(cells[0], path, number));
    rho.push_back(ParseCell(cells[1], path, number));
    m.push_back(ParseCell(cells[2], path, number));
  }
  if (x.size() < 2 || static_cast<double>(x.size()) != n_hdr)
  {
    Fail(Errc::parse, path.string() + ": row count does not match n in the header");
  }
  double const dx = (x.back() - x.front()) / static_cast<double>(x.size() - 1);
  MeshSpec     mesh{x.front() - 0.5 * dx, x.back() + 0.5 * dx, static_cast<int>(x.size())};
  GridField    field(mesh, gamma, t, vacuum_floor);
  field.rho = std::move(rho);
  field.m   = std::move(m);
  field.validate();
  return field;
}

void write_csv(std::filesystem::path const &path, Table const &table)
{
  auto out = OpenOut(path);
  for (std::size_t c = 0; c < table.columns.size(); ++c)
  {
    out << (c ? "," : "") << table.columns[c];
  }
  out << '\n';
  for (auto const &row : table.rows)
  {
    for (std::size_t c = 0; c < row.size(); ++c)
    {
      out << (c ? "," : "") << format_real(row[c]);
    }
    out << '\n';
  }
  Close(out, path);
}

Table read_csv(std::filesystem::path const &path)
{
  auto        in = OpenIn(path);
  Table       table;
  std::string line;
  int         number = 0;
  while (std::getline(in, line))
  {
    ++number;
    if (!line.empty() && line.back() == '\r')
    {
      line.pop_back();
    }
    if (line.empty() || line[0] == '#')
    {
      continue;
    }
    auto cells = Split(line, ',');
    if (table.columns.empty())
    {
      // a header row is any first row that does not parse as numbers
      char *end = nullptr;
      std::strtod(cells[0].c_str(), &end);
      if (end == cells[0].c_str())
      {
        table.columns = cells;
        continue;
      }
      for (std::size_t c = 0; c < cells.size(); ++c)
      {
        table.columns.push_back("c" + std::to_string(c));
      }
    }
    if (cells.size() != table.columns.size())
    {
      Fail(Errc::parse, path.string() + ":" + std::to_string(number) + ": column count mismatch");
    }
    std::vector<double> row;
    for (auto const &cell : cells)
    {
      row.push_back(ParseCell(cell, path, number));
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

void write_dat(std::filesystem::path const &path, Table const &table)
{
  auto out = OpenOut(path);
  out << "#";
  for (auto const &name : table.columns)
  {
    out << ' ' << name;
  }
  out << '\n';
  for (auto const &row : table.rows)
  {
    for (std::size_t c = 0; c < row.size(); ++c)
    {
      out << (c ? " " : "") << format_real(row[c]);
    }
    out << '\n';
  }
  Close(out, path);
}

void emit_plotdata(diagnostics::DiagnosticSeries const &series, std::filesystem::path const &path)
{
  if (series.size() == 0)
  {
    Fail(Errc::invalid_argument, "emit_plotdata: empty series");
  }
  Table table;
  table.columns.push_back("t");
  table.columns.insert(table.columns.end(), series.names().begin(), series.names().end());
  for (std::size_t r = 0; r < series.size(); ++r)
  {
    std::vector<double> row = {series.times()[r]};
    for (std::size_t c = 0; c < series.names().size(); ++c)
    {
      row.push_back(series.channel(c)[r]);
    }
    table.rows.push_back(std::move(row));
  }
  write_dat(path, table);
}

Table read_plotdata(std::filesystem::path const &path)
{
  auto        in = OpenIn(path);
  Table       table;
  std::string line;
  int         number = 0;
  while (std::getline(in, line))
  {
    ++number;
    if (line.rfind("#", 0) == 0)
    {
      if (table.columns.empty())
      {
        table.columns = Split(line.substr(1), ' ');
      }
      continue;
    }
    auto cells = Split(line, ' ');
    if (cells.empty())
    {
      continue;
    }
    if (cells.size() != table.columns.size())
    {
      Fail(Errc::parse, path.string() + ":" + std::to_string(number) + ": column count mismatch");
    }
    std::vector<double> row;
    for (auto const &cell : cells)
    {
      row.push_back(ParseCell(cell, path, number));
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

void write_gnuplot_script(std::vector<std::string> const &columns,
                          std::filesystem::path const &data_file,
                          std::filesystem::path const &script_path, bool log_x)
{
  if (columns.size() < 2)
  {
    Fail(Errc::invalid_argument, "write_gnuplot_script: need an abscissa and one channel");
  }
  std::vector<std::string> const channels(columns.begin() + 1, columns.end());
  auto                           out = OpenOut(script_path);
  out << "# gnuplot -p " << script_path.filename().string() << "\n";
  out << "set key outside right\nset xlabel '" << columns.front() << "'\nset grid\n";
  if (log_x)
  {
    out << "set logscale x\n";
  }
  out << "plot \\\n";
  for (std::size_t c = 0; c < channels.size(); ++c)
  {
    out << "  '" << data_file.filename().string() << "' using 1:" << c + 2
        << " with linespoints title '" << channels[c] << "'"
        << (c + 1 < channels.size() ? ", \\\n" : "\n");
  }
  Close(out, script_path);
}

}  // namespace del::expcli
