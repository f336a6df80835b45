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
#include "config.hpp"

#include "error.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <sstream>

namespace del::expcli {
namespace {

using K = ValueKind;

std::vector<KeySchema> WithCommon(std::vector<KeySchema> keys)
{
  keys.insert(keys.begin(), {{"name", K::text, true, ""},
                             {"out", K::text, false, "del_out"},
                             {"seed", K::integer, false, "0"}});
  return keys;
}

struct GaussianDefaults
{
  char const *alpha0 = "1";
  char const *beta0  = "0";
  char const *b0     = "1";
  char const *c0     = "0";
  char const *x0     = "0";
};

std::vector<KeySchema> GaussianKeys(std::vector<KeySchema> keys, GaussianDefaults d = {})
{
  std::vector<KeySchema> g = {{"alpha0", K::real, false, d.alpha0},
                              {"beta0", K::real, false, d.beta0},
                              {"b0", K::real, false, d.b0},
                              {"c0", K::real, false, d.c0},
                              {"x0", K::real, false, d.x0}};
  keys.insert(keys.end(), g.begin(), g.end());
  return keys;
}

std::map<std::string, std::vector<KeySchema>> const &Schemas()
{
  static std::map<std::string, std::vector<KeySchema>> const table = {
      {"figure1", WithCommon({{"gammas", K::real_list, true, ""},
                              {"lambda", K::real, false, "1"},
                              {"x_half_width", K::real, false, "8"},
                              {"samples", K::integer, false, "20001"},
                              {"profile_points", K::integer, false, "801"}})},
      {"tau-study", WithCommon({{"alpha0", K::real, false, "1"},
                                {"beta0", K::real, false, "0"},
                                {"t_end", K::real, true, ""},
                                {"tolerance", K::real, false, "1e-10"},
                                {"samples", K::integer, false, "200"}})},
      {"gaussian-evolve", WithCommon(GaussianKeys({{"t_end", K::real, true, ""},
                                                   {"n_cells", K::real_list, false, "400,800,1600"},
                                                   {"cfl", K::real, false, "0.45"},
                                                   {"output_times", K::integer, false, "101"},
                                                   {"ansatz_cells", K::real_list, false,
                                                    "200,400,800"}}))},
      {"simulate", WithCommon(GaussianKeys({{"initial", K::text, true, ""},
                                            {"gamma", K::real, false, "1"},
                                            {"cfl", K::real, false, "0.45"},
                                            {"t_end", K::real, true, ""},
                                            {"snapshots", K::real_list, false, ""},
                                            {"n_cells", K::integer, true, ""},
                                            {"x_min", K::real, false, ""},
                                            {"x_max", K::real, false, ""},
                                            {"vacuum_floor", K::real, false, "1e-12"},
                                            {"lambda", K::real, false, "1"},
                                            {"table", K::text, false, ""}}))},
      {"diagnose", WithCommon(GaussianKeys({{"input", K::text, true, ""},
                                            {"k", K::real, false, "0.75"},
                                            {"reference", K::text, false, "auto"}}))},
      {"moments-study", WithCommon(GaussianKeys({{"t_end", K::real, false, "5"},
                                                 {"n_cells", K::integer, false, "4000"},
                                                 {"cfl", K::real, false, "0.45"},
                                                 {"snapshot_every", K::real, false, "0.5"},
                                                 {"exact_t_max", K::real, false, "10000"}},
                                                {"2", "0.3", "1.4142135623730951", "0.2", "0.1"}))},
      {"specfun-check", WithCommon({{"t_min", K::real, false, "0.5"},
                                    {"t_max", K::real, false, "20"},
                                    {"wronskian_t_max", K::real, false, "10"},
                                    {"h", K::real, false, "1e-3"},
                                    {"asym_t_min", K::real, false, "1000"},
                                    {"asym_t_max", K::real, false, "10000"},
                                    {"samples", K::integer, false, "200"}})},
  };
  return table;
}

std::string Trim(std::string const &s)
{
  auto const b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos)
  {
    return {};
  }
  auto const e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool ParseReal(std::string const &s, double &out)
{
  if (s.empty())
  {
    return false;
  }
  char *end = nullptr;
  errno     = 0;
  out       = std::strtod(s.c_str(), &end);
  return errno == 0 && end == s.c_str() + s.size() && std::isfinite(out);
}

bool ParseInteger(std::string const &s, long &out)
{
  if (s.empty())
  {
    return false;
  }
  char *end = nullptr;
  errno     = 0;
  out       = std::strtol(s.c_str(), &end, 10);
  return errno == 0 && end == s.c_str() + s.size();
}

[[noreturn]] void LineError(Errc code, int line, std::string const &msg)
{
  Fail(code, "line " + std::to_string(line) + ": " + msg);
}

void CheckValue(KeySchema const &schema, std::string const &value, int line)
{
  switch (schema.kind)
  {
  case K::real:
  {
    double v;
    if (!ParseReal(value, v))
    {
      LineError(Errc::parse, line, "'" + schema.key + "' expects a real number, got '" + value + "'");
    }
    break;
  }
  case K::integer:
  {
    long v;
    if (!ParseInteger(value, v))
    {
      LineError(Errc::parse, line, "'" + schema.key + "' expects an integer, got '" + value + "'");
    }
    break;
  }
  case K::real_list:
    try
    {
      parse_real_list(value);
    }
    catch (Error const &e)
    {
      LineError(Errc::parse, line, "'" + schema.key + "': " + e.what());
    }
    break;
  case K::text:
    break;
  }
}

KeySchema const *Find(std::vector<KeySchema> const &schema, std::string const &key)
{
  auto it = std::find_if(schema.begin(), schema.end(),
                         [&](KeySchema const &s) { return s.key == key; });
  return it == schema.end() ? nullptr : &*it;
}

}  // namespace

std::vector<std::string> const &experiment_names()
{
  static std::vector<std::string> const names = {"figure1",       "gaussian-evolve", "simulate",
                                                 "diagnose",      "moments-study",   "tau-study",
                                                 "specfun-check"};
  return names;
}

std::vector<KeySchema> const &experiment_schema(std::string const &name)
{
  auto const &table = Schemas();
  auto        it    = table.find(name);
  if (it == table.end())
  {
    Fail(Errc::unknown_key, "unknown experiment '" + name + "'");
  }
  return it->second;
}

std::vector<double> parse_real_list(std::string const &value)
{
  std::vector<double> out;
  std::stringstream   ss(value);
  std::string         item;
  while (std::getline(ss, item, ','))
  {
    double       v;
    std::string const t = Trim(item);
    if (!ParseReal(t, v))
    {
      Fail(Errc::parse, "expected a comma-separated list of reals, got '" + value + "'");
    }
    out.push_back(v);
  }
  return out;
}

ExperimentSpec parse_config(std::string const &text, std::string const &default_name)
{
  std::map<std::string, std::pair<std::string, int>> raw;
  std::stringstream                                  in(text);
  std::string                                        line;
  int                                                number = 0;
  while (std::getline(in, line))
  {
    ++number;
    if (auto const hash = line.find('#'); hash != std::string::npos)
    {
      line.erase(hash);
    }
    line = Trim(line);
    if (line.empty())
    {
      continue;
    }
    auto const eq = line.find('=');
    if (eq == std::string::npos)
    {
      LineError(Errc::parse, number, "expected 'key = value'");
    }
    std::string const key   = Trim(line.substr(0, eq));
    std::string const value = Trim(line.substr(eq + 1));
    if (key.empty())
    {
      LineError(Errc::parse, number, "empty key");
    }
    if (raw.count(key))
    {
      LineError(Errc::parse, number, "duplicate key '" + key + "'");
    }
    raw[key] = {value, number};
  }

  if (!raw.count("name") && !default_name.empty())
  {
    raw["name"] = {default_name, 0};
  }
  auto const name_it = raw.find("name");
  if (name_it == raw.end())
  {
    Fail(Errc::missing_key, "missing required key 'name'");
  }
  std::string const name = name_it->second.first;
  if (!Schemas().count(name))
  {
    LineError(Errc::unknown_key, name_it->second.second, "unknown experiment '" + name + "'");
  }
  auto const &schema = experiment_schema(name);

  ExperimentSpec spec;
  spec.name = name;
  for (auto const &[key, entry] : raw)
  {
    KeySchema const *s = Find(schema, key);
    if (!s)
    {
      LineError(Errc::unknown_key, entry.second,
                "unknown key '" + key + "' for experiment '" + name + "'");
    }
    CheckValue(*s, entry.first, entry.second);
    spec.params[key] = entry.first;
    if (entry.second > 0)
    {
      spec.lines[key] = entry.second;
    }
  }
  for (auto const &s : schema)
  {
    if (spec.params.count(s.key))
    {
      continue;
    }
    if (s.required)
    {
      Fail(Errc::missing_key, "missing required key '" + s.key + "' for experiment '" + name + "'");
    }
    spec.params[s.key] = s.fallback;
  }
  spec.output_dir = spec.params.at("out");
  spec.seed       = spec.integer("seed");
  return spec;
}

bool ExperimentSpec::has(std::string const &key) const
{
  return lines.count(key) != 0;
}

namespace {

std::string const &Lookup(ExperimentSpec const &spec, std::string const &key)
{
  auto it = spec.params.find(key);
  if (it == spec.params.end())
  {
    Fail(Errc::missing_key, "no parameter '" + key + "'");
  }
  return it->second;
}

}  // namespace

double ExperimentSpec::real(std::string const &key) const
{
  double v;
  if (!ParseReal(Lookup(*this, key), v))
  {
    Fail(Errc::parse, "parameter '" + key + "' is not a real number");
  }
  return v;
}

long ExperimentSpec::integer(std::string const &key) const
{
  long v;
  if (!ParseInteger(Lookup(*this, key), v))
  {
    Fail(Errc::parse, "parameter '" + key + "' is not an integer");
  }
  return v;
}

std::string ExperimentSpec::text(std::string const &key) const
{
  return Lookup(*this, key);
}

std::vector<double> ExperimentSpec::real_list(std::string const &key) const
{
  std::string const &v = Lookup(*this, key);
  return v.empty() ? std::vector<double>{} : parse_real_list(v);
}

}  // namespace del::expcli
