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

// Flat "key = value" experiment configuration.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace del::expcli {

enum class ValueKind
{
  real,
  integer,
  real_list,
  text
};

struct KeySchema
{
  std::string key;
  ValueKind   kind;
  bool        required = false;
  std::string fallback;  // used when the key is absent and not required
};

/// Experiment names in the order they are listed by the CLI.
std::vector<std::string> const &experiment_names();

/// Keys accepted by an experiment, including the shared name/out/seed keys.
/// Throws Errc::unknown_key for an unrecognized experiment.
std::vector<KeySchema> const &experiment_schema(std::string const &name);

struct ExperimentSpec
{
  std::string                        name;
  std::map<std::string, std::string> params;  // every schema key, defaults filled in
  std::map<std::string, int>         lines;   // source line of keys given explicitly
  std::string                        output_dir;
  std::int64_t                       seed = 0;

  bool        has(std::string const &key) const;  // given explicitly
  double      real(std::string const &key) const;
  long        integer(std::string const &key) const;
  std::string text(std::string const &key) const;
  std::vector<double> real_list(std::string const &key) const;
};

/// Throws Errc::parse (with line number), Errc::unknown_key or
/// Errc::missing_key. default_name stands in for an absent `name` key.
ExperimentSpec parse_config(std::string const &text, std::string const &default_name = {});

/// Parses "a, b, c" into reals; throws Errc::parse.
std::vector<double> parse_real_list(std::string const &value);

}  // namespace del::expcli
