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

// Canned experiments: each turns an ExperimentSpec into files under its own
// output directory plus a RunReport of embedded checks.

#include "config.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace del::expcli {

inline constexpr char kToolVersion[] = "damped-euler-lab 0.1.0";

enum class Verdict
{
  pass,
  fail,
  skip
};

char const *verdict_name(Verdict v);

struct CheckResult
{
  std::string name;
  Verdict     verdict = Verdict::fail;
  std::string detail;
};

struct RunReport
{
  std::string              experiment;
  std::string              version = kToolVersion;
  double                   wall_seconds = 0.0;
  std::filesystem::path    output_dir;
  std::vector<std::string> files;
  std::vector<CheckResult> checks;

  /// No check failed (skipped checks do not count against the run).
  bool passed() const;
  std::string summary() const;
  std::string to_json() const;
};

/// The directory an experiment writes into: <root>/<name>.
std::filesystem::path experiment_dir(ExperimentSpec const &spec, std::filesystem::path const &root);

/// Runs the experiment into experiment_dir(spec, root) and writes report.json
/// there. Computation and I/O errors propagate as del::Error.
RunReport run(ExperimentSpec const &spec, std::filesystem::path const &root);

/// run() with root taken from the spec's `out` key.
RunReport run(ExperimentSpec const &spec);

}  // namespace del::expcli
