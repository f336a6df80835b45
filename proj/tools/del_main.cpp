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
// del <experiment> --config <file> [--out <dir>]
//
// Exit status: 0 when every check passes, 1 on a failed check or a runtime
// error, 2 for usage and configuration errors.

#include "del/del.h"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage       = 2;

std::vector<std::string> const kExperiments = {"figure1",       "gaussian-evolve", "simulate",
                                               "diagnose",      "moments-study",   "tau-study",
                                               "specfun-check"};

bool ReadFile(std::string const &path, std::string &text)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
  {
    return false;
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  text = ss.str();
  return true;
}

}  // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Damped Euler toolkit: exact solutions, finite-volume runs and diagnostics"};
  app.set_version_flag("--version", std::string(del_version()));
  app.require_subcommand(1);

  std::string config_path, out_dir;
  bool        quiet = false;
  for (auto const &name : kExperiments)
  {
    auto *sub = app.add_subcommand(name, "run the " + name + " experiment");
    sub->add_option("-c,--config", config_path, "experiment config (key = value lines)")->required();
    sub->add_option("-o,--out", out_dir, "output root (overrides DEL_OUT and the config)");
    sub->add_flag("-q,--quiet", quiet, "print only the verdict line");
  }

  try
  {
    app.parse(argc, argv);
  }
  catch (CLI::CallForHelp const &e)
  {
    return app.exit(e);
  }
  catch (CLI::CallForVersion const &e)
  {
    return app.exit(e);
  }
  catch (CLI::ParseError const &e)
  {
    app.exit(e);
    return kExitUsage;
  }

  std::string const subcommand = app.get_subcommands().front()->get_name();
  std::string       text;
  if (!ReadFile(config_path, text))
  {
    std::fprintf(stderr, "del: cannot read config '%s'\n", config_path.c_str());
    return kExitUsage;
  }

  // --out beats DEL_OUT, which beats the config's own `out` key
  char const *root = nullptr;
  if (!out_dir.empty())
  {
    root = out_dir.c_str();
  }
  else if (char const *env = std::getenv("DEL_OUT"); env && *env)
  {
    root = env;
  }

  del_report *report = nullptr;
  del_status  status = del_experiment_run(subcommand.c_str(), text.c_str(), root, &report);
  if (status != DEL_OK)
  {
    std::fprintf(stderr, "del %s: %s error: %s\n", subcommand.c_str(), del_status_name(status),
                 del_last_error());
    return del_status_is_config_error(status) ? kExitUsage : kExitCheckFailed;
  }

  int const passed = del_report_passed(report);
  if (quiet)
  {
    std::printf("%s %s\n", passed ? "PASS" : "FAIL", subcommand.c_str());
  }
  else
  {
    std::fputs(del_report_summary(report), stdout);
  }
  del_report_destroy(report);
  return passed ? 0 : kExitCheckFailed;
}
