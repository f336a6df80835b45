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

#include <stdexcept>
#include <string>

namespace del {

// Values mirror del_status in include/del/del.h.
enum class Errc : int
{
  domain                 = 1,
  non_convergence        = 2,
  out_of_range           = 3,
  grid_too_small         = 4,
  cfl_violation          = 5,
  non_finite             = 6,
  all_vacuum             = 7,
  parse                  = 8,
  unknown_key            = 9,
  missing_key            = 10,
  io                     = 11,
  mass_mismatch          = 12,
  insufficient_snapshots = 13,
  grid_mismatch          = 14,
  step_underflow         = 15,
  invalid_argument       = 16,
  overflow               = 17,
};

class Error : public std::runtime_error
{
public:
  Error(Errc code, std::string const &what)
    : std::runtime_error(what)
    , code_(code)
  {}

  Errc code() const noexcept
  {
    return code_;
  }

private:
  Errc code_;
};

[[noreturn]] inline void Fail(Errc code, std::string const &what)
{
  throw Error(code, what);
}

}  // namespace del
