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

// Adaptive Dormand-Prince 5(4) stepper for small fixed-size systems.

#include "error.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <utility>

namespace del::ode {

template <std::size_t N>
using State = std::array<double, N>;

struct StepperOptions
{
  double rtol   = 1e-10;
  double atol   = 1e-12;
  double h_init = 1e-3;
  double h_min  = 1e-14;
  double h_max  = 1e300;
};

// Integrates y' = f(t, y) in either time direction. advance_to() takes
// adaptive steps and truncates only the final one, so the step sequence up
// to the last step does not depend on the target.
template <std::size_t N, class Rhs>
class DormandPrince
{
public:
  DormandPrince(Rhs rhs, double t0, State<N> const &y0, StepperOptions const &opt)
    : rhs_(std::move(rhs))
    , t_(t0)
    , y_(y0)
    , opt_(opt)
    , h_(opt.h_init)
  {}

  double t() const
  {
    return t_;
  }

  State<N> const &y() const
  {
    return y_;
  }

  State<N> derivative() const
  {
    return rhs_(t_, y_);
  }

  std::size_t accepted_steps() const
  {
    return accepted_;
  }

  void advance_to(double target)
  {
    double const dir = target >= t_ ? 1.0 : -1.0;
    while (dir * (target - t_) > 0.0)
    {
      double h    = std::min(h_, opt_.h_max);
      bool   last = false;
      if (h >= dir * (target - t_))
      {
        h    = dir * (target - t_);
        last = true;
      }
      if (h < opt_.h_min * std::max(1.0, std::abs(t_)))
      {
        Fail(Errc::step_underflow, "ode: step size underflow");
      }

      State<N> y_new;
      double   err = TrialStep(dir * h, y_new);
      if (err <= 1.0)
      {
        t_ = last ? target : t_ + dir * h;
        y_ = y_new;
        ++accepted_;
        double grow = err > 0.0 ? 0.9 * std::pow(err, -0.2) : 5.0;
        // keep the running step when the truncated last step was accepted
        if (!last)
        {
          h_ = h * std::clamp(grow, 0.2, 5.0);
        }
      }
      else
      {
        h_ = h * std::clamp(0.9 * std::pow(err, -0.2), 0.1, 1.0);
        if (last)
        {
          last = false;
        }
      }
    }
  }

private:
  double TrialStep(double h, State<N> &y_new) const
  {
    // Dormand-Prince tableau (Hairer, Norsett, Wanner, Solving ODEs I, Table 5.2).
    constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    constexpr double a21 = 1.0 / 5;
    constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                     a54 = -212.0 / 729;
    constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                     a64 = 49.0 / 176, a65 = -5103.0 / 18656;
    constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                     b6 = 11.0 / 84;
    constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                     e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

    auto comb = [&](auto... terms) {
      State<N> out = y_;
      for (std::size_t i = 0; i < N; ++i)
      {
        ((out[i] += h * terms.first * (*terms.second)[i]), ...);
      }
      return out;
    };
    using P = std::pair<double, State<N> const *>;

    State<N> const k1 = rhs_(t_, y_);
    State<N> const k2 = rhs_(t_ + c2 * h, comb(P{a21, &k1}));
    State<N> const k3 = rhs_(t_ + c3 * h, comb(P{a31, &k1}, P{a32, &k2}));
    State<N> const k4 = rhs_(t_ + c4 * h, comb(P{a41, &k1}, P{a42, &k2}, P{a43, &k3}));
    State<N> const k5 =
        rhs_(t_ + c5 * h, comb(P{a51, &k1}, P{a52, &k2}, P{a53, &k3}, P{a54, &k4}));
    State<N> const k6 =
        rhs_(t_ + h, comb(P{a61, &k1}, P{a62, &k2}, P{a63, &k3}, P{a64, &k4}, P{a65, &k5}));
    y_new = comb(P{b1, &k1}, P{b3, &k3}, P{b4, &k4}, P{b5, &k5}, P{b6, &k6});
    State<N> const k7 = rhs_(t_ + h, y_new);

    double sum = 0.0;
    for (std::size_t i = 0; i < N; ++i)
    {
      double e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] +
                      e7 * k7[i]);
      double sc = opt_.atol + opt_.rtol * std::max(std::abs(y_[i]), std::abs(y_new[i]));
      sum += (e / sc) * (e / sc);
      if (!std::isfinite(y_new[i]))
      {
        return 1e10;
      }
    }
    return std::sqrt(sum / static_cast<double>(N));
  }

  Rhs            rhs_;
  double         t_;
  State<N>       y_;
  StepperOptions opt_;
  double         h_;
  std::size_t    accepted_ = 0;
};

template <std::size_t N, class Rhs>
DormandPrince<N, Rhs> MakeStepper(Rhs rhs, double t0, State<N> const &y0,
                                  StepperOptions const &opt)
{
  return DormandPrince<N, Rhs>(std::move(rhs), t0, y0, opt);
}

}  // namespace del::ode
