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
#include "error.hpp"
#include "specfun.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace del;
using namespace del::specfun;

namespace {

// reference values computed once with mpmath at 30 digits
struct Ref
{
  double a, b, z, value;
};

bool Close(double got, double want, double rel)
{
  return std::abs(got - want) <= rel * std::abs(want);
}

// U(a, b, z) = (1/Gamma(a)) int_0^inf e^{-z t} t^{a-1} (1+t)^{b-a-1} dt,
// evaluated after t = s^4 with composite Simpson; independent of the library
double TricomiByIntegral(double a, double b, double z)
{
  double const s_max = std::pow(60.0 / z, 0.25);
  int const    n     = 20000;
  double const h     = s_max / n;
  auto         g     = [&](double s) {
    double const t = s * s * s * s;
    return 4.0 * std::pow(s, 4.0 * a - 1.0) * std::exp(-z * t) * std::pow(1.0 + t, b - a - 1.0);
  };
  double sum = g(0.0) + g(s_max);
  for (int i = 1; i < n; ++i)
  {
    sum += (i % 2 ? 4.0 : 2.0) * g(i * h);
  }
  return sum * h / 3.0 / std::tgamma(a);
}

}  // namespace

TEST_CASE("log_gamma matches reference values")
{
  CHECK(log_gamma(1.0) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(std::abs(log_gamma(2.0)) < 1e-14);
  CHECK(Close(log_gamma(0.5), 0.572364942924700087, 1e-13));
  CHECK(Close(log_gamma(10.3), 13.4820367861383586, 1e-13));
  CHECK(Close(log_gamma(0.01), 4.59947987804202170, 1e-13));
  CHECK(Close(log_gamma(171.5), 709.143163030928242, 1e-13));
}

TEST_CASE("log_gamma agrees with std::lgamma on a sweep")
{
  std::mt19937_64                        rng(7);
  std::uniform_real_distribution<double> u(-4.0, 5.0);
  for (int i = 0; i < 500; ++i)
  {
    double const x = std::pow(10.0, u(rng) * 0.5);
    double const want = std::lgamma(x);
    CHECK(std::abs(log_gamma(x) - want) <= 1e-12 * std::max(1.0, std::abs(want)));
  }
}

TEST_CASE("log_gamma rejects nonpositive arguments")
{
  CHECK_THROWS_AS(log_gamma(0.0), Error);
  CHECK_THROWS_AS(log_gamma(-1.5), Error);
  try
  {
    log_gamma(-1.0);
  }
  catch (Error const &e)
  {
    CHECK(e.code() == Errc::domain);
  }
}

TEST_CASE("wallis integrals")
{
  CHECK(Close(wallis(0.0), std::numbers::pi / 2, 1e-12));
  CHECK(Close(wallis(1.0), 1.0, 1e-12));
  CHECK(Close(wallis(3.0), 2.0 / 3.0, 1e-12));
  CHECK(Close(wallis(0.5), 1.19814023473559221, 1e-11));
  CHECK(Close(wallis(2.5), 0.718884140841355324, 1e-11));
  CHECK(Close(wallis(40.25), 0.196326892350975654, 1e-11));
  CHECK_THROWS_AS(wallis(-0.1), Error);
}

TEST_CASE("wallis recurrence holds for real indices")
{
  std::mt19937_64                        rng(11);
  std::uniform_real_distribution<double> u(2.0, 200.0);
  for (int i = 0; i < 200; ++i)
  {
    double const p = u(rng);
    CHECK(Close(wallis(p), (p - 1.0) / p * wallis(p - 2.0), 1e-11));
  }
}

TEST_CASE("wallis approaches sqrt(pi / 2p)")
{
  double prev = 1.0;
  for (double p : {1e2, 1e3, 1e4, 1e5})
  {
    double const err = std::abs(wallis(p) / std::sqrt(std::numbers::pi / (2.0 * p)) - 1.0);
    CHECK(err < prev);
    CHECK(err < 1.0 / p);
    prev = err;
  }
}

TEST_CASE("kummer_m reference values")
{
  CHECK(kummer_m({0.75, 2.0, 0.0}) == 1.0);
  CHECK(kummer_m({0.0, 2.0, 5.0}) == 1.0);
  CHECK(kummer_m({0.75, 2.0, 1.0}) == doctest::Approx(1.51499).epsilon(1e-4));
  Ref const refs[] = {{0.75, 2.0, 1.0, 1.51499954713319606},  {0.75, 2.0, 10.0, 1048.53999681573635},
                      {0.75, 2.0, -5.0, 0.314459658073451634}, {0.75, 2.0, -40.0, 0.0690332598814905657},
                      {1.25, 3.0, 25.0, 558029154.488778392},  {0.5, 1.5, -100.0, 0.0886226925452758014},
                      {-2.0, 1.5, 3.0, -0.6}};
  for (auto const &r : refs)
  {
    CAPTURE(r.z);
    CHECK(Close(kummer_m({r.a, r.b, r.z}), r.value, 1e-12));
  }
}

TEST_CASE("kummer_m_scaled beyond the overflow range")
{
  CHECK(Close(kummer_m_scaled({0.75, 2.0, 700.0}), 2.26745085760561556e-4, 1e-10));
  CHECK(Close(kummer_m_scaled({0.75, 2.0, 1000.0}), 1.45161715370612382e-4, 1e-10));
  CHECK_THROWS_AS(kummer_m({0.75, 2.0, 800.0}), Error);
  CHECK_THROWS_AS(kummer_m_scaled({0.75, 2.0, -1.0}), Error);
}

TEST_CASE("kummer transformation M(a,b,z) = e^z M(b-a,b,-z)")
{
  std::mt19937_64                        rng(3);
  std::uniform_real_distribution<double> ua(0.1, 3.0), uz(0.0, 30.0);
  for (int i = 0; i < 200; ++i)
  {
    double const a = ua(rng), b = a + ua(rng), z = uz(rng);
    CHECK(Close(kummer_m({a, b, z}), std::exp(z) * kummer_m({b - a, b, -z}), 1e-10));
  }
}

TEST_CASE("kummer_m rejects b at nonpositive integers")
{
  CHECK_THROWS_AS(kummer_m({0.5, 0.0, 1.0}), Error);
  CHECK_THROWS_AS(kummer_m({0.5, -3.0, 1.0}), Error);
}

TEST_CASE("tricomi_u reference values")
{
  Ref const refs[] = {{0.75, 2.0, 0.5, 2.04511731067726686},  {0.75, 2.0, 5.0, 0.309136685214696764},
                      {0.75, 2.0, 20.0, 0.106698207086803471}, {0.75, 2.0, 60.0, 0.0465293727351209315},
                      {1.75, 3.0, 2.0, 0.344389888614099555},  {0.5, 0.5, 3.0, 0.509299104259577337}};
  for (auto const &r : refs)
  {
    CAPTURE(r.z);
    CHECK(Close(tricomi_u({r.a, r.b, r.z}), r.value, 1e-10));
  }
  CHECK(tricomi_u({0.0, 2.0, 3.0}) == 1.0);
  CHECK_THROWS_AS(tricomi_u({0.75, 2.0, 0.0}), Error);
}

TEST_CASE("tricomi_u agrees with its integral representation")
{
  for (double z : {0.3, 1.0, 2.5, 7.0, 15.0, 40.0, 49.9, 50.1, 80.0})
  {
    CAPTURE(z);
    CHECK(Close(tricomi_u({0.75, 2.0, z}), TricomiByIntegral(0.75, 2.0, z), 1e-8));
  }
}

TEST_CASE("tricomi_u derivative is -a U(a+1, b+1, z)")
{
  for (double z : {0.7, 3.0, 30.0})
  {
    double const h  = 1e-5 * z;
    double const fd = (tricomi_u({0.75, 2.0, z + h}) - tricomi_u({0.75, 2.0, z - h})) / (2 * h);
    CHECK(Close(tricomi_u_with_derivative({0.75, 2.0, z}).du, fd, 1e-7));
  }
}

TEST_CASE("fundamental solutions")
{
  double const f1_ref[][2]  = {{0.5, 0.369466806868254374}, {1.0, 0.557337186774348357},
                               {5.0, 0.589770730870926801}, {20.0, 0.392402552707704671}};
  double const f2s_ref[][2] = {{0.5, 1.02255865533863343}, {1.0, 1.13053670381642962},
                               {5.0, 1.54568342607348382}, {20.0, 2.13396414173606942}};
  for (auto const &r : f1_ref)
  {
    CHECK(Close(f1(r[0]), r[1], 1e-12));
  }
  for (auto const &r : f2s_ref)
  {
    CHECK(Close(f2_scaled(r[0]), r[1], 1e-10));
    CHECK(Close(f2(r[0]), std::exp(-r[0]) * r[1], 1e-10));
  }
  CHECK(Close(f1_reflected(10.0), f1(10.0), 1e-11));
  CHECK_THROWS_AS(f1(0.0), Error);
  CHECK_THROWS_AS(f2(-1.0), Error);
}

TEST_CASE("f1 and f2 solve t f'' + t f' + f/4 = 0")
{
  for (double t = 0.5; t <= 20.0; t += 0.25)
  {
    CAPTURE(t);
    CHECK(kummer_ode_residual(f1, t, 1e-3) <= 1e-6);
    CHECK(kummer_ode_residual(f2, t, 1e-3) <= 1e-6);
  }
}

TEST_CASE("scaled wronskian is the constant -1/Gamma(3/4)")
{
  double const want = -0.816048939098262981;
  for (double t = 0.5; t <= 30.0; t += 0.5)
  {
    CAPTURE(t);
    CHECK(Close(wronskian_scaled(t), want, 1e-9));
  }
  CHECK(Close(wronskian(2.0), std::exp(-2.0) * want, 1e-9));
}

TEST_CASE("large-t equivalents f1 ~ t^(-1/4), f2 ~ e^(-t) t^(1/4)")
{
  double const a1 = f1(1e3) * std::pow(1e3, 0.25), a2 = f1(1e4) * std::pow(1e4, 0.25);
  double const b1 = f2_scaled(1e3) * std::pow(1e3, -0.25), b2 = f2_scaled(1e4) * std::pow(1e4, -0.25);
  CHECK(std::abs(a1 / a2 - 1.0) < 0.02);
  CHECK(std::abs(b1 / b2 - 1.0) < 0.02);
  // leading constants 1/Gamma(3/4) and 1
  CHECK(Close(a2, 1.0 / std::tgamma(0.75), 1e-3));
  CHECK(Close(b2, 1.0, 1e-3));
}
