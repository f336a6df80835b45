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
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <del/del.h>
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <filesystem>
#include <string>
#include <vector>

namespace {

std::string LastError()
{
  return del_last_error();
}

}  // namespace

TEST_CASE("version and status names")
{
  CHECK(std::string(del_version()).find("damped-euler-lab") == 0);
  CHECK(std::string(del_status_name(DEL_OK)) == "ok");
  CHECK(std::string(del_status_name(DEL_ERR_CFL_VIOLATION)) == "cfl_violation");
  CHECK(del_status_is_config_error(DEL_ERR_UNKNOWN_KEY));
  CHECK(del_status_is_config_error(DEL_ERR_MISSING_KEY));
  CHECK_FALSE(del_status_is_config_error(DEL_ERR_NON_FINITE));
  CHECK_FALSE(del_status_is_config_error(DEL_OK));
}

TEST_CASE("special functions through the C interface")
{
  double v = 0.0;
  REQUIRE(del_log_gamma(0.5, &v) == DEL_OK);
  CHECK(v == doctest::Approx(0.5 * std::log(M_PI)).epsilon(1e-14));
  REQUIRE(del_wallis(3.0, &v) == DEL_OK);
  CHECK(v == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
  REQUIRE(del_kummer_m(1.0, 1.0, 0.7, &v) == DEL_OK);
  CHECK(v == doctest::Approx(std::exp(0.7)).epsilon(1e-14));
  REQUIRE(del_wronskian_scaled(2.0, &v) == DEL_OK);
  CHECK(v == doctest::Approx(-0.816048939098262981).epsilon(1e-9));

  CHECK(del_log_gamma(-1.0, &v) == DEL_ERR_DOMAIN);
  CHECK_FALSE(LastError().empty());
  CHECK(del_log_gamma(1.0, nullptr) == DEL_ERR_NULL_ARGUMENT);
}

TEST_CASE("profiles and tau")
{
  double A = 0.0, B = 0.0;
  REQUIRE(del_barenblatt_coefficients(2.0, 1.0, &A, &B) == DEL_OK);
  CHECK(B == doctest::Approx(1.0 / 12.0));
  CHECK(del_barenblatt_coefficients(1.0, 1.0, &A, &B) == DEL_ERR_DOMAIN);

  del_tau *tau = nullptr;
  REQUIRE(del_tau_create(1.0, 0.0, 100.0, 1e-10, &tau) == DEL_OK);
  double value = 0.0, deriv = 0.0;
  REQUIRE(del_tau_eval(tau, 0.0, &value, &deriv) == DEL_OK);
  CHECK(value == 1.0);
  CHECK(deriv == 0.0);
  REQUIRE(del_tau_eval(tau, 100.0, &value, &deriv) == DEL_OK);
  CHECK(value / (2.0 * std::sqrt(100.0)) == doctest::Approx(1.0).epsilon(0.05));
  CHECK(del_tau_eval(tau, 200.0, &value, &deriv) == DEL_ERR_OUT_OF_RANGE);
  del_tau_destroy(tau);
  del_tau_destroy(nullptr);
}

TEST_CASE("field, step and diagnostics")
{
  del_gaussian *g = nullptr;
  REQUIRE(del_gaussian_create(1.0, 0.0, 1.0, 0.0, 0.0, 1.0, &g) == DEL_OK);
  double state[5];
  REQUIRE(del_gaussian_state(g, 0.0, state) == DEL_OK);
  CHECK(state[0] == doctest::Approx(1.0));
  CHECK(state[2] == doctest::Approx(1.0));

  del_field *f = nullptr;
  REQUIRE(del_gaussian_field(g, 0.0, -12.0, 12.0, 600, &f) == DEL_OK);
  CHECK(del_gaussian_field(g, 0.0, -1.0, 1.0, 60, nullptr) == DEL_ERR_NULL_ARGUMENT);
  del_field *tiny = nullptr;
  CHECK(del_gaussian_field(g, 0.0, -1.0, 1.0, 60, &tiny) == DEL_ERR_GRID_TOO_SMALL);
  CHECK(tiny == nullptr);

  size_t n = 0;
  REQUIRE(del_field_size(f, &n) == DEL_OK);
  CHECK(n == 600);
  double mass = 0.0;
  REQUIRE(del_field_mass(f, &mass) == DEL_OK);
  CHECK(mass == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-12));

  double dt = 0.0;
  REQUIRE(del_cfl_dt(f, 0.45, &dt) == DEL_OK);
  CHECK(dt == doctest::Approx(0.45 * 0.04));
  del_field *next = nullptr;
  CHECK(del_step(f, 3.0 * dt, &next) == DEL_ERR_CFL_VIOLATION);
  CHECK(LastError().find("CFL") != std::string::npos);
  REQUIRE(del_step(f, dt, &next) == DEL_OK);
  double t = 0.0, mass1 = 0.0;
  REQUIRE(del_field_time(next, &t) == DEL_OK);
  CHECK(t == doctest::Approx(dt));
  REQUIRE(del_field_mass(next, &mass1) == DEL_OK);
  CHECK(mass1 == doctest::Approx(mass).epsilon(1e-13));

  del_rescaled *r = nullptr;
  REQUIRE(del_rescale(f, 1.0, 0.0, &r) == DEL_OK);
  double mo[4], en[4], gap = 1.0;
  REQUIRE(del_moments(r, mo) == DEL_OK);
  CHECK(std::abs(mo[0]) < 1e-14);
  // cell averaging adds dx^2/12 times the mass to the second moment
  CHECK(mo[2] == doctest::Approx(std::sqrt(M_PI) * 0.04 * 0.04 / 12.0).epsilon(1e-3));
  REQUIRE(del_energies(r, en) == DEL_OK);
  CHECK(std::abs(en[3]) < 1e-6);
  REQUIRE(del_ck_gap(r, &gap) == DEL_OK);
  CHECK(std::abs(gap) < 1e-6);
  del_rescaled_destroy(r);

  del_field_destroy(next);
  del_field_destroy(f);
  del_gaussian_destroy(g);
}

TEST_CASE("field creation validates its input")
{
  std::vector<double> rho = {1.0, 2.0, 3.0}, m = {0.0, 0.0, 0.0};
  del_field          *f   = nullptr;
  REQUIRE(del_field_create(0.0, 3.0, 3, 1.0, rho.data(), m.data(), &f) == DEL_OK);
  std::vector<double> r2(3), m2(3);
  REQUIRE(del_field_copy(f, r2.data(), m2.data()) == DEL_OK);
  CHECK(r2 == rho);
  del_field_destroy(f);
  CHECK(del_field_create(1.0, 0.0, 3, 1.0, rho.data(), m.data(), &f) != DEL_OK);
  CHECK(del_field_create(0.0, 3.0, 3, 1.0, nullptr, m.data(), &f) == DEL_ERR_NULL_ARGUMENT);
}

TEST_CASE("experiments through the C interface")
{
  std::filesystem::path const root = std::filesystem::temp_directory_path() / "del_capi_runs";
  std::filesystem::remove_all(root);

  del_report *rep = nullptr;
  REQUIRE(del_experiment_run("figure1", "gammas = 2,1.5,1.1\n", root.c_str(), &rep) == DEL_OK);
  CHECK(del_report_passed(rep) == 1);
  CHECK(del_report_check_count(rep) >= 2);
  char const *name = nullptr, *verdict = nullptr, *detail = nullptr;
  REQUIRE(del_report_check(rep, 0, &name, &verdict, &detail) == DEL_OK);
  CHECK(std::strcmp(verdict, "PASS") == 0);
  CHECK(del_report_check(rep, 99, &name, &verdict, &detail) == DEL_ERR_OUT_OF_RANGE);
  CHECK(std::string(del_report_output_dir(rep)) == (root / "figure1").string());
  CHECK(std::string(del_report_summary(rep)).find("figure1") != std::string::npos);
  del_report_destroy(rep);

  rep = nullptr;
  CHECK(del_experiment_run("figure1", "name = tau-study\nt_end = 1\n", root.c_str(), &rep) ==
        DEL_ERR_INVALID_ARGUMENT);
  CHECK(del_experiment_run(nullptr, "name = bogus\n", root.c_str(), &rep) == DEL_ERR_UNKNOWN_KEY);
  CHECK(del_experiment_run("figure1", "gammas = 2\nfoo = 1\n", root.c_str(), &rep) ==
        DEL_ERR_UNKNOWN_KEY);
  CHECK(LastError().find("line 2") != std::string::npos);
  CHECK(del_experiment_run(nullptr, "", root.c_str(), &rep) == DEL_ERR_MISSING_KEY);
  CHECK(rep == nullptr);
}
