// Copyright 2026 The rdp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>

#include "test_support.hpp"

using namespace rdp;
using namespace rdp::testing;
using Catch::Matchers::WithinAbs;

TEST_CASE("binary price dispersion", "[dispersion]") {
  const PriceDispersion d = dispersion_cdf(ts_a(), 0);
  CHECK_THAT(d.lo(), WithinAbs(0.5, 1e-15));
  CHECK_THAT(d.hi(), WithinAbs(1.0, 1e-15));
  CHECK(d.cdf(0.5) == 0.0);
  CHECK(d.cdf(0.4) == 0.0);
  CHECK_THAT(d.cdf(0.75), WithinAbs(2.0 / 3.0, 1e-15));
  CHECK_THAT(d.cdf(1.0), WithinAbs(1.0, 1e-15));
  const PriceDispersion low = dispersion_cdf(ts_a(), 1);
  CHECK(low.atom_mass == 1.0);
  CHECK(low.atom_price == 0.0);
}

TEST_CASE("dispersion cases on instance B", "[dispersion]") {
  const TypeSpace b = ts_b();
  const PriceDispersion d0 = dispersion_cdf(b, 0), d1 = dispersion_cdf(b, 1), d2 = dispersion_cdf(b, 2);
  CHECK(d0.cont_mass == 1.0);
  CHECK(d0.atom_mass == 0.0);
  CHECK_THAT(d1.cont_mass, WithinAbs(0.75, 1e-12));
  CHECK_THAT(d1.atom_mass, WithinAbs(0.25, 1e-12));
  CHECK_THAT(d1.atom_price, WithinAbs(0.3, 1e-15));
  CHECK(d2.atom_mass == 1.0);
  CHECK(d2.atom_price == 0.0);
  CHECK(d2.cdf(0.0) == 1.0);
  TypeSpace past = make_type_space({1.0, 0.8, 0.7, 0.0}, {0.4, 0.2, 0.2, 0.2}, 0.5);
  REQUIRE(tipping_point(past).type < 2);
  const PriceDispersion d3 = dispersion_cdf(past, 2);
  CHECK(d3.atom_mass == 1.0);
  CHECK_THAT(d3.atom_price, WithinAbs(0.2, 1e-15));
}

TEST_CASE("dispersion inverts the marginal price", "[dispersion][property]") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 200; ++trial) {
    const TypeSpace ts = random_market(rng, 2 + trial % 4);
    for (std::size_t k = 0; k < ts.size(); ++k) {
      const PriceDispersion d = dispersion_cdf(ts, k);
      if (d.cont_mass <= 0.0) continue;
      for (int i = 0; i <= 20; ++i) {
        const double q = d.cont_mass * i / 20.0;
        const double p = optimal_marginal_price(ts, k, q);
        // The tipping type's atom sits at its last marginal price.
        const double atom = p >= d.atom_price && d.atom_mass > 0.0 ? d.atom_mass : 0.0;
        CHECK_THAT(d.cdf(p) - atom, WithinAbs(q, 1e-10));
      }
    }
  }
}

TEST_CASE("determinizing a two-menu mixture", "[dispersion]") {
  const TypeSpace ts = make_type_space({1.0, 0.0}, {0.5, 0.5}, 0.5);
  RandomMenuProfile rmp(2);
  rmp[0] = {{0.5, 0.5}, {{{0.0, 0.0}, {1.0, 0.2}}, {{0.0, 0.0}, {1.0, 0.6}}}};
  rmp[1] = {{1.0}, {{{0.0, 0.0}}}};
  const auto plans = determinize_random_profile(ts, rmp)[0].isolated();
  bool found = false;
  for (const Plan& p : plans) found = found || same_plan(p, {0.5, 0.1});
  CHECK(found);
  CHECK(throws_code([&] { determinize_random_profile(ts, RandomMenuProfile(1)); }, errc::invalid_config));
  RandomMenuProfile bad = rmp;
  bad[0].prob = {0.5, 0.6};
  CHECK(throws_code([&] { determinize_random_profile(ts, bad); }, errc::invalid_config));
}

TEST_CASE("a degenerate mixture determinizes to its own best responses", "[dispersion]") {
  const TypeSpace a = ts_a();
  const MenuProfile bench = build_benchmark_profile(a);
  RandomMenuProfile rmp(2);
  for (std::size_t k = 0; k < 2; ++k) rmp[k] = {{1.0}, {bench[k].isolated()}};
  const MenuProfile det = determinize_random_profile(a, rmp);
  for (std::size_t k = 0; k < 2; ++k) {
    const auto x = det[k].isolated(), y = bench[k].isolated();
    REQUIRE(x.size() == y.size());
    for (std::size_t i = 0; i < x.size(); ++i) CHECK(same_plan(x[i], y[i]));
  }
  CHECK(worst_case_equilibrium_random(a, rmp).revenue == 0.0);
}

TEST_CASE("dispersion profile determinizes onto the binary curve", "[dispersion]") {
  const TypeSpace a = ts_a();
  const MenuProfile bin = build_binary_profile(a);
  const RandomMenuProfile rmp = dispersion_profile(a, 50);
  const MenuProfile det = determinize_random_profile(a, rmp);
  const auto plans = det[0].isolated();
  CHECK(plans.size() == 51);
  for (const Plan& p : plans) CHECK_THAT(p.p, WithinAbs(bin[0].curve_price(p.q), 1e-6));

  // Cell-mean prices exceed the marginal price at the cell's left end by
  // about p''/(2N); eps must cover that gap to rule out zero disclosure.
  const double eps = 1e-2;
  const RandomMenuProfile rp = dispersion_profile(a, 50, eps);
  const Equilibrium r = worst_case_equilibrium_random(a, rp);
  const Equilibrium d = worst_case_equilibrium(a, determinize_random_profile(a, rp));
  CHECK_THAT(r.revenue, WithinAbs(d.revenue, 1e-12));
  CHECK(r.q[0] == 1.0);
  CHECK_THAT(r.revenue, WithinAbs(0.5 * (std::log(2.0) - eps), 1e-12));
}

TEST_CASE("random and determinized worst cases agree on instance B", "[dispersion]") {
  const TypeSpace b = ts_b();
  const RandomMenuProfile rp = dispersion_profile(b, 20, 1e-2);
  const Equilibrium r = worst_case_equilibrium_random(b, rp);
  const Equilibrium d = worst_case_equilibrium(b, determinize_random_profile(b, rp));
  CHECK_THAT(r.revenue, WithinAbs(d.revenue, 1e-12));
  CHECK_THAT(r.revenue, WithinAbs(mrg_closed_form(b) - 0.7 * 1e-2, 1e-9));
}

TEST_CASE("small perturbations leave the zero-disclosure equilibrium", "[dispersion]") {
  const TypeSpace a = ts_a();
  const RandomMenuProfile rp = dispersion_profile(a, 50, 1e-3);
  const Equilibrium r = worst_case_equilibrium_random(a, rp);
  CHECK(r.revenue == 0.0);
  CHECK(worst_case_equilibrium(a, determinize_random_profile(a, rp)).revenue == 0.0);
}
