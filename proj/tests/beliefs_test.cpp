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
#include <random>

#include "test_support.hpp"

using namespace rdp;
using namespace rdp::testing;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("skepticism belief under simple profiles", "[beliefs]") {
  const TypeSpace a = ts_a();
  CHECK(skepticism_belief(a, {0.0, 0.0}) == a.mu);
  CHECK_THAT(skepticism_mean(a, {0.0, 0.0}), WithinAbs(0.5, 1e-15));
  CHECK_THAT(skepticism_value(a, {0.0, 0.0}), WithinAbs(0.5, 1e-15));
  CHECK_THAT(skepticism_mean(a, {0.5, 0.0}), WithinAbs(1.0 / 3.0, 1e-15));

  const TypeSpace b = ts_b();
  const auto full = skepticism_belief(b, {1.0, 1.0, 1.0});
  CHECK(full == std::vector<double>{0.0, 0.0, 1.0});
  CHECK(skepticism_value(b, {1.0, 1.0, 1.0}) == 0.0);
  CHECK_THAT(skepticism_value(b, {0.0, 0.0, 0.0}), WithinAbs(0.3, 1e-15));
  CHECK_THAT(skepticism_value(b, {1.0, 0.0, 0.0}), WithinAbs(0.3 / 0.7 - 0.3, 1e-15));
  CHECK(skepticism_value(b, {1.0, 1.0, 0.0}) == 0.0);
}

TEST_CASE("staircase values", "[beliefs]") {
  const TypeSpace b = ts_b();
  CHECK_THAT(staircase_value(b, 1, 0.0), WithinAbs(0.128571428571, 1e-10));
  CHECK_THAT(staircase_value(b, 1, 0.75), WithinAbs(0.0, 1e-12));
  CHECK_THAT(staircase_value(b, 0, 0.0), WithinAbs(prior_mean(b) - b.cost, 1e-15));
  for (std::size_t k = 0; k + 1 < b.size(); ++k)
    CHECK(std::abs(staircase_value(b, k, 1.0) - staircase_value(b, k + 1, 0.0)) < 1e-12);
}

TEST_CASE("skepticism gradient", "[beliefs]") {
  const TypeSpace b = ts_b();
  CHECK_THAT(skepticism_gradient(b, {0.0, 0.0, 0.0}, 0), WithinAbs(-0.12, 1e-15));
  CHECK(skepticism_gradient(b, {1.0, 1.0, 0.0}, 2) == 0.0);
  CHECK(throws_code([&] { skepticism_gradient(b, {1.0, 1.0, 1.0}, 0); }, errc::undefined_at_full_disclosure));
  // theta^k equal to the current mean: type 1 (0.6) at the prior.
  CHECK_THAT(skepticism_gradient(b, {0.0, 0.0, 0.0}, 1), WithinAbs(0.0, 1e-15));
}

TEST_CASE("gradient matches central differences on random markets", "[beliefs][property]") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const TypeSpace ts = random_market(rng, 2 + trial % 4);
    Profile q(ts.size());
    for (double& x : q) x = 0.05 + 0.9 * u(rng);
    if (std::abs(skepticism_mean(ts, q) - ts.cost) < 1e-3) continue;
    for (std::size_t k = 0; k < ts.size(); ++k) {
      const double h = 1e-6;
      Profile up = q, dn = q;
      up[k] += h;
      dn[k] -= h;
      const double fd = (skepticism_value(ts, up) - skepticism_value(ts, dn)) / (2 * h);
      const double g = skepticism_gradient(ts, q, k);
      if (std::abs(g) > 1e-8) CHECK_THAT(fd, WithinRel(g, 1e-5));
      else CHECK(std::abs(fd) < 1e-7);
      ++checked;
    }
  }
  CHECK(checked > 500);
}

TEST_CASE("disclosure shifts skepticism away from the discloser", "[beliefs][property]") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 500; ++trial) {
    const TypeSpace ts = random_market(rng, 2 + trial % 4);
    Profile q(ts.size());
    for (double& x : q) x = 0.9 * u(rng);
    const double v = skepticism_mean(ts, q);
    for (std::size_t k = 0; k < ts.size(); ++k) {
      Profile up = q;
      up[k] += 1e-4;
      const double v2 = skepticism_mean(ts, up);
      if (ts.theta[k] > v) CHECK(v2 <= v + 1e-15);
      if (ts.theta[k] < v) CHECK(v2 >= v - 1e-15);
    }
  }
}

TEST_CASE("tipping point", "[beliefs]") {
  const TippingPoint tb = tipping_point(ts_b());
  CHECK(tb.type == 1);
  CHECK_THAT(tb.q, WithinAbs(0.75, 1e-12));
  // Bisection oracle on the staircase value.
  const TypeSpace b = ts_b();
  const double qb = bisect([&](double q) { return staircase_value(b, 1, q) > 0.0 ? 1.0 : -1.0; }, 0.0, 1.0);
  CHECK_THAT(qb, WithinAbs(0.75, 1e-11));

  TypeSpace low = ts_b();
  low.cost = 0.7;
  const TippingPoint tl = tipping_point(low);
  CHECK(tl.type == 0);
  CHECK(tl.q == 0.0);

  const TippingPoint ta = tipping_point(ts_a());
  CHECK(ta.type == 1);
  CHECK(ta.q == 1.0);
}

TEST_CASE("tipping point is the first zero of the staircase", "[beliefs][property]") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const TypeSpace ts = random_market(rng, 2 + trial % 4);
    const TippingPoint tp = tipping_point(ts);
    if (ts.cost <= ts.theta.back() + kMergeTol) continue;
    CHECK(staircase_value(ts, tp.type, tp.q) <= 1e-10);
    for (std::size_t k = 0; k <= tp.type; ++k)
      for (int i = 0; i <= 20; ++i) {
        const double q = k < tp.type ? i / 20.0 : tp.q * i / 20.0 - 1e-9;
        if (q < 0.0) continue;
        CHECK(staircase_value(ts, k, q) > 0.0);
      }
  }
}

TEST_CASE("stride integral of skepticism matches quadrature", "[beliefs][property]") {
  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 300; ++trial) {
    const TypeSpace ts = random_market(rng, 2 + trial % 4);
    Profile base(ts.size());
    for (double& x : base) x = u(rng);
    const std::size_t k = trial % ts.size();
    const double a = 0.5 * u(rng), b = a + (1.0 - a) * u(rng);
    auto f = [&](double s) {
      Profile p = base;
      p[k] = s;
      return skepticism_value(ts, p);
    };
    CHECK_THAT(stride_value_integral(ts, base, k, a, b), WithinAbs(integrate(f, a, b, 1e-12), 1e-9));
  }
}
