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

namespace {

AlternatingPath reversed_b() { return {3, {{1, 0.0, 1.0}, {0, 0.0, 1.0}}}; }

// Oracle: the stride form of the bound by direct quadrature of the staircase.
double bound_by_quadrature(const TypeSpace& ts, const AlternatingPath& path) {
  Profile q(ts.size(), 0.0);
  double r = 0.0;
  for (const PathStep& s : path.steps) {
    auto f = [&](double x) {
      Profile p = q;
      p[s.type] = x;
      return ts.theta[s.type] - ts.cost - skepticism_value(ts, p);
    };
    r += ts.mu[s.type] * integrate(f, s.from, s.to, 1e-13);
    q[s.type] = s.to;
  }
  return r;
}

}  // namespace

TEST_CASE("sequential path shape", "[paths]") {
  const AlternatingPath b = sequential_path(ts_b());
  REQUIRE(b.steps.size() == 2);
  CHECK(b.steps[0].type == 0);
  CHECK(b.steps[1].type == 1);
  CHECK(b.steps[1].to == 1.0);
  CHECK(sequential_path(ts_a()).steps.size() == 1);
  const TypeSpace hi = make_type_space({1.0, 0.6, 0.2}, {0.3, 0.4, 0.3}, 0.65);
  const AlternatingPath h = sequential_path(hi);
  REQUIRE(h.steps.size() == 1);
  CHECK_THAT(path_revenue_bound(hi, h), WithinAbs(full_surplus(hi), 1e-12));
}

TEST_CASE("quantile parameterization", "[paths]") {
  const TypeSpace b = ts_b();
  const AlternatingPath p = sequential_path(b);
  CHECK_THAT(path_mass(b, p), WithinAbs(0.7, 1e-15));
  CHECK(quantile_profile(b, p, 0.0) == Profile{0.0, 0.0, 0.0});
  const Profile q3 = quantile_profile(b, p, 0.3);
  CHECK_THAT(q3[0], WithinAbs(1.0, 1e-15));
  CHECK(q3[1] == 0.0);
  const Profile q5 = quantile_profile(b, p, 0.5);
  CHECK_THAT(q5[1], WithinAbs(0.5, 1e-12));
  CHECK_THAT(quantile_skepticism(b, p, 0.0), WithinAbs(0.6, 1e-15));
  CHECK_THAT(quantile_skepticism(b, p, 0.3), WithinAbs(0.3 / 0.7, 1e-12));
  CHECK_THAT(quantile_skepticism(b, p, 0.7), WithinAbs(0.2, 1e-12));
  CHECK(throws_code([&] { quantile_profile(b, p, 0.71); }, errc::quantile_out_of_range));
  CHECK(throws_code([&] { quantile_profile(b, p, -0.1); }, errc::quantile_out_of_range));
}

TEST_CASE("pointwise lower bound", "[paths]") {
  const TypeSpace b = ts_b();
  CHECK_THAT(pointwise_lower_bound(b, 0.0), WithinAbs(0.6, 1e-15));
  CHECK_THAT(pointwise_lower_bound(b, 0.3), WithinAbs(0.3 / 0.7, 1e-12));
  CHECK_THAT(pointwise_lower_bound(b, 0.7), WithinAbs(0.2, 1e-12));
  CHECK(throws_code([&] { pointwise_lower_bound(b, 1.0); }, errc::quantile_out_of_range));
  // Full revelation: the greedy bound coincides with the sequential path.
  const AlternatingPath p = sequential_path(b);
  for (int i = 0; i <= 70; ++i) {
    const double Q = 0.01 * i;
    CHECK_THAT(pointwise_lower_bound(b, Q), WithinAbs(quantile_skepticism(b, p, Q), 1e-12));
  }
}

TEST_CASE("path revenue bound", "[paths]") {
  const TypeSpace a = ts_a(), b = ts_b();
  CHECK_THAT(path_revenue_bound(a, sequential_path(a)), WithinAbs(0.5 * std::log(2.0), 1e-12));
  const PathBound pb = path_revenue_bound_detail(b, sequential_path(b));
  CHECK_THAT(pb.stride_sum, WithinAbs(mrg_closed_form(b), 1e-8));
  CHECK_THAT(pb.quantile_form, WithinAbs(pb.stride_sum, 1e-8));
  CHECK_THAT(pb.stride_sum, WithinAbs(bound_by_quadrature(b, sequential_path(b)), 1e-8));
  const PathBound rb = path_revenue_bound_detail(b, reversed_b());
  CHECK(rb.stride_sum < mrg_closed_form(b) - 1e-4);
  CHECK_THAT(rb.quantile_form, WithinAbs(rb.stride_sum, 1e-8));
  CHECK_THAT(rb.stride_sum, WithinAbs(bound_by_quadrature(b, reversed_b()), 1e-8));
  const AlternatingPath bad{3, {{2, 0.0, 1.0}}};
  CHECK(throws_code([&] { path_revenue_bound(b, bad); }, errc::inefficient_direction));
}

TEST_CASE("exchange improvement", "[paths]") {
  const TypeSpace b = ts_b();
  const AlternatingPath swapped = exchange_improve(b, reversed_b(), 0);
  CHECK(swapped.steps[0].type == 0);
  CHECK_THAT(path_revenue_bound(b, swapped), WithinAbs(0.239824, 5e-7));
  for (int i = 0; i <= 100; ++i) {
    const double Q = 0.007 * i;
    CHECK(quantile_skepticism(b, swapped, Q) <= quantile_skepticism(b, reversed_b(), Q) + 1e-12);
  }
  const AlternatingPath seq = sequential_path(b);
  CHECK(throws_code([&] { exchange_improve(b, seq, 0); }, errc::not_exchangeable));
  CHECK(throws_code([&] { exchange_improve(b, seq, 1); }, errc::not_exchangeable));

  // Both strides past the tipping point: the integrands are theta - c.
  const TypeSpace t = make_type_space({1.0, 0.8, 0.7, 0.0}, {0.4, 0.2, 0.2, 0.2}, 0.5);
  const AlternatingPath pre{4, {{0, 0.0, 1.0}, {2, 0.0, 1.0}, {1, 0.0, 1.0}}};
  REQUIRE(skepticism_value(t, {1.0, 0.0, 1.0, 0.0}) == 0.0);
  const AlternatingPath post = exchange_improve(t, pre, 1);
  CHECK_THAT(path_revenue_bound(t, post), WithinAbs(path_revenue_bound(t, pre), 1e-10));
}

TEST_CASE("find_path recovers the sequential order", "[paths]") {
  const TypeSpace a = ts_a(), b = ts_b();
  const MenuProfile ma = eps_optimal_profile(a, 1e-3, 100);
  const AlternatingPath pa = find_path(a, ma, worst_case_equilibrium(a, ma));
  REQUIRE(pa.steps.size() == 1);
  CHECK(pa.steps[0].type == 0);
  CHECK(pa.steps[0].to == 1.0);

  const MenuProfile mb = eps_optimal_profile(b, 1e-3, 100);
  const Equilibrium wb = worst_case_equilibrium(b, mb);
  const AlternatingPath pb = find_path(b, mb, wb);
  REQUIRE(pb.steps.size() == 2);
  CHECK(pb.steps[0].type == 0);
  CHECK(pb.steps[1].type == 1);
  CHECK(pb.steps[1].to == 1.0);
  CHECK(path_revenue_bound(b, pb) >= wb.revenue - 1e-9);
}

TEST_CASE("find_path fails on menus that are not robust", "[paths]") {
  const TypeSpace a = ts_a();
  const MenuProfile bench = build_benchmark_profile(a);
  const auto eqs = enumerate_equilibria(a, bench);
  CHECK(throws_code([&] { find_path(a, bench, eqs.back()); }, errc::stuck));
  // The zero-disclosure target is met before any step.
  CHECK(find_path(a, bench, eqs.front()).steps.empty());
}

TEST_CASE("path bound dominates the worst case", "[paths][property]") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    const TypeSpace ts = random_market(rng, 2 + trial % 3);
    const MenuProfile mp = eps_optimal_profile(ts, safe_epsilon(ts), 20);
    const Equilibrium w = worst_case_equilibrium(ts, mp);
    const AlternatingPath p = find_path(ts, mp, w);
    CHECK(path_revenue_bound(ts, p) >= w.revenue - 1e-9);
    const PathBound d = path_revenue_bound_detail(ts, p);
    CHECK_THAT(d.quantile_form, WithinAbs(d.stride_sum, 1e-8));
  }
}

TEST_CASE("sequential path maximizes the bound over stride grids", "[paths][property]") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    const TypeSpace ts = random_market(rng, 2 + trial % 2);
    const double best = path_revenue_bound(ts, sequential_path(ts));
    for (const AlternatingPath& p : enumerate_stride_paths(ts, 4))
      CHECK(path_revenue_bound(ts, p) <= best + 1e-9);
    CHECK_THAT(best, WithinAbs(mrg_closed_form(ts), 1e-8));
  }
}
