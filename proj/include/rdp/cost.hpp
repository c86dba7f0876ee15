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

#ifndef RDP_COST_HPP_
#define RDP_COST_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "rdp/beliefs.hpp"
#include "rdp/equilibrium.hpp"
#include "rdp/errors.hpp"
#include "rdp/market.hpp"
#include "rdp/numeric.hpp"
#include "rdp/pricing.hpp"

namespace rdp {

using DisclosureCost = std::function<double(double)>;

// Piecewise-linear cost through (q, cost) knots; flat beyond the ends.
inline DisclosureCost piecewise_linear_cost(std::vector<std::pair<double, double>> knots) {
  if (knots.empty()) return [](double) { return 0.0; };
  std::sort(knots.begin(), knots.end());
  return [knots](double q) {
    if (q <= knots.front().first) return knots.front().second;
    for (std::size_t i = 1; i < knots.size(); ++i)
      if (q <= knots[i].first) {
        const auto [q0, c0] = knots[i - 1];
        const auto [q1, c1] = knots[i];
        return q1 == q0 ? c1 : c0 + (c1 - c0) * (q - q0) / (q1 - q0);
      }
    return knots.back().second;
  };
}

// Price of type k disclosing x when higher types stop at their endpoints:
// integral of theta^k - c - w along that stride.
inline double sequential_price(const TypeSpace& ts, const Profile& endpoint, std::size_t k, double x) {
  Profile base(ts.size(), 0.0);
  for (std::size_t j = 0; j < k; ++j) base[j] = endpoint[j];
  return x * (ts.theta[k] - ts.cost) - stride_value_integral(ts, base, k, 0.0, x);
}

struct CostAdjusted {
  Profile endpoint;
  MenuProfile menus;
  double profit = 0.0;
};

// Exhaustive search over endpoint profiles of efficient types on the grid
// {0, 1/n, ..., 1}.
inline CostAdjusted cost_adjusted_profile(const TypeSpace& ts, const DisclosureCost& cost,
                                          std::size_t n, double budget = kDefaultBudget) {
  if (n == 0) fail(errc::invalid_config, "grid size must be positive");
  const std::size_t E = ts.efficient_count();
  if (std::pow(double(n + 1), double(E)) > budget)
    fail(errc::budget_exceeded, "endpoint grid too large");
  const std::vector<double> g = unit_grid(n);
  std::vector<std::size_t> idx(E, 0);
  CostAdjusted best;
  best.profit = -INFINITY;
  Profile q(ts.size(), 0.0);
  while (true) {
    for (std::size_t k = 0; k < E; ++k) q[k] = g[idx[k]];
    double profit = 0.0;
    for (std::size_t k = 0; k < E; ++k)
      profit += ts.mu[k] * (sequential_price(ts, q, k, q[k]) - cost(q[k]));
    if (profit > best.profit + 1e-15) {
      best.profit = profit;
      best.endpoint = q;
    }
    std::size_t k = 0;
    while (k < E && ++idx[k] == g.size()) idx[k++] = 0;
    if (k == E) break;
  }
  best.menus.assign(ts.size(), finite_menu({{0.0, 0.0}}));
  for (std::size_t k = 0; k < E; ++k) {
    const double qk = best.endpoint[k];
    if (qk <= 0.0) continue;
    PriceCurve c;
    const Profile ep = best.endpoint;
    c.q_max = qk;
    c.price = [ts, ep, k](double x) { return sequential_price(ts, ep, k, x); };
    c.marginal = [ts, ep, k](double x) {
      Profile p(ts.size(), 0.0);
      for (std::size_t j = 0; j < k; ++j) p[j] = ep[j];
      p[k] = x;
      return ts.theta[k] - ts.cost - skepticism_value(ts, p);
    };
    best.menus[k] = Menu{};
    best.menus[k].curve = c;
  }
  return best;
}

}  // namespace rdp

#endif  // RDP_COST_HPP_
