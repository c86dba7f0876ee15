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

#ifndef RDP_EQUILIBRIUM_HPP_
#define RDP_EQUILIBRIUM_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "rdp/beliefs.hpp"
#include "rdp/errors.hpp"
#include "rdp/market.hpp"
#include "rdp/pricing.hpp"

namespace rdp {

inline constexpr double kDefaultBudget = 1e7;

struct Equilibrium {
  std::vector<Plan> plans;  // one per type
  Profile q;
  double skepticism = 0.0;  // consumer's value of the outside option
  double revenue = 0.0;
};

// Producer payoff of type k choosing `pl` when non-disclosure is worth w.
inline double plan_payoff(const TypeSpace& ts, std::size_t k, const Plan& pl, double w) {
  return pl.q * std::max(ts.theta[k] - ts.cost, 0.0) + (1.0 - pl.q) * w - pl.p;
}

inline double profile_revenue(const TypeSpace& ts, const std::vector<Plan>& plans) {
  double r = 0.0;
  for (std::size_t k = 0; k < ts.size(); ++k) r += ts.mu[k] * plans[k].p;
  return r;
}

inline std::vector<std::vector<Plan>> finite_plans(const MenuProfile& mp) {
  std::vector<std::vector<Plan>> out;
  for (const Menu& m : mp) {
    if (!m.finite()) fail(errc::invalid_config, "menu must be finite; discretize first");
    out.push_back(m.isolated());
  }
  return out;
}

inline void check_sizes(const TypeSpace& ts, const MenuProfile& mp) {
  if (mp.size() != ts.size()) fail(errc::invalid_config, "one menu per type required");
}

// No type has a deviation that gains more than kStrictTol.
inline bool is_equilibrium(const TypeSpace& ts, const MenuProfile& mp,
                           const std::vector<Plan>& chosen) {
  check_sizes(ts, mp);
  if (chosen.size() != ts.size()) fail(errc::invalid_config, "one plan per type required");
  const auto menus = finite_plans(mp);
  Profile q(ts.size());
  for (std::size_t k = 0; k < ts.size(); ++k) {
    bool found = false;
    for (const Plan& pl : menus[k]) found = found || same_plan(pl, chosen[k]);
    if (!found) fail(errc::plan_not_in_menu, "type " + std::to_string(k));
    q[k] = chosen[k].q;
  }
  const double w = skepticism_value(ts, q);
  for (std::size_t k = 0; k < ts.size(); ++k) {
    const double base = plan_payoff(ts, k, chosen[k], w);
    for (const Plan& pl : menus[k])
      if (plan_payoff(ts, k, pl, w) > base + kStrictTol) return false;
  }
  return true;
}

// All pure-strategy equilibria.  Inefficient types are held at (0,0) when
// their menu offers it.  Results are sorted by revenue, then by q-profile.
inline std::vector<Equilibrium> enumerate_equilibria(const TypeSpace& ts,
                                                     const MenuProfile& mp,
                                                     double budget = kDefaultBudget) {
  check_sizes(ts, mp);
  const std::size_t K = ts.size();
  const auto menus = finite_plans(mp);
  std::vector<std::vector<Plan>> cand(K);
  double count = 1.0;
  for (std::size_t k = 0; k < K; ++k) {
    if (!ts.efficient(k)) {
      for (const Plan& pl : menus[k])
        if (pl.q == 0.0 && pl.p == 0.0) cand[k].push_back(pl);
    }
    if (cand[k].empty()) cand[k] = menus[k];
    count *= static_cast<double>(cand[k].size());
  }
  if (count > budget)
    fail(errc::budget_exceeded, std::to_string(count) + " candidate profiles");

  std::vector<Equilibrium> found;
  std::vector<std::size_t> idx(K, 0);
  std::vector<Plan> plans(K);
  Profile q(K);
  while (true) {
    for (std::size_t k = 0; k < K; ++k) {
      plans[k] = cand[k][idx[k]];
      q[k] = plans[k].q;
    }
    const double w = skepticism_value(ts, q);
    bool ok = true;
    for (std::size_t k = 0; k < K && ok; ++k) {
      const double base = plan_payoff(ts, k, plans[k], w);
      for (const Plan& pl : menus[k])
        if (plan_payoff(ts, k, pl, w) > base + kStrictTol) {
          ok = false;
          break;
        }
    }
    if (ok) found.push_back({plans, q, w, profile_revenue(ts, plans)});
    std::size_t k = 0;
    while (k < K && ++idx[k] == cand[k].size()) idx[k++] = 0;
    if (k == K) break;
  }
  std::sort(found.begin(), found.end(), [](const Equilibrium& a, const Equilibrium& b) {
    if (std::abs(a.revenue - b.revenue) > kStrictTol) return a.revenue < b.revenue;
    return a.q < b.q;
  });
  return found;
}

inline Equilibrium worst_case_equilibrium(const TypeSpace& ts, const MenuProfile& mp,
                                          double budget = kDefaultBudget) {
  auto eqs = enumerate_equilibria(ts, mp, budget);
  if (eqs.empty()) fail(errc::no_equilibrium, "menu profile has no pure equilibrium");
  return eqs.front();
}

inline double worst_case_revenue(const TypeSpace& ts, const MenuProfile& mp,
                                 double budget = kDefaultBudget) {
  return worst_case_equilibrium(ts, mp, budget).revenue;
}

// Lower convex hull, keeping collinear points, of the plans at or below the
// induced disclosure level.
inline Menu convexify_truncate(const Menu& m, double induced_q, double tol = 1e-12) {
  std::vector<Plan> pts = m.finite() ? m.isolated() : discretize_menu(m, 1000).isolated();
  std::vector<Plan> best;  // cheapest plan at each q
  for (const Plan& pl : pts) {
    if (pl.q > induced_q + tol) continue;
    if (!best.empty() && std::abs(best.back().q - pl.q) <= tol) continue;
    best.push_back(pl);
  }
  std::vector<Plan> hull;
  for (const Plan& pl : best) {
    while (hull.size() >= 2) {
      const Plan& a = hull[hull.size() - 2];
      const Plan& b = hull.back();
      const double cross = (b.q - a.q) * (pl.p - a.p) - (b.p - a.p) * (pl.q - a.q);
      if (cross < -tol) hull.pop_back();  // b lies strictly above chord a-pl
      else break;
    }
    hull.push_back(pl);
  }
  Menu r;
  r.plans = hull;
  return r;
}

}  // namespace rdp

#endif  // RDP_EQUILIBRIUM_HPP_
