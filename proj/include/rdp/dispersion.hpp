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

#ifndef RDP_DISPERSION_HPP_
#define RDP_DISPERSION_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "rdp/beliefs.hpp"
#include "rdp/equilibrium.hpp"
#include "rdp/errors.hpp"
#include "rdp/market.hpp"
#include "rdp/pricing.hpp"

namespace rdp {

// Finite mixture of finite menus for one type.
struct RandomMenu {
  std::vector<double> prob;
  std::vector<std::vector<Plan>> menus;
};

using RandomMenuProfile = std::vector<RandomMenu>;

namespace detail {

inline void check_random_menu(const RandomMenu& rm) {
  if (rm.prob.size() != rm.menus.size() || rm.prob.empty())
    fail(errc::invalid_config, "random menu needs one probability per realization");
  double total = 0.0;
  for (double p : rm.prob) {
    if (!(p >= 0.0)) fail(errc::invalid_config, "negative realization probability");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-9) fail(errc::invalid_config, "realization probabilities must sum to one");
  for (const auto& m : rm.menus)
    if (m.empty()) fail(errc::invalid_config, "empty menu realization");
}

// Skepticism values at which two plans of one realization tie.
inline void collect_breakpoints(const TypeSpace& ts, std::size_t k, const RandomMenu& rm,
                                double w_max, std::vector<double>& out) {
  const double s = std::max(ts.theta[k] - ts.cost, 0.0);
  for (const auto& m : rm.menus)
    for (std::size_t a = 0; a < m.size(); ++a)
      for (std::size_t b = a + 1; b < m.size(); ++b) {
        const double dq = m[a].q - m[b].q;
        if (std::abs(dq) <= 1e-15) continue;
        const double w = s - (m[a].p - m[b].p) / dq;
        if (w >= 0.0 && w <= w_max) out.push_back(w);
      }
}

// Optimal plans in one realization at w, best (ties to higher q) first.
inline std::vector<Plan> argmax_plans(const TypeSpace& ts, std::size_t k,
                                      const std::vector<Plan>& menu, double w) {
  double best = -INFINITY;
  for (const Plan& pl : menu) best = std::max(best, plan_payoff(ts, k, pl, w));
  std::vector<Plan> out;
  for (const Plan& pl : menu)
    if (plan_payoff(ts, k, pl, w) >= best - kStrictTol) out.push_back(pl);
  std::sort(out.begin(), out.end(), [](const Plan& a, const Plan& b) { return a.q > b.q; });
  return out;
}

inline std::vector<double> candidate_values(const TypeSpace& ts, const RandomMenuProfile& rmp,
                                            double w_step) {
  const double w_max = std::max(ts.theta.front() - ts.cost, 0.0);
  std::vector<double> pts{0.0, w_max};
  for (std::size_t k = 0; k < ts.size(); ++k) collect_breakpoints(ts, k, rmp[k], w_max, pts);
  if (w_step > 0.0)
    for (double w = 0.0; w < w_max; w += w_step) pts.push_back(w);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](double a, double b) { return std::abs(a - b) <= 1e-14; }),
            pts.end());
  return pts;
}

}  // namespace detail

// Expected per-realization best response at each candidate skepticism value
// (grid plus every tie point and the midpoints between them).
inline MenuProfile determinize_random_profile(const TypeSpace& ts, const RandomMenuProfile& rmp,
                                              double w_step = 1e-3) {
  if (rmp.size() != ts.size()) fail(errc::invalid_config, "one random menu per type required");
  for (const auto& rm : rmp) detail::check_random_menu(rm);
  const std::vector<double> pts = detail::candidate_values(ts, rmp, w_step);
  std::vector<double> ws = pts;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) ws.push_back(0.5 * (pts[i] + pts[i + 1]));
  MenuProfile out(ts.size());
  for (std::size_t k = 0; k < ts.size(); ++k) {
    std::vector<Plan> plans{{0.0, 0.0}};
    for (double w : ws) {
      Plan e;
      for (std::size_t r = 0; r < rmp[k].menus.size(); ++r) {
        const Plan pick = detail::argmax_plans(ts, k, rmp[k].menus[r], w).front();
        e.q += rmp[k].prob[r] * pick.q;
        e.p += rmp[k].prob[r] * pick.p;
      }
      plans.push_back(e);
    }
    out[k] = finite_menu(std::move(plans));
  }
  return out;
}

// Equilibria of a random menu profile.  At each candidate skepticism value
// every realization must pick an optimal plan; the induced expected profile
// must reproduce that value (exactly at tie points, inside the open interval
// otherwise).  Returns the revenue-minimising equilibrium.
inline Equilibrium worst_case_equilibrium_random(const TypeSpace& ts, const RandomMenuProfile& rmp,
                                                 double budget = kDefaultBudget) {
  if (rmp.size() != ts.size()) fail(errc::invalid_config, "one random menu per type required");
  for (const auto& rm : rmp) detail::check_random_menu(rm);
  const std::size_t K = ts.size();
  const std::vector<double> pts = detail::candidate_values(ts, rmp, 0.0);
  std::vector<Equilibrium> found;
  auto examine = [&](double w, double lo, double hi, bool exact) {
    // Per (type, realization) sets of optimal plans.
    std::vector<std::vector<Plan>> slots;
    std::vector<std::pair<std::size_t, double>> owner;
    double count = 1.0;
    for (std::size_t k = 0; k < K; ++k)
      for (std::size_t r = 0; r < rmp[k].menus.size(); ++r) {
        slots.push_back(detail::argmax_plans(ts, k, rmp[k].menus[r], w));
        owner.push_back({k, rmp[k].prob[r]});
        count *= static_cast<double>(slots.back().size());
      }
    if (count > budget) fail(errc::budget_exceeded, "too many tie combinations");
    std::vector<std::size_t> idx(slots.size(), 0);
    while (true) {
      std::vector<Plan> plans(K, Plan{0.0, 0.0});
      for (std::size_t s = 0; s < slots.size(); ++s) {
        plans[owner[s].first].q += owner[s].second * slots[s][idx[s]].q;
        plans[owner[s].first].p += owner[s].second * slots[s][idx[s]].p;
      }
      Profile q(K);
      for (std::size_t k = 0; k < K; ++k) q[k] = plans[k].q;
      const double v = skepticism_value(ts, q);
      const bool ok = exact ? std::abs(v - w) <= 1e-12 : (v > lo && v < hi);
      if (ok) found.push_back({plans, q, v, profile_revenue(ts, plans)});
      std::size_t s = 0;
      while (s < slots.size() && ++idx[s] == slots[s].size()) idx[s++] = 0;
      if (s == slots.size()) break;
    }
  };
  for (std::size_t i = 0; i < pts.size(); ++i) {
    examine(pts[i], pts[i], pts[i], true);
    if (i + 1 < pts.size()) examine(0.5 * (pts[i] + pts[i + 1]), pts[i], pts[i + 1], false);
  }
  if (found.empty()) fail(errc::no_equilibrium, "random menu profile has no equilibrium");
  return *std::min_element(found.begin(), found.end(), [](const auto& a, const auto& b) {
    if (std::abs(a.revenue - b.revenue) > kStrictTol) return a.revenue < b.revenue;
    return a.q < b.q;
  });
}

// Distribution of take-it-or-leave-it full-disclosure prices that implements
// the optimal menu of one type.
struct PriceDispersion {
  double gap = 0.0;        // theta^k - E[theta | theta <= theta^k]
  double share = 0.0;      // Pr(theta^k | theta <= theta^k)
  double cont_mass = 0.0;  // mass of the continuous part
  double atom_price = 0.0;
  double atom_mass = 0.0;

  double lo() const { return gap; }
  double hi() const { return cont_mass > 0.0 ? quantile(cont_mass) : atom_price; }
  // Price at which the continuous part reaches mass q.
  double quantile(double q) const { return gap / (1.0 - share * q); }

  double cdf(double p) const {
    double h = 0.0;
    if (cont_mass > 0.0 && p >= gap) h = std::min((1.0 - gap / p) / share, cont_mass);
    if (atom_mass > 0.0 && p >= atom_price) h += atom_mass;
    return std::min(h, 1.0);
  }
};

inline PriceDispersion dispersion_cdf(const TypeSpace& ts, std::size_t k) {
  if (k >= ts.size()) fail(errc::invalid_config, "type index out of range");
  PriceDispersion d;
  const double surplus = ts.theta[k] - ts.cost;
  if (surplus <= 0.0) {
    d.atom_mass = 1.0;  // never disclose: the price is irrelevant, put it at 0
    return d;
  }
  const TippingPoint tp = tipping_point(ts);
  d.gap = ts.theta[k] - mean_at_or_below(ts, k);
  d.share = share_at_or_below(ts, k);
  if (k < tp.type) {
    d.cont_mass = 1.0;
  } else if (k == tp.type) {
    d.cont_mass = tp.q;
    d.atom_price = surplus;
    d.atom_mass = 1.0 - tp.q;
  } else {
    d.atom_price = surplus;
    d.atom_mass = 1.0;
  }
  return d;
}

// Bang-bang random menus: each realization is {(0,0),(1,price)}.  The
// continuous part is cut into N quantile cells, each represented by its
// conditional mean price, so partial sums hit the optimal curve exactly.
inline RandomMenuProfile dispersion_profile(const TypeSpace& ts, std::size_t N, double eps = 0.0) {
  if (N == 0) fail(errc::invalid_config, "cell count must be positive");
  const MenuProfile opt = build_optimal_profile(ts);
  RandomMenuProfile out(ts.size());
  for (std::size_t k = 0; k < ts.size(); ++k) {
    const PriceDispersion d = dispersion_cdf(ts, k);
    RandomMenu& rm = out[k];
    if (d.cont_mass > 0.0) {
      const std::vector<double> g = unit_grid(N, d.cont_mass);
      const auto& curve = *opt[k].curve;
      for (std::size_t i = 0; i + 1 < g.size(); ++i) {
        const double m = g[i + 1] - g[i];
        const double price = (curve.price(g[i + 1]) - curve.price(g[i])) / m;
        rm.prob.push_back(m);
        rm.menus.push_back({{0.0, 0.0}, {1.0, price - eps}});
      }
    }
    if (d.atom_mass > 0.0) {
      rm.prob.push_back(d.atom_mass);
      if (ts.theta[k] - ts.cost > 0.0)
        rm.menus.push_back({{0.0, 0.0}, {1.0, d.atom_price - eps}});
      else
        rm.menus.push_back({{0.0, 0.0}});
    }
  }
  return out;
}

}  // namespace rdp

#endif  // RDP_DISPERSION_HPP_
