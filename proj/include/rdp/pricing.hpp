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

#ifndef RDP_PRICING_HPP_
#define RDP_PRICING_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "rdp/beliefs.hpp"
#include "rdp/errors.hpp"
#include "rdp/market.hpp"
#include "rdp/numeric.hpp"

namespace rdp {

struct Plan {
  double q = 0.0;
  double p = 0.0;
};

inline bool same_plan(const Plan& a, const Plan& b, double tol = 1e-12) {
  return std::abs(a.q - b.q) <= tol && std::abs(a.p - b.p) <= tol;
}

// Continuous part of a menu: price as a function of disclosure on [0, q_max].
struct PriceCurve {
  std::function<double(double)> price;
  std::function<double(double)> marginal;
  double q_max = 1.0;
};

// A menu is an optional continuum of plans plus isolated plans.  The jump
// plan, when present, sits at q = 1 and is priced relative to the end of the
// curve: curve(q_max) + (1 - q_max) * jump_slope.  `discount` is the
// perturbation eps applied on read as p - eps * q.
struct Menu {
  std::optional<PriceCurve> curve;
  std::vector<Plan> plans{{0.0, 0.0}};
  std::optional<double> jump_slope;
  double discount = 0.0;

  bool finite() const { return !curve.has_value(); }

  double curve_price(double q) const {
    return curve->price(q) - discount * q;
  }

  std::optional<Plan> jump_plan() const {
    if (!curve || !jump_slope) return std::nullopt;
    const double qm = curve->q_max;
    return Plan{1.0, curve->price(qm) + (1.0 - qm) * *jump_slope - discount};
  }

  // Isolated plans with the perturbation applied, sorted by q.
  std::vector<Plan> isolated() const {
    std::vector<Plan> out;
    for (const Plan& pl : plans) out.push_back({pl.q, pl.p - discount * pl.q});
    if (auto j = jump_plan()) out.push_back(*j);
    std::sort(out.begin(), out.end(), [](const Plan& a, const Plan& b) {
      return a.q < b.q || (a.q == b.q && a.p < b.p);
    });
    return out;
  }
};

using MenuProfile = std::vector<Menu>;

inline Menu finite_menu(std::vector<Plan> plans) {
  Menu m;
  m.plans = std::move(plans);
  std::sort(m.plans.begin(), m.plans.end(), [](const Plan& a, const Plan& b) {
    return a.q < b.q || (a.q == b.q && a.p < b.p);
  });
  m.plans.erase(std::unique(m.plans.begin(), m.plans.end(),
                            [](const Plan& a, const Plan& b) { return same_plan(a, b); }),
                m.plans.end());
  return m;
}

// Optimal price of type k at disclosure q (valid up to the tipping point).
inline double optimal_price(const TypeSpace& ts, std::size_t k, double q) {
  if (k >= ts.size()) fail(errc::invalid_config, "type index out of range");
  const TippingPoint tp = tipping_point(ts);
  if (!at_or_before(tp, k, q)) fail(errc::past_tipping_point, "beyond tipping point");
  const double gap = ts.theta[k] - mean_at_or_below(ts, k);
  if (gap <= 0.0 || q <= 0.0) return 0.0;
  const double share = share_at_or_below(ts, k);
  return -(gap / share) * std::log1p(-share * q);
}

inline double optimal_marginal_price(const TypeSpace& ts, std::size_t k, double q) {
  const double gap = ts.theta[k] - mean_at_or_below(ts, k);
  if (gap <= 0.0) return 0.0;
  return gap / (1.0 - share_at_or_below(ts, k) * q);
}

inline double producer_rent(const TypeSpace& ts, std::size_t k, double q) {
  return q * (ts.theta[k] - ts.cost) - optimal_price(ts, k, q);
}

inline PriceCurve optimal_curve(const TypeSpace& ts, std::size_t k, double q_max) {
  const double gap = std::max(ts.theta[k] - mean_at_or_below(ts, k), 0.0);
  const double share = share_at_or_below(ts, k);
  PriceCurve c;
  c.q_max = q_max;
  c.price = [gap, share](double q) {
    return q <= 0.0 || gap == 0.0 ? 0.0 : -(gap / share) * std::log1p(-share * q);
  };
  c.marginal = [gap, share](double q) { return gap / (1.0 - share * q); };
  return c;
}

inline Menu bang_bang_menu(double top_price) {
  return finite_menu({{0.0, 0.0}, {1.0, top_price}});
}

// Revenue-maximising robust menu profile.
inline MenuProfile build_optimal_profile(const TypeSpace& ts) {
  const TippingPoint tp = tipping_point(ts);
  MenuProfile mp(ts.size());
  for (std::size_t k = 0; k < ts.size(); ++k) {
    const double surplus = ts.theta[k] - ts.cost;
    if (surplus <= 0.0) {
      mp[k] = finite_menu({{0.0, 0.0}});
    } else if (k < tp.type) {
      mp[k].curve = optimal_curve(ts, k, 1.0);
    } else if (k == tp.type) {
      if (tp.q <= 0.0) {
        mp[k] = bang_bang_menu(surplus);
      } else {
        mp[k].curve = optimal_curve(ts, k, tp.q);
        if (tp.q < 1.0) mp[k].jump_slope = surplus;
      }
    } else {
      mp[k] = bang_bang_menu(surplus);
    }
  }
  return mp;
}

// Take-it-or-leave-it full disclosure at the full surplus.
inline MenuProfile build_benchmark_profile(const TypeSpace& ts) {
  MenuProfile mp(ts.size());
  for (std::size_t k = 0; k < ts.size(); ++k) {
    const double surplus = ts.theta[k] - ts.cost;
    mp[k] = surplus > 0.0 ? bang_bang_menu(surplus) : finite_menu({{0.0, 0.0}});
  }
  return mp;
}

inline void require_binary(const TypeSpace& ts) {
  if (ts.size() != 2) fail(errc::not_binary, "binary construction needs two types");
}

// Binary closed form: p(q) = -((theta_hi - E theta) / mu_hi) ln(1 - mu_hi q).
inline MenuProfile build_binary_profile(const TypeSpace& ts) {
  require_binary(ts);
  const double gap = ts.theta[0] - prior_mean(ts);
  const double mu_hi = ts.mu[0];
  MenuProfile mp(2);
  PriceCurve c;
  c.price = [gap, mu_hi](double q) { return -(gap / mu_hi) * std::log1p(-mu_hi * q); };
  c.marginal = [gap, mu_hi](double q) { return gap / (1.0 - mu_hi * q); };
  c.q_max = 1.0;
  if (ts.theta[0] - ts.cost > 0.0 && prior_mean(ts) > ts.cost) {
    const TippingPoint tp = tipping_point(ts);
    if (tp.type == 0) {
      c.q_max = tp.q;
      mp[0].curve = c;
      if (tp.q < 1.0) mp[0].jump_slope = ts.theta[0] - ts.cost;
    } else {
      mp[0].curve = c;
    }
  } else {
    mp[0] = bang_bang_menu(ts.theta[0] - ts.cost);
  }
  mp[1] = ts.theta[1] > ts.cost ? bang_bang_menu(ts.theta[1] - ts.cost)
                                : finite_menu({{0.0, 0.0}});
  return mp;
}

// Two-plan binary menu: full disclosure at prior-skepticism marginal price.
inline MenuProfile build_binary_two_plan(const TypeSpace& ts, double eps) {
  require_binary(ts);
  const double gain = ts.theta[0] - ts.cost - staircase_value(ts, 0, 0.0);
  return {finite_menu({{0.0, 0.0}, {1.0, gain - eps}}), finite_menu({{0.0, 0.0}})};
}

// Three-plan binary menu with an intermediate half-disclosure plan.
inline MenuProfile build_binary_three_plan(const TypeSpace& ts, double eps) {
  require_binary(ts);
  const double s = ts.theta[0] - ts.cost;
  const double half = 0.5 * (s - staircase_value(ts, 0, 0.0));
  const double full = half + 0.5 * (s - staircase_value(ts, 0, 0.5));
  return {finite_menu({{0.0, 0.0}, {0.5, half - 0.5 * eps}, {1.0, full - eps}}),
          finite_menu({{0.0, 0.0}})};
}

// Full-information surplus less the rents the tipping structure leaves.
inline double mrg_closed_form(const TypeSpace& ts) {
  const TippingPoint tp = tipping_point(ts);
  double r = full_surplus(ts);
  for (std::size_t k = 0; k < tp.type; ++k) r -= ts.mu[k] * producer_rent(ts, k, 1.0);
  if (tp.q > 0.0) r -= ts.mu[tp.type] * producer_rent(ts, tp.type, tp.q);
  return r;
}

// Menu price at q for a finite or continuous menu, or nullopt if q is not
// offered.
inline std::optional<double> menu_price(const Menu& m, double q, double tol = 1e-12) {
  if (m.curve && q >= -tol && q <= m.curve->q_max + tol) return m.curve_price(q);
  for (const Plan& pl : m.isolated())
    if (std::abs(pl.q - q) <= tol) return pl.p;
  return std::nullopt;
}

// p -> p - eps q on every plan.
inline MenuProfile perturb_profile(const MenuProfile& mp, double eps) {
  if (eps < 0.0) fail(errc::invalid_config, "epsilon must be non-negative");
  MenuProfile out = mp;
  for (Menu& m : out) {
    if (m.curve && m.curve->q_max > 0.0) {
      const double min_marginal = m.curve->marginal(0.0) - m.discount;
      if (eps > 0.0 && eps >= min_marginal)
        fail(errc::epsilon_too_large, "epsilon exceeds the smallest marginal price");
    }
    for (const Plan& pl : m.isolated())
      if (pl.q > 0.0 && pl.p - eps * pl.q < 0.0)
        fail(errc::epsilon_too_large, "perturbed price would be negative");
    m.discount += eps;
  }
  return out;
}

enum class Discretization {
  sample,     // points on the curve
  staircase,  // left-Riemann sums of the marginal price
};

// Finite menu from a continuous one on the grid {0, 1/n, ...} up to q_max
// (q_max always included).  Isolated plans are kept; the jump plan is
// re-anchored to the discretized price at q_max under the staircase rule.
inline Menu discretize_menu(const Menu& m, std::size_t n,
                            Discretization rule = Discretization::staircase) {
  if (n == 0) fail(errc::invalid_config, "grid size must be positive");
  if (m.finite()) return finite_menu(m.isolated());
  const PriceCurve& c = *m.curve;
  const std::vector<double> g = unit_grid(n, c.q_max);
  std::vector<Plan> pts;
  std::vector<double> raw(g.size(), 0.0);
  raw[0] = c.price(g[0]);
  for (std::size_t i = 1; i < g.size(); ++i)
    raw[i] = rule == Discretization::sample
                 ? c.price(g[i])
                 : raw[i - 1] + (g[i] - g[i - 1]) * c.marginal(g[i - 1]);
  for (std::size_t i = 0; i < g.size(); ++i) pts.push_back({g[i], raw[i] - m.discount * g[i]});
  for (const Plan& pl : m.plans) pts.push_back({pl.q, pl.p - m.discount * pl.q});
  if (m.jump_slope) {
    const double end = rule == Discretization::sample ? c.price(c.q_max) : raw.back();
    pts.push_back({1.0, end + (1.0 - c.q_max) * *m.jump_slope - m.discount});
  }
  return finite_menu(std::move(pts));
}

inline MenuProfile discretize_profile(const MenuProfile& mp, std::size_t n,
                                      Discretization rule = Discretization::staircase) {
  MenuProfile out;
  out.reserve(mp.size());
  for (const Menu& m : mp) out.push_back(discretize_menu(m, n, rule));
  return out;
}

// The verification pipeline: optimal profile, eps-perturbed, on an n-grid.
inline MenuProfile eps_optimal_profile(const TypeSpace& ts, double eps, std::size_t n) {
  MenuProfile mp = build_optimal_profile(ts);
  if (eps > 0.0) mp = perturb_profile(mp, eps);
  return discretize_profile(mp, n, Discretization::staircase);
}

}  // namespace rdp

#endif  // RDP_PRICING_HPP_
