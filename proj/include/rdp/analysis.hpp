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

#ifndef RDP_ANALYSIS_HPP_
#define RDP_ANALYSIS_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "rdp/beliefs.hpp"
#include "rdp/errors.hpp"
#include "rdp/market.hpp"
#include "rdp/numeric.hpp"
#include "rdp/pricing.hpp"

namespace rdp {

struct MarketPowerReport {
  double cost = 0.0;
  double full_surplus = 0.0;  // R-bar
  double guarantee = 0.0;     // R*
  double pss = 0.0;           // platform surplus share R*/R-bar
  double mk = 0.0;            // consumer's market power max(v0 - c, 0)
  double cte = 0.0;           // (R-bar - MK)/R-bar
};

inline MarketPowerReport market_power(const TypeSpace& ts) {
  MarketPowerReport r;
  r.cost = ts.cost;
  r.full_surplus = full_surplus(ts);
  r.guarantee = mrg_closed_form(ts);
  r.mk = std::max(prior_mean(ts) - ts.cost, 0.0);
  if (r.full_surplus > 0.0) {
    r.pss = r.guarantee / r.full_surplus;
    r.cte = (r.full_surplus - r.mk) / r.full_surplus;
  }
  return r;
}

struct CostSweep {
  std::vector<MarketPowerReport> points;
  bool pss_increasing = true;
  bool cte_increasing = true;
  bool mk_decreasing = true;
};

inline TypeSpace with_cost(const TypeSpace& ts, double c) {
  TypeSpace out = ts;
  out.cost = c;
  check_cost_range(out);
  return out;
}

inline CostSweep sweep_cost(const TypeSpace& ts, const std::vector<double>& c_grid,
                            double tol = 1e-9) {
  const double v0 = prior_mean(ts);
  for (std::size_t i = 0; i < c_grid.size(); ++i) {
    if (!(c_grid[i] > ts.theta.back() && c_grid[i] < v0 - kMergeTol))
      fail(errc::grid_out_of_range, "cost grid must lie in (lowest type, prior mean)");
    if (i > 0 && !(c_grid[i] > c_grid[i - 1]))
      fail(errc::grid_out_of_range, "cost grid must be strictly increasing");
  }
  CostSweep s;
  for (double c : c_grid) s.points.push_back(market_power(with_cost(ts, c)));
  for (std::size_t i = 1; i < s.points.size(); ++i) {
    const auto& a = s.points[i - 1];
    const auto& b = s.points[i];
    s.pss_increasing = s.pss_increasing && b.pss - a.pss > tol;
    s.cte_increasing = s.cte_increasing && b.cte - a.cte > tol;
    s.mk_decreasing = s.mk_decreasing && a.mk - b.mk > tol;
  }
  return s;
}

// R* on a type space whose lone surviving type leaves nothing to price.
inline double guarantee_or_zero(const TypeSpace& ts) {
  if (ts.size() <= 1 || ts.cost >= ts.theta.front()) return 0.0;
  return mrg_closed_form(ts);
}

struct DegenerateSeries {
  std::vector<double> guarantee;
  bool final_below_tenth = false;
  bool tail_monotone = false;
};

// R* along a sequence of priors on fixed type means.  Zero-weight types are
// dropped before the rebuild.
inline DegenerateSeries degenerate_limit(const TypeSpace& ts, std::size_t k0,
                                         const std::vector<std::vector<double>>& weights) {
  if (k0 >= ts.size()) fail(errc::invalid_config, "k0 out of range");
  DegenerateSeries out;
  for (const auto& w : weights) {
    if (w.size() != ts.size()) fail(errc::invalid_config, "prior length differs from types");
    TypeSpace t = merge_types(ts.theta, w, ts.cost);
    double total = 0.0;
    for (double m : t.mu) total += m;
    for (double& m : t.mu) m /= total;
    if (t.size() > 1) check_cost_range(t);
    out.guarantee.push_back(guarantee_or_zero(t));
  }
  if (!out.guarantee.empty()) {
    out.final_below_tenth = out.guarantee.back() < out.guarantee.front() / 10.0;
    const std::size_t start = out.guarantee.size() / 2;
    out.tail_monotone = true;
    for (std::size_t i = start + 1; i < out.guarantee.size(); ++i)
      out.tail_monotone = out.tail_monotone && out.guarantee[i] <= out.guarantee[i - 1] + 1e-12;
  }
  return out;
}

struct BlackwellResult {
  double fine = 0.0;
  double coarse = 0.0;
  bool verdict = false;
};

// Signal of the garbled structure: fine signal followed by the garbling.
inline MarketConfig garble(const MarketConfig& fine,
                           const std::vector<std::vector<double>>& garbling) {
  validate(fine);
  const std::size_t n = fine.states.size();
  std::vector<std::vector<double>> sig = fine.signal;
  if (sig.empty()) {
    sig.assign(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) sig[i][i] = 1.0;
  }
  const std::size_t labels = sig.front().size();
  if (garbling.size() != labels || garbling.empty())
    fail(errc::invalid_garbling, "garbling needs one row per fine label");
  const std::size_t out_labels = garbling.front().size();
  for (const auto& row : garbling) {
    double t = 0.0;
    if (row.size() != out_labels || out_labels == 0) fail(errc::invalid_garbling, "ragged garbling");
    for (double x : row) {
      if (!(x >= 0.0)) fail(errc::invalid_garbling, "negative garbling entry");
      t += x;
    }
    if (std::abs(t - 1.0) > 1e-9) fail(errc::invalid_garbling, "garbling rows must sum to one");
  }
  MarketConfig coarse = fine;
  coarse.signal.assign(n, std::vector<double>(out_labels, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < labels; ++j)
      for (std::size_t l = 0; l < out_labels; ++l)
        coarse.signal[i][l] += sig[i][j] * garbling[j][l];
  return coarse;
}

// R* of a market, allowing the degenerate cases a garbling can produce.
inline double guarantee_of(const MarketConfig& cfg) {
  validate(cfg);
  const MarketConfig& c = cfg;
  std::vector<double> theta, mu;
  const std::size_t n = c.states.size();
  if (c.signal.empty()) {
    theta = c.states;
    mu = c.state_prior;
  } else {
    for (std::size_t j = 0; j < c.signal.front().size(); ++j) {
      double m = 0.0, s = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        m += c.state_prior[i] * c.signal[i][j];
        s += c.state_prior[i] * c.signal[i][j] * c.states[i];
      }
      mu.push_back(m);
      theta.push_back(m > 0.0 ? s / m : 0.0);
    }
  }
  TypeSpace ts = merge_types(theta, mu, c.cost);
  if (ts.size() <= 1 || ts.cost >= ts.theta.front()) return 0.0;
  if (ts.cost < ts.theta.back()) {
    // Every type is efficient and skepticism never reaches zero: the
    // sequential path runs through all types, the last stride earning nothing.
    double r = 0.0;
    Profile base(ts.size(), 0.0);
    for (std::size_t k = 0; k < ts.size(); ++k) {
      r += ts.mu[k] * (ts.theta[k] - ts.cost - stride_value_integral(ts, base, k, 0.0, 1.0));
      base[k] = 1.0;
    }
    return r;
  }
  return mrg_closed_form(ts);
}

inline BlackwellResult blackwell_compare(const MarketConfig& fine,
                                         const std::vector<std::vector<double>>& garbling) {
  const MarketConfig coarse = garble(fine, garbling);
  BlackwellResult r;
  r.fine = guarantee_of(fine);
  r.coarse = guarantee_of(coarse);
  r.verdict = r.fine >= r.coarse - 1e-12;
  return r;
}

struct SurplusEntry {
  double theta = 0.0;
  double surplus = 0.0;       // W(theta^k) = int_0^1 w_k(q) dq
  double upper = 0.0;         // E[theta | theta <= theta^k] - c
  double lower = 0.0;         // E[theta | theta <= theta^{k+1}] - c
  bool bounds_apply = false;  // strictly above the tipping type
  bool bounds_hold = true;
};

struct SurplusReport {
  std::vector<SurplusEntry> types;
  double accounting_gap = 0.0;  // R* + sum mu W - R-bar
};

inline SurplusReport producer_surplus(const TypeSpace& ts) {
  const TippingPoint tp = tipping_point(ts);
  SurplusReport rep;
  double weighted = 0.0;
  for (std::size_t k = 0; k < ts.size(); ++k) {
    SurplusEntry e;
    e.theta = ts.theta[k];
    if (ts.efficient(k) && k <= tp.type) {
      const double q_end = k < tp.type ? 1.0 : tp.q;
      auto wk = [&](double q) { return staircase_value(ts, k, q); };
      e.surplus = integrate(wk, 0.0, q_end);
    }
    e.upper = mean_at_or_below(ts, k) - ts.cost;
    e.lower = k + 1 < ts.size() ? mean_at_or_below(ts, k + 1) - ts.cost : -INFINITY;
    if (k < tp.type && ts.efficient(k)) {
      e.bounds_apply = true;
      e.bounds_hold = e.upper > e.surplus && e.surplus > e.lower;
    } else if (k == tp.type && ts.efficient(k)) {
      e.bounds_hold = e.surplus <= e.upper + 1e-12;
    }
    weighted += ts.mu[k] * e.surplus;
    rep.types.push_back(e);
  }
  rep.accounting_gap = mrg_closed_form(ts) + weighted - full_surplus(ts);
  return rep;
}

}  // namespace rdp

#endif  // RDP_ANALYSIS_HPP_
