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

#ifndef RDP_MARKET_HPP_
#define RDP_MARKET_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "rdp/errors.hpp"
#include "rdp/numeric.hpp"

namespace rdp {

// Primitive market: payoff states, their prior, the signal the producer
// observes (rows are states, columns are labels) and the consumer's
// opportunity cost.  An empty signal means the fully revealing one.
struct MarketConfig {
  std::vector<double> states;
  std::vector<double> state_prior;
  std::vector<std::vector<double>> signal;
  double cost = 0.0;
};

// Producer types after the signal is folded into posterior means.  Types
// are sorted by strictly decreasing mean; index 0 is the highest type.
struct TypeSpace {
  std::vector<double> theta;
  std::vector<double> mu;
  double cost = 0.0;

  std::size_t size() const { return theta.size(); }
  bool efficient(std::size_t k) const { return theta[k] > cost; }
  // Number of efficient types; they occupy indices [0, efficient_count()).
  std::size_t efficient_count() const {
    std::size_t n = 0;
    while (n < theta.size() && theta[n] > cost) ++n;
    return n;
  }
};

inline void validate(const MarketConfig& cfg) {
  const std::size_t n = cfg.states.size();
  if (n == 0) fail(errc::invalid_config, "no states");
  if (cfg.state_prior.size() != n)
    fail(errc::invalid_config, "state prior length differs from states");
  double total = 0.0;
  for (double p : cfg.state_prior) {
    if (!(p > 0.0) || !std::isfinite(p))
      fail(errc::invalid_config, "state prior must be strictly positive");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-9)
    fail(errc::invalid_config, "state prior must sum to one");
  for (double s : cfg.states)
    if (!std::isfinite(s)) fail(errc::invalid_config, "non-finite state");
  if (!std::isfinite(cfg.cost)) fail(errc::invalid_config, "non-finite cost");
  if (cfg.signal.empty()) return;
  if (cfg.signal.size() != n)
    fail(errc::invalid_config, "signal needs one row per state");
  const std::size_t labels = cfg.signal.front().size();
  if (labels == 0) fail(errc::invalid_config, "signal has no labels");
  for (const auto& row : cfg.signal) {
    if (row.size() != labels) fail(errc::invalid_config, "ragged signal");
    double r = 0.0;
    for (double x : row) {
      if (!(x >= 0.0) || !std::isfinite(x))
        fail(errc::invalid_config, "signal entries must be non-negative");
      r += x;
    }
    if (std::abs(r - 1.0) > 1e-9)
      fail(errc::invalid_config, "signal rows must sum to one");
  }
}

// Sorts (mean, mass) pairs descending and merges means within kMergeTol.
// Zero-mass entries are dropped.
inline TypeSpace merge_types(std::vector<double> theta, std::vector<double> mu,
                             double cost) {
  std::vector<std::size_t> idx(theta.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return theta[a] > theta[b]; });
  TypeSpace ts;
  ts.cost = cost;
  for (std::size_t i : idx) {
    if (!(mu[i] > 0.0)) continue;
    if (!ts.theta.empty() && ts.theta.back() - theta[i] <= kMergeTol) {
      const double m = ts.mu.back() + mu[i];
      ts.theta.back() = (ts.theta.back() * ts.mu.back() + theta[i] * mu[i]) / m;
      ts.mu.back() = m;
    } else {
      ts.theta.push_back(theta[i]);
      ts.mu.push_back(mu[i]);
    }
  }
  return ts;
}

inline void check_cost_range(const TypeSpace& ts) {
  if (ts.theta.empty()) fail(errc::empty_support, "no type has positive mass");
  if (ts.cost < ts.theta.back() || ts.cost >= ts.theta.front())
    fail(errc::cost_out_of_range,
         "cost must lie in [lowest type, highest type)");
}

// Type space from explicit means and masses (normalised if needed).
inline TypeSpace make_type_space(std::vector<double> theta,
                                 std::vector<double> mu, double cost) {
  if (theta.size() != mu.size() || theta.empty())
    fail(errc::invalid_config, "type means and masses must match");
  const double total = std::accumulate(mu.begin(), mu.end(), 0.0);
  if (!(total > 0.0)) fail(errc::empty_support, "zero total mass");
  for (double& m : mu) m /= total;
  TypeSpace ts = merge_types(std::move(theta), std::move(mu), cost);
  check_cost_range(ts);
  return ts;
}

// Posterior mean and probability of every signal label, then merged.
inline TypeSpace build_type_space(const MarketConfig& cfg) {
  validate(cfg);
  const std::size_t n = cfg.states.size();
  if (cfg.signal.empty())
    return make_type_space(cfg.states, cfg.state_prior, cfg.cost);
  const std::size_t labels = cfg.signal.front().size();
  std::vector<double> theta(labels, 0.0), mu(labels, 0.0);
  for (std::size_t j = 0; j < labels; ++j) {
    double mass = 0.0, moment = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      mass += cfg.state_prior[i] * cfg.signal[i][j];
      moment += cfg.state_prior[i] * cfg.signal[i][j] * cfg.states[i];
    }
    if (!(mass > 0.0))
      fail(errc::empty_support, "signal label " + std::to_string(j) + " has zero probability");
    mu[j] = mass;
    theta[j] = moment / mass;
  }
  TypeSpace ts = merge_types(std::move(theta), std::move(mu), cfg.cost);
  check_cost_range(ts);
  return ts;
}

inline double prior_mean(const TypeSpace& ts) {
  double v = 0.0;
  for (std::size_t k = 0; k < ts.size(); ++k) v += ts.mu[k] * ts.theta[k];
  return v;
}

// Total surplus available when every efficient type trades.
inline double full_surplus(const TypeSpace& ts) {
  double r = 0.0;
  for (std::size_t k = 0; k < ts.size(); ++k)
    r += ts.mu[k] * std::max(ts.theta[k] - ts.cost, 0.0);
  return r;
}

// E[theta | theta <= theta^k] and Pr(theta^k | theta <= theta^k).
inline double mean_at_or_below(const TypeSpace& ts, std::size_t k) {
  double m = 0.0, s = 0.0;
  for (std::size_t j = k; j < ts.size(); ++j) {
    m += ts.mu[j];
    s += ts.mu[j] * ts.theta[j];
  }
  return s / m;
}

inline double share_at_or_below(const TypeSpace& ts, std::size_t k) {
  double m = 0.0;
  for (std::size_t j = k; j < ts.size(); ++j) m += ts.mu[j];
  return ts.mu[k] / m;
}

}  // namespace rdp

#endif  // RDP_MARKET_HPP_
