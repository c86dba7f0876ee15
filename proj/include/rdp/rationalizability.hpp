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

#ifndef RDP_RATIONALIZABILITY_HPP_
#define RDP_RATIONALIZABILITY_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <vector>

#include "rdp/beliefs.hpp"
#include "rdp/equilibrium.hpp"
#include "rdp/errors.hpp"
#include "rdp/market.hpp"
#include "rdp/pricing.hpp"

namespace rdp {

// Ex-ante producer payoff of a plan profile when the consumer's posterior
// mean after non-disclosure is v.
inline double ex_ante_payoff(const TypeSpace& ts, const std::vector<Plan>& r, double v) {
  const double w = std::max(v - ts.cost, 0.0);
  double u = 0.0;
  for (std::size_t k = 0; k < ts.size(); ++k) u += ts.mu[k] * plan_payoff(ts, k, r[k], w);
  return u;
}

// Direct check: some rival beats the candidate at every consumer mean.
inline bool is_strictly_dominated(const TypeSpace& ts, const std::vector<Plan>& candidate,
                                  const std::vector<std::vector<Plan>>& rivals,
                                  const std::vector<double>& consumer_means) {
  for (const auto& r : rivals) {
    bool all = !consumer_means.empty();
    for (double v : consumer_means)
      if (!(ex_ante_payoff(ts, r, v) > ex_ante_payoff(ts, candidate, v) + kStrictTol)) {
        all = false;
        break;
      }
    if (all) return true;
  }
  return false;
}

enum class ProducerSpace {
  threshold,  // profiles (full, ..., full, any plan, zero, ..., zero)
  full,       // product of all menus
};

struct DeletionRound {
  std::size_t round = 0;
  std::size_t producer_count = 0;
  std::size_t consumer_count = 0;  // 0 while the consumer set is an interval
  double mean_lo = 0.0;
  double mean_hi = 0.0;
};

struct DeletionResult {
  std::vector<std::vector<Plan>> producer;  // surviving plan profiles
  std::vector<double> consumer_means;       // surviving posterior means
  std::size_t rounds = 0;                   // rounds that deleted something
  double round_bound = 0.0;
  bool converged = false;  // false when max_rounds ran out first
  std::vector<DeletionRound> trace;
};

// ceil(L / delta) + 4 where delta = 2 eps / max p'' before the tipping point
// and L is the sequential path length to the tipping point.
inline double deletion_round_bound(const TypeSpace& ts, double eps) {
  const TippingPoint tp = tipping_point(ts);
  const std::size_t E = ts.efficient_count();
  double max_pp = 0.0;
  for (std::size_t k = 0; k <= tp.type && k < E; ++k) {
    const double qe = k < tp.type ? 1.0 : tp.q;
    const double gap = ts.theta[k] - mean_at_or_below(ts, k);
    const double share = share_at_or_below(ts, k);
    if (gap > 0.0 && qe > 0.0)
      max_pp = std::max(max_pp, gap * share / std::pow(1.0 - share * qe, 2));
  }
  const double L = std::min(static_cast<double>(tp.type) + tp.q, static_cast<double>(E));
  if (max_pp <= 0.0 || eps <= 0.0) return 4.0;
  return std::ceil(L * max_pp / (2.0 * eps)) + 4.0;
}

namespace detail {

inline void check_deletion_assumption(const TypeSpace& ts,
                                      const std::vector<std::vector<Plan>>& menus) {
  for (std::size_t k = 0; k < ts.size(); ++k) {
    if (std::abs(ts.theta[k] - ts.cost) > kMergeTol) continue;
    for (const Plan& pl : menus[k])
      if (pl.q != 0.0 || pl.p != 0.0)
        fail(errc::assumption_violated, "a type at the cost is offered a non-trivial plan");
  }
}

inline std::vector<std::vector<Plan>> initial_profiles(const TypeSpace& ts,
                                                       const std::vector<std::vector<Plan>>& menus,
                                                       ProducerSpace space, double budget) {
  const std::size_t K = ts.size();
  std::vector<std::vector<Plan>> out;
  if (space == ProducerSpace::full) {
    double count = 1.0;
    for (const auto& m : menus) count *= static_cast<double>(m.size());
    if (count > budget) fail(errc::budget_exceeded, "producer product space too large");
    std::vector<std::size_t> idx(K, 0);
    while (true) {
      std::vector<Plan> r(K);
      for (std::size_t k = 0; k < K; ++k) r[k] = menus[k][idx[k]];
      out.push_back(std::move(r));
      std::size_t k = 0;
      while (k < K && ++idx[k] == menus[k].size()) idx[k++] = 0;
      if (k == K) break;
    }
    return out;
  }
  const std::size_t E = ts.efficient_count();
  std::vector<Plan> full(K, Plan{0.0, 0.0}), zero(K, Plan{0.0, 0.0});
  for (std::size_t k = 0; k < K; ++k) {
    bool has_zero = false, has_full = false;
    for (const Plan& pl : menus[k]) {
      has_zero = has_zero || (pl.q == 0.0 && pl.p == 0.0);
      if (pl.q == 1.0 && (!has_full || pl.p < full[k].p)) {
        full[k] = pl;
        has_full = true;
      }
    }
    if (!has_zero) fail(errc::invalid_config, "threshold space needs a (0,0) plan in every menu");
    if (k < E && !has_full) fail(errc::invalid_config, "threshold space needs a full-disclosure plan");
  }
  for (std::size_t j = 0; j < E; ++j) {
    for (const Plan& pl : menus[j]) {
      if (j > 0 && pl.q == 0.0 && pl.p == 0.0) continue;  // same as previous threshold's end
      std::vector<Plan> r = zero;
      for (std::size_t i = 0; i < j; ++i) r[i] = full[i];
      r[j] = pl;
      out.push_back(std::move(r));
    }
  }
  if (E == 0) out.push_back(zero);
  return out;
}

}  // namespace detail

// Iterated strict dominance between producer plan profiles and consumer
// posterior means, run until neither set changes.
inline DeletionResult iterate_deletion(const TypeSpace& ts, const MenuProfile& mp, double eps,
                                       ProducerSpace space = ProducerSpace::threshold,
                                       std::size_t max_rounds = 100000,
                                       double budget = kDefaultBudget) {
  check_sizes(ts, mp);
  const auto menus = finite_plans(mp);
  detail::check_deletion_assumption(ts, menus);
  std::vector<std::vector<Plan>> P = detail::initial_profiles(ts, menus, space, budget);
  const std::size_t N = P.size();
  std::vector<double> A(N), B(N), mean(N);
  for (std::size_t i = 0; i < N; ++i) {
    Profile q(ts.size());
    double a = 0.0, b = 0.0;
    for (std::size_t k = 0; k < ts.size(); ++k) {
      q[k] = P[i][k].q;
      a += ts.mu[k] * (q[k] * std::max(ts.theta[k] - ts.cost, 0.0) - P[i][k].p);
      b += ts.mu[k] * (1.0 - q[k]);
    }
    A[i] = a;
    B[i] = b;
    mean[i] = skepticism_mean(ts, q);
  }
  std::vector<std::size_t> alive(N);
  std::iota(alive.begin(), alive.end(), 0);
  bool interval = true;
  double lo = ts.theta.back(), hi = ts.theta.front();
  std::vector<double> C;  // sorted distinct means once no longer an interval

  DeletionResult res;
  res.round_bound = deletion_round_bound(ts, eps);
  res.trace.push_back({0, alive.size(), 0, lo, hi});
  for (std::size_t round = 1; round <= max_rounds; ++round) {
    const double wlo = std::max(lo - ts.cost, 0.0), whi = std::max(hi - ts.cost, 0.0);
    // Producer deletion: affine payoffs in w, so compare at both ends.
    std::vector<std::size_t> order = alive;
    auto x = [&](std::size_t i) { return A[i] + B[i] * wlo; };
    auto y = [&](std::size_t i) { return A[i] + B[i] * whi; };
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return x(a) > x(b); });
    std::vector<std::size_t> keep;
    double best_y = -INFINITY;
    std::size_t j = 0;
    for (std::size_t i : order) {
      while (j < order.size() && x(order[j]) > x(i) + kStrictTol) best_y = std::max(best_y, y(order[j++]));
      if (!(best_y > y(i) + kStrictTol)) keep.push_back(i);
    }
    std::sort(keep.begin(), keep.end());
    // Consumer deletion: means induced by last round's producer survivors.
    std::vector<double> induced;
    for (std::size_t i : alive) induced.push_back(mean[i]);
    std::sort(induced.begin(), induced.end());
    std::vector<double> nextC;
    for (double v : induced) {
      if (!nextC.empty() && v - nextC.back() <= kStrictTol) continue;
      bool inside = interval ? (v >= lo - kStrictTol && v <= hi + kStrictTol)
                             : std::any_of(C.begin(), C.end(),
                                           [&](double c) { return std::abs(c - v) <= kStrictTol; });
      if (inside) nextC.push_back(v);
    }
    const bool changed = keep.size() != alive.size() || interval || nextC.size() != C.size();
    if (!changed) {
      res.converged = true;
      break;
    }
    alive = std::move(keep);
    interval = false;
    C = std::move(nextC);
    lo = C.front();
    hi = C.back();
    res.rounds = round;
    res.trace.push_back({round, alive.size(), C.size(), lo, hi});
  }
  for (std::size_t i : alive) res.producer.push_back(P[i]);
  res.consumer_means = C;
  return res;
}

}  // namespace rdp

#endif  // RDP_RATIONALIZABILITY_HPP_
