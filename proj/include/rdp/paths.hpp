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

#ifndef RDP_PATHS_HPP_
#define RDP_PATHS_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "rdp/beliefs.hpp"
#include "rdp/equilibrium.hpp"
#include "rdp/errors.hpp"
#include "rdp/market.hpp"
#include "rdp/numeric.hpp"
#include "rdp/pricing.hpp"

namespace rdp {

// One stride of an alternating path: type `type` moves from `from` to `to`
// while every other coordinate stays put.
struct PathStep {
  std::size_t type = 0;
  double from = 0.0;
  double to = 0.0;
};

// Path starting from zero disclosure.
struct AlternatingPath {
  std::size_t dimension = 0;
  std::vector<PathStep> steps;

  Profile start_of(std::size_t t) const {
    Profile q(dimension, 0.0);
    for (std::size_t s = 0; s < t; ++s) q[steps[s].type] = steps[s].to;
    return q;
  }
  Profile end() const { return start_of(steps.size()); }
};

inline void check_path(const TypeSpace& ts, const AlternatingPath& path) {
  if (path.dimension != ts.size()) fail(errc::invalid_config, "path dimension mismatch");
  Profile q(ts.size(), 0.0);
  for (const PathStep& s : path.steps) {
    if (s.type >= ts.size()) fail(errc::invalid_config, "path type out of range");
    if (std::abs(q[s.type] - s.from) > 1e-12 || !(s.to > s.from) || s.to > 1.0 + 1e-12)
      fail(errc::invalid_config, "path strides must continue and increase");
    q[s.type] = s.to;
  }
}

// Disclose types one at a time, highest first, up to `end`.
inline AlternatingPath sequential_path(const TypeSpace& ts, const Profile& end) {
  AlternatingPath path{ts.size(), {}};
  for (std::size_t k = 0; k < ts.size(); ++k)
    if (end[k] > 0.0) path.steps.push_back({k, 0.0, end[k]});
  return path;
}

// Sequential path to full disclosure by every efficient type.
inline AlternatingPath sequential_path(const TypeSpace& ts) {
  Profile end(ts.size(), 0.0);
  for (std::size_t k = 0; k < ts.efficient_count(); ++k) end[k] = 1.0;
  return sequential_path(ts, end);
}

inline double path_mass(const TypeSpace& ts, const AlternatingPath& path) {
  double m = 0.0;
  for (const PathStep& s : path.steps) m += ts.mu[s.type] * (s.to - s.from);
  return m;
}

// Profile reached after disclosing mass Q along the path; at a stride
// boundary this is the end-of-stride profile.
inline Profile quantile_profile(const TypeSpace& ts, const AlternatingPath& path, double Q) {
  check_path(ts, path);
  const double total = path_mass(ts, path);
  if (Q < -1e-15 || Q > total + 1e-12)
    fail(errc::quantile_out_of_range, "quantile outside [0, path mass]");
  Profile q(ts.size(), 0.0);
  double used = 0.0;
  for (const PathStep& s : path.steps) {
    const double m = ts.mu[s.type] * (s.to - s.from);
    if (Q <= used + m + 1e-15) {
      q[s.type] = std::min(s.to, s.from + std::max(Q - used, 0.0) / ts.mu[s.type]);
      if (Q >= used + m - 1e-15) q[s.type] = s.to;
      return q;
    }
    q[s.type] = s.to;
    used += m;
  }
  return q;
}

inline double quantile_skepticism(const TypeSpace& ts, const AlternatingPath& path, double Q) {
  return skepticism_mean(ts, quantile_profile(ts, path, Q));
}

// Lowest posterior mean any disclosure of mass Q can leave behind: remove the
// highest values first.
inline double pointwise_lower_bound(const std::vector<double>& values,
                                    const std::vector<double>& masses, double Q) {
  if (!(Q >= 0.0 && Q < 1.0)) fail(errc::quantile_out_of_range, "quantile must lie in [0,1)");
  std::vector<std::size_t> idx(values.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return values[a] > values[b]; });
  double left = Q, s = 0.0;
  for (std::size_t i : idx) {
    const double removed = std::min(left, masses[i]);
    left -= removed;
    s += (masses[i] - removed) * values[i];
  }
  return s / (1.0 - Q);
}

inline double pointwise_lower_bound(const TypeSpace& ts, double Q) {
  return pointwise_lower_bound(ts.theta, ts.mu, Q);
}

// Revenue bound of a path: sum of stride integrals of theta - c - w.
struct PathBound {
  double stride_sum = 0.0;  // sum_t mu^{k_t} int (theta^{k_t} - c - w)
  double quantile_form = 0.0;  // covered surplus less int w(q_Q) dQ
};

inline PathBound path_revenue_bound_detail(const TypeSpace& ts, const AlternatingPath& path) {
  check_path(ts, path);
  PathBound b;
  std::vector<double> breaks;
  double used = 0.0;
  for (std::size_t t = 0; t < path.steps.size(); ++t) {
    const PathStep& s = path.steps[t];
    if (ts.theta[s.type] < ts.cost)
      fail(errc::inefficient_direction, "stride on type " + std::to_string(s.type));
    const Profile base = path.start_of(t);
    const double len = s.to - s.from;
    b.stride_sum += ts.mu[s.type] *
        (len * (ts.theta[s.type] - ts.cost) - stride_value_integral(ts, base, s.type, s.from, s.to));
    used += ts.mu[s.type] * len;
    breaks.push_back(used);
  }
  const Profile end = path.end();
  double covered = 0.0;
  for (std::size_t k = 0; k < ts.size(); ++k)
    covered += ts.mu[k] * end[k] * std::max(ts.theta[k] - ts.cost, 0.0);
  auto wq = [&](double Q) {
    return std::max(quantile_skepticism(ts, path, std::min(Q, used)) - ts.cost, 0.0);
  };
  b.quantile_form = covered - integrate_piecewise(wq, 0.0, used, breaks, 1e-11);
  return b;
}

inline double path_revenue_bound(const TypeSpace& ts, const AlternatingPath& path) {
  return path_revenue_bound_detail(ts, path).stride_sum;
}

// Swap strides t and t+1 when a lower type moves just before a higher one.
inline AlternatingPath exchange_improve(const TypeSpace& ts, const AlternatingPath& path,
                                        std::size_t t) {
  check_path(ts, path);
  if (t + 1 >= path.steps.size()) fail(errc::not_exchangeable, "no stride after t");
  const PathStep a = path.steps[t], b = path.steps[t + 1];
  if (!(a.type > b.type)) fail(errc::not_exchangeable, "stride t is not the lower type");
  AlternatingPath out = path;
  out.steps[t] = b;
  out.steps[t + 1] = a;
  return out;
}

// Greedy upward path through the truncated convex hulls of a finite menu
// profile towards the worst-case equilibrium disclosure.
inline AlternatingPath find_path(const TypeSpace& ts, const MenuProfile& mp,
                                 const Equilibrium& target, std::size_t max_steps = 100000) {
  check_sizes(ts, mp);
  const std::size_t K = ts.size();
  std::vector<std::vector<Plan>> hull(K);
  for (std::size_t k = 0; k < K; ++k) {
    hull[k] = convexify_truncate(mp[k], target.q[k]).isolated();
    if (hull[k].empty() || hull[k].front().q != 0.0)
      fail(errc::stuck, "menu of type " + std::to_string(k) + " lacks a zero-disclosure plan");
  }
  std::vector<std::size_t> pos(K, 0);
  auto revenue = [&] {
    double r = 0.0;
    for (std::size_t k = 0; k < K; ++k) r += ts.mu[k] * hull[k][pos[k]].p;
    return r;
  };
  auto profile = [&] {
    Profile q(K);
    for (std::size_t k = 0; k < K; ++k) q[k] = hull[k][pos[k]].q;
    return q;
  };
  // Moving type k one vertex up is strictly profitable at the current profile.
  auto gains = [&](std::size_t k, const Profile& q) {
    if (pos[k] + 1 >= hull[k].size()) return false;
    const Plan& a = hull[k][pos[k]];
    const Plan& b = hull[k][pos[k] + 1];
    const double w = skepticism_value(ts, q);
    return (b.q - a.q) * (ts.theta[k] - ts.cost - w) - (b.p - a.p) > kStrictTol;
  };
  AlternatingPath path{K, {}};
  for (std::size_t iter = 0; iter < max_steps; ++iter) {
    if (std::abs(revenue() - target.revenue) <= 1e-9) return path;
    Profile q = profile();
    std::size_t k = K;
    for (std::size_t j = 0; j < K && k == K; ++j)
      if (gains(j, q)) k = j;
    if (k == K)
      fail(errc::stuck, "no type gains from moving up at step " + std::to_string(path.steps.size()));
    const double from = q[k];
    while (gains(k, q)) {
      ++pos[k];
      q[k] = hull[k][pos[k]].q;
    }
    path.steps.push_back({k, from, q[k]});
  }
  fail(errc::stuck, "step limit reached");
}

// Every alternating path over efficient types whose coordinates move on the
// grid {0, 1/units, ..., 1}; consecutive strides differ in type.
inline std::vector<AlternatingPath> enumerate_stride_paths(const TypeSpace& ts,
                                                           std::size_t units = 4) {
  const std::size_t E = ts.efficient_count();
  std::vector<AlternatingPath> out;
  std::vector<std::size_t> level(ts.size(), 0);
  AlternatingPath cur{ts.size(), {}};
  auto rec = [&](auto&& self) -> void {
    out.push_back(cur);
    for (std::size_t k = 0; k < E; ++k) {
      if (!cur.steps.empty() && cur.steps.back().type == k) continue;
      for (std::size_t to = level[k] + 1; to <= units; ++to) {
        const std::size_t saved = level[k];
        cur.steps.push_back({k, double(saved) / double(units), double(to) / double(units)});
        level[k] = to;
        self(self);
        level[k] = saved;
        cur.steps.pop_back();
      }
    }
  };
  rec(rec);
  return out;
}

}  // namespace rdp

#endif  // RDP_PATHS_HPP_
