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

#ifndef RDP_BELIEFS_HPP_
#define RDP_BELIEFS_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "rdp/errors.hpp"
#include "rdp/market.hpp"
#include "rdp/numeric.hpp"

namespace rdp {

// Disclosure probability of each type.
using Profile = std::vector<double>;

inline double undisclosed_mass(const TypeSpace& ts, const Profile& q) {
  double d = 0.0;
  for (std::size_t k = 0; k < ts.size(); ++k) d += ts.mu[k] * (1.0 - q[k]);
  return d;
}

inline void check_profile(const TypeSpace& ts, const Profile& q) {
  if (q.size() != ts.size())
    fail(errc::invalid_config, "profile length differs from type count");
  for (double x : q)
    if (!(x >= -1e-15 && x <= 1.0 + 1e-15))
      fail(errc::invalid_config, "disclosure probability outside [0,1]");
}

// Consumer belief after non-disclosure.  When (almost) everyone discloses
// the belief is a point mass on the lowest type.
inline std::vector<double> skepticism_belief(const TypeSpace& ts,
                                             const Profile& q) {
  check_profile(ts, q);
  std::vector<double> b(ts.size(), 0.0);
  const double d = undisclosed_mass(ts, q);
  if (d <= kMassTol) {
    b.back() = 1.0;
    return b;
  }
  for (std::size_t k = 0; k < ts.size(); ++k) b[k] = ts.mu[k] * (1.0 - q[k]) / d;
  return b;
}

inline double skepticism_mean(const TypeSpace& ts, const Profile& q) {
  check_profile(ts, q);
  const double d = undisclosed_mass(ts, q);
  if (d <= kMassTol) return ts.theta.back();
  double s = 0.0;
  for (std::size_t k = 0; k < ts.size(); ++k)
    s += ts.mu[k] * (1.0 - q[k]) * ts.theta[k];
  return s / d;
}

// Consumer's outside-option value under skepticism.
inline double skepticism_value(const TypeSpace& ts, const Profile& q) {
  return std::max(skepticism_mean(ts, q) - ts.cost, 0.0);
}

// (1,...,1,q,0,...,0) with q in slot k.
inline Profile staircase_profile(const TypeSpace& ts, std::size_t k, double q) {
  Profile p(ts.size(), 0.0);
  for (std::size_t j = 0; j < k; ++j) p[j] = 1.0;
  p[k] = q;
  return p;
}

inline double staircase_value(const TypeSpace& ts, std::size_t k, double q) {
  return skepticism_value(ts, staircase_profile(ts, k, q));
}

inline double skepticism_gradient(const TypeSpace& ts, const Profile& q,
                                  std::size_t k) {
  check_profile(ts, q);
  const double d = undisclosed_mass(ts, q);
  if (d <= kMassTol)
    fail(errc::undefined_at_full_disclosure, "no undisclosed mass");
  if (skepticism_value(ts, q) <= 0.0) return 0.0;
  double s = 0.0;
  for (std::size_t j = 0; j < ts.size(); ++j)
    s += ts.mu[j] * (1.0 - q[j]) * (ts.theta[k] - ts.theta[j]);
  return -ts.mu[k] * s / (d * d);
}

struct TippingPoint {
  std::size_t type = 0;
  double q = 0.0;
};

// First point of the sequential order where skepticism value reaches zero.
inline TippingPoint tipping_point(const TypeSpace& ts) {
  const std::size_t K = ts.size();
  const double c = ts.cost;
  if (c <= ts.theta.back() + kMergeTol) return {K - 1, 1.0};
  double tail_mass = 0.0, tail_moment = 0.0;
  for (std::size_t j = 0; j < K; ++j) {
    tail_mass += ts.mu[j];
    tail_moment += ts.mu[j] * ts.theta[j];
  }
  for (std::size_t k = 0; k < K; ++k) {
    if (tail_moment - c * tail_mass <= 0.0) return {k, 0.0};
    // Mean of the undisclosed pool is linear-fractional in q^k; solve v = c.
    const double slope = ts.mu[k] * (ts.theta[k] - c);
    const double lhs = tail_moment - c * tail_mass;
    if (slope > 1e-14) {
      const double q = lhs / slope;
      if (q <= 1.0) return {k, std::max(q, 0.0)};
    } else if (slope > 0.0) {
      auto f = [&](double s) { return staircase_value(ts, k, s) > 0.0 ? 1.0 : -1.0; };
      if (f(1.0) < 0.0) return {k, bisect(f, 0.0, 1.0)};
    }
    tail_mass -= ts.mu[k];
    tail_moment -= ts.mu[k] * ts.theta[k];
  }
  return {K - 1, 1.0};
}

// True when (k, q) comes weakly before the tipping point in sequential order.
inline bool at_or_before(const TippingPoint& tp, std::size_t k, double q,
                         double tol = 1e-12) {
  return k < tp.type || (k == tp.type && q <= tp.q + tol);
}

// Integral of the skepticism value along one coordinate: profile `base`
// with slot k moved over [a, b].  Closed form of a clipped linear-fractional
// function.
inline double stride_value_integral(const TypeSpace& ts, const Profile& base,
                                    std::size_t k, double a, double b) {
  if (b <= a) return 0.0;
  Profile p = base;
  p[k] = 0.0;
  const double c = ts.cost;
  double d0 = 0.0, s0 = 0.0;
  for (std::size_t j = 0; j < ts.size(); ++j) {
    d0 += ts.mu[j] * (1.0 - p[j]);
    s0 += ts.mu[j] * (1.0 - p[j]) * ts.theta[j];
  }
  const double alpha = s0 - c * d0, beta = ts.mu[k] * (ts.theta[k] - c);
  const double delta = d0, gamma = ts.mu[k];
  // f(s) = (alpha - beta s) / (delta - gamma s) on the part where it is > 0.
  double lo = a, hi = b;
  if (beta > 0.0) {
    hi = std::min(hi, alpha / beta);
  } else if (beta < 0.0) {
    lo = std::max(lo, alpha / beta);
  } else if (alpha <= 0.0) {
    return 0.0;
  }
  if (hi <= lo) return 0.0;
  const double coef = alpha - beta * delta / gamma;
  double total = (beta / gamma) * (hi - lo);
  const double den_hi = delta - gamma * hi;
  if (std::abs(coef) > 1e-300 && den_hi > 0.0)
    total += coef / gamma * std::log1p(gamma * (hi - lo) / den_hi);
  return total;
}

}  // namespace rdp

#endif  // RDP_BELIEFS_HPP_
