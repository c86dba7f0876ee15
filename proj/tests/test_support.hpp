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

#ifndef RDP_TESTS_TEST_SUPPORT_HPP_
#define RDP_TESTS_TEST_SUPPORT_HPP_

#include <cstddef>
#include <random>
#include <vector>

#include "catch_amalgamated.hpp"
#include "rdp/rdp.hpp"

namespace rdp::testing {

// Two states, even prior, zero cost.
inline MarketConfig instance_a() { return {{1.0, 0.0}, {0.5, 0.5}, {}, 0.0}; }
// Three states with an interior cost.
inline MarketConfig instance_b() { return {{1.0, 0.6, 0.2}, {0.3, 0.4, 0.3}, {}, 0.3}; }

inline TypeSpace ts_a() { return build_type_space(instance_a()); }
inline TypeSpace ts_b() { return build_type_space(instance_b()); }

// Random market with K distinct types in [0,1], cost between the lowest type
// and the prior mean so that the platform has something to sell.
inline TypeSpace random_market(std::mt19937_64& rng, std::size_t K) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  while (true) {
    std::vector<double> th(K), mu(K);
    for (auto& t : th) t = u(rng);
    for (auto& m : mu) m = 0.05 + u(rng);
    std::sort(th.begin(), th.end(), std::greater<>());
    bool distinct = true;
    for (std::size_t i = 1; i < K; ++i) distinct = distinct && th[i - 1] - th[i] > 1e-3;
    if (!distinct) continue;
    double total = 0.0;
    for (double m : mu) total += m;
    double v0 = 0.0;
    for (std::size_t i = 0; i < K; ++i) v0 += th[i] * mu[i] / total;
    const double c = th.back() + u(rng) * (v0 - th.back());
    return make_type_space(th, mu, c);
  }
}

template <class F>
bool throws_code(F&& f, errc code) {
  try {
    f();
  } catch (const error& e) {
    return e.code() == code;
  }
  return false;
}

// A perturbation safely below every marginal price at zero and every
// full-disclosure price of the optimal profile.
inline double safe_epsilon(const TypeSpace& ts, double cap = 1e-2) {
  const MenuProfile mp = build_optimal_profile(ts);
  double eps = cap;
  for (const Menu& m : mp) {
    if (m.curve && m.curve->q_max > 0.0) eps = std::min(eps, 0.5 * m.curve->marginal(0.0));
    for (const Plan& pl : m.isolated())
      if (pl.q > 0.0) eps = std::min(eps, 0.5 * pl.p / pl.q);
  }
  return eps;
}

}  // namespace rdp::testing

#endif  // RDP_TESTS_TEST_SUPPORT_HPP_
