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

#ifndef RDP_NUMERIC_HPP_
#define RDP_NUMERIC_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

namespace rdp {

// Tolerances shared across modules.
inline constexpr double kMergeTol = 1e-9;
inline constexpr double kMassTol = 1e-12;
inline constexpr double kStrictTol = 1e-12;
inline constexpr double kQuadTol = 1e-10;

namespace detail {

template <class F>
double simpson_step(const F& f, double a, double b, double fa, double fm,
                    double fb, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double diff = left + right - whole;
  if (depth <= 0 || std::abs(diff) <= 15.0 * tol) return left + right + diff / 15.0;
  return simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

// Adaptive Simpson quadrature with an absolute tolerance.
template <class F>
double integrate(const F& f, double a, double b, double tol = kQuadTol,
                 int max_depth = 48) {
  if (b == a) return 0.0;
  if (b < a) return -integrate(f, b, a, tol, max_depth);
  const double fa = f(a), fb = f(b), m = 0.5 * (a + b), fm = f(m);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return detail::simpson_step(f, a, b, fa, fm, fb, whole, tol, max_depth);
}

// Same, but splits at the given interior breakpoints (kinks) first.
template <class F>
double integrate_piecewise(const F& f, double a, double b,
                           std::vector<double> breaks, double tol = kQuadTol) {
  breaks.push_back(a);
  breaks.push_back(b);
  std::sort(breaks.begin(), breaks.end());
  double total = 0.0;
  const double pieces = static_cast<double>(breaks.size());
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const double lo = std::max(a, breaks[i]), hi = std::min(b, breaks[i + 1]);
    if (hi > lo) total += integrate(f, lo, hi, tol / pieces);
  }
  return total;
}

// Bisection for a sign change of f on [a, b]; returns the left-most root
// bracket endpoint once the bracket is shorter than tol.
template <class F>
double bisect(const F& f, double a, double b, double tol = 1e-12) {
  double fa = f(a);
  for (int i = 0; i < 200 && b - a > tol; ++i) {
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    if ((fm > 0) == (fa > 0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

// Grid {0, 1/n, ..., 1} truncated at q_max, with q_max appended when it is
// not itself a grid point.
inline std::vector<double> unit_grid(std::size_t n, double q_max = 1.0) {
  std::vector<double> g;
  for (std::size_t i = 0; i <= n; ++i) {
    const double q = static_cast<double>(i) / static_cast<double>(n);
    if (q > q_max + 1e-12) break;
    g.push_back(q);
  }
  if (g.empty() || q_max - g.back() > 1e-12) g.push_back(q_max);
  else g.back() = std::min(g.back(), q_max);
  return g;
}

}  // namespace rdp

#endif  // RDP_NUMERIC_HPP_
