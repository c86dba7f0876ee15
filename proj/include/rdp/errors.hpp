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

#ifndef RDP_ERRORS_HPP_
#define RDP_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace rdp {

enum class errc {
  invalid_config,
  empty_support,
  cost_out_of_range,
  undefined_at_full_disclosure,
  quantile_out_of_range,
  past_tipping_point,
  not_binary,
  epsilon_too_large,
  plan_not_in_menu,
  budget_exceeded,
  no_equilibrium,
  stuck,
  inefficient_direction,
  not_exchangeable,
  assumption_violated,
  grid_out_of_range,
  invalid_garbling,
  nonconvergence,
};

inline std::string_view to_string(errc e) {
  switch (e) {
    case errc::invalid_config: return "InvalidConfig";
    case errc::empty_support: return "EmptySupport";
    case errc::cost_out_of_range: return "CostOutOfRange";
    case errc::undefined_at_full_disclosure: return "UndefinedAtFullDisclosure";
    case errc::quantile_out_of_range: return "QuantileOutOfRange";
    case errc::past_tipping_point: return "PastTippingPoint";
    case errc::not_binary: return "NotBinary";
    case errc::epsilon_too_large: return "EpsilonTooLarge";
    case errc::plan_not_in_menu: return "PlanNotInMenu";
    case errc::budget_exceeded: return "BudgetExceeded";
    case errc::no_equilibrium: return "NoEquilibrium";
    case errc::stuck: return "Stuck";
    case errc::inefficient_direction: return "InefficientDirection";
    case errc::not_exchangeable: return "NotExchangeable";
    case errc::assumption_violated: return "AssumptionViolated";
    case errc::grid_out_of_range: return "GridOutOfRange";
    case errc::invalid_garbling: return "InvalidGarbling";
    case errc::nonconvergence: return "Nonconvergence";
  }
  return "Unknown";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
  throw error(code, what);
}

}  // namespace rdp

#endif  // RDP_ERRORS_HPP_
