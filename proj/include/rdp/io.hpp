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

#ifndef RDP_IO_HPP_
#define RDP_IO_HPP_

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "rdp/analysis.hpp"
#include "rdp/beliefs.hpp"
#include "rdp/equilibrium.hpp"
#include "rdp/errors.hpp"
#include "rdp/market.hpp"
#include "rdp/paths.hpp"
#include "rdp/pricing.hpp"
#include "rdp/rationalizability.hpp"

namespace rdp {

using json = nlohmann::json;

// Market file plus the optional inputs some subcommands need.
struct InputFile {
  MarketConfig market;
  std::vector<std::vector<double>> garbling;
  std::vector<std::pair<double, double>> disclosure_cost;
};

namespace detail {

template <class T>
T field(const json& j, const char* key) {
  if (!j.contains(key)) fail(errc::invalid_config, std::string("missing key '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    fail(errc::invalid_config, std::string("bad value for '") + key + "': " + e.what());
  }
}

template <class T>
T optional_field(const json& j, const char* key, T fallback) {
  return j.contains(key) ? field<T>(j, key) : fallback;
}

}  // namespace detail

inline InputFile parse_input(const json& j) {
  if (!j.is_object()) fail(errc::invalid_config, "config must be a JSON object");
  InputFile in;
  in.market.states = detail::field<std::vector<double>>(j, "states");
  in.market.state_prior = detail::field<std::vector<double>>(j, "state_prior");
  in.market.signal = detail::optional_field<std::vector<std::vector<double>>>(j, "signal", {});
  in.market.cost = detail::field<double>(j, "cost");
  in.garbling = detail::optional_field<std::vector<std::vector<double>>>(j, "garbling", {});
  auto knots = detail::optional_field<std::vector<std::vector<double>>>(j, "disclosure_cost", {});
  for (const auto& k : knots) {
    if (k.size() != 2) fail(errc::invalid_config, "disclosure_cost entries are [q, cost] pairs");
    in.disclosure_cost.emplace_back(k[0], k[1]);
  }
  validate(in.market);
  return in;
}

inline InputFile parse_input_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(errc::invalid_config, std::string("malformed JSON: ") + e.what());
  }
  return parse_input(j);
}

inline InputFile load_input(const std::string& path) {
  std::ifstream f(path);
  if (!f) fail(errc::invalid_config, "cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_input_text(ss.str());
}

// Report records.  Field names mirror the library structs.
inline void to_json(json& j, const Plan& p) { j = json{{"q", p.q}, {"p", p.p}}; }
inline void from_json(const json& j, Plan& p) {
  p.q = j.at("q").get<double>();
  p.p = j.at("p").get<double>();
}

inline void to_json(json& j, const TypeSpace& ts) {
  j = json{{"theta", ts.theta}, {"mu", ts.mu}, {"cost", ts.cost}};
}
inline void from_json(const json& j, TypeSpace& ts) {
  ts.theta = j.at("theta").get<std::vector<double>>();
  ts.mu = j.at("mu").get<std::vector<double>>();
  ts.cost = j.at("cost").get<double>();
}

inline void to_json(json& j, const TippingPoint& tp) { j = json{{"type", tp.type}, {"q", tp.q}}; }
inline void from_json(const json& j, TippingPoint& tp) {
  tp.type = j.at("type").get<std::size_t>();
  tp.q = j.at("q").get<double>();
}

inline void to_json(json& j, const Equilibrium& e) {
  j = json{{"plans", e.plans}, {"q", e.q}, {"skepticism", e.skepticism}, {"revenue", e.revenue}};
}
inline void from_json(const json& j, Equilibrium& e) {
  e.plans = j.at("plans").get<std::vector<Plan>>();
  e.q = j.at("q").get<Profile>();
  e.skepticism = j.at("skepticism").get<double>();
  e.revenue = j.at("revenue").get<double>();
}

inline void to_json(json& j, const MarketPowerReport& r) {
  j = json{{"cost", r.cost}, {"full_surplus", r.full_surplus}, {"guarantee", r.guarantee},
           {"pss", r.pss},   {"mk", r.mk},                     {"cte", r.cte}};
}
inline void from_json(const json& j, MarketPowerReport& r) {
  r.cost = j.at("cost").get<double>();
  r.full_surplus = j.at("full_surplus").get<double>();
  r.guarantee = j.at("guarantee").get<double>();
  r.pss = j.at("pss").get<double>();
  r.mk = j.at("mk").get<double>();
  r.cte = j.at("cte").get<double>();
}

inline void to_json(json& j, const PathStep& s) {
  j = json{{"type", s.type}, {"from", s.from}, {"to", s.to}};
}
inline void from_json(const json& j, PathStep& s) {
  s.type = j.at("type").get<std::size_t>();
  s.from = j.at("from").get<double>();
  s.to = j.at("to").get<double>();
}

inline void to_json(json& j, const AlternatingPath& p) {
  j = json{{"dimension", p.dimension}, {"steps", p.steps}};
}
inline void from_json(const json& j, AlternatingPath& p) {
  p.dimension = j.at("dimension").get<std::size_t>();
  p.steps = j.at("steps").get<std::vector<PathStep>>();
}

inline void to_json(json& j, const DeletionRound& r) {
  j = json{{"round", r.round},     {"producer_count", r.producer_count},
           {"consumer_count", r.consumer_count}, {"mean_lo", r.mean_lo},
           {"mean_hi", r.mean_hi}};
}
inline void from_json(const json& j, DeletionRound& r) {
  r.round = j.at("round").get<std::size_t>();
  r.producer_count = j.at("producer_count").get<std::size_t>();
  r.consumer_count = j.at("consumer_count").get<std::size_t>();
  r.mean_lo = j.at("mean_lo").get<double>();
  r.mean_hi = j.at("mean_hi").get<double>();
}

// Menu summary: the curve (if any) is described by its range and sampled
// on `samples` points; isolated plans are listed exactly.
inline json describe_menu(const Menu& m, std::size_t samples = 11) {
  json j;
  j["isolated"] = m.isolated();
  if (m.curve) {
    j["curve_q_max"] = m.curve->q_max;
    std::vector<Plan> pts;
    for (std::size_t i = 0; i < samples; ++i) {
      const double q = m.curve->q_max * double(i) / double(samples - 1);
      pts.push_back({q, m.curve_price(q)});
    }
    j["curve_samples"] = pts;
  }
  return j;
}

}  // namespace rdp

#endif  // RDP_IO_HPP_
