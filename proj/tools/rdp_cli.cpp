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

// Command-line front end: reads a JSON market file and prints JSON reports
// or CSV tables.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rdp/rdp.hpp"

namespace {

using rdp::json;

struct Options {
  std::string input;
  std::string out;
  std::size_t grid = 100;
  double epsilon = 1e-3;
  double budget = rdp::kDefaultBudget;
  std::vector<double> c_grid;
  std::string format = "report";
  std::string profile = "optimal";
  std::string space = "threshold";
  std::size_t max_rounds = 100000;
  std::size_t units = 4;
};

int exit_code(rdp::errc e) {
  switch (e) {
    case rdp::errc::invalid_config:
    case rdp::errc::empty_support:
    case rdp::errc::cost_out_of_range:
    case rdp::errc::not_binary:
    case rdp::errc::grid_out_of_range:
    case rdp::errc::invalid_garbling:
    case rdp::errc::assumption_violated:
      return 2;
    case rdp::errc::budget_exceeded:
      return 4;
    default:
      return 3;
  }
}

// Table -> CSV with full round-trip precision.
std::string to_csv(const std::vector<std::string>& header,
                   const std::vector<std::vector<double>>& rows) {
  std::ostringstream os;
  for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
  os << "\n";
  char buf[64];
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      std::snprintf(buf, sizeof buf, "%.17g", r[i]);
      os << (i ? "," : "") << buf;
    }
    os << "\n";
  }
  return os.str();
}

struct Output {
  json report;
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

const char* menu_case(const rdp::TypeSpace& ts, const rdp::TippingPoint& tp, std::size_t k) {
  if (!ts.efficient(k)) return "inefficient";
  if (k < tp.type) return "full-curve";
  if (k == tp.type) return tp.q > 0.0 ? "curve-with-jump" : "bang-bang";
  return "bang-bang";
}

Output cmd_solve(const rdp::InputFile& in, const Options&) {
  const rdp::TypeSpace ts = rdp::build_type_space(in.market);
  const rdp::TippingPoint tp = rdp::tipping_point(ts);
  const rdp::MenuProfile mp = rdp::build_optimal_profile(ts);
  Output o;
  o.report["type_space"] = ts;
  o.report["prior_mean"] = rdp::prior_mean(ts);
  o.report["tipping_point"] = tp;
  o.report["market_power"] = rdp::market_power(ts);
  json types = json::array();
  o.header = {"type", "theta", "mu", "efficient", "menu_q_max", "rent"};
  for (std::size_t k = 0; k < ts.size(); ++k) {
    double qmax = 0.0, rent = 0.0;
    if (ts.efficient(k) && k <= tp.type) {
      qmax = k < tp.type ? 1.0 : tp.q;
      rent = rdp::producer_rent(ts, k, qmax);
    }
    types.push_back({{"type", k}, {"case", menu_case(ts, tp, k)}, {"rent", rent},
                     {"menu", rdp::describe_menu(mp[k])}});
    o.rows.push_back({double(k), ts.theta[k], ts.mu[k], ts.efficient(k) ? 1.0 : 0.0, qmax, rent});
  }
  o.report["types"] = types;
  return o;
}

rdp::MenuProfile verification_profile(const rdp::TypeSpace& ts, const Options& opt) {
  if (opt.profile == "binary2") return rdp::build_binary_two_plan(ts, opt.epsilon);
  if (opt.profile == "binary3") return rdp::build_binary_three_plan(ts, opt.epsilon);
  rdp::MenuProfile mp;
  if (opt.profile == "optimal") mp = rdp::build_optimal_profile(ts);
  else if (opt.profile == "benchmark") mp = rdp::build_benchmark_profile(ts);
  else rdp::fail(rdp::errc::invalid_config, "unknown profile " + opt.profile);
  if (opt.epsilon > 0.0) mp = rdp::perturb_profile(mp, opt.epsilon);
  return rdp::discretize_profile(mp, opt.grid);
}

Output cmd_verify(const rdp::InputFile& in, const Options& opt) {
  const rdp::TypeSpace ts = rdp::build_type_space(in.market);
  const rdp::MenuProfile mp = verification_profile(ts, opt);
  const auto eqs = rdp::enumerate_equilibria(ts, mp, opt.budget);
  if (eqs.empty()) rdp::fail(rdp::errc::no_equilibrium, "no pure equilibrium");
  const double r_star = rdp::mrg_closed_form(ts);
  Output o;
  o.report["profile"] = opt.profile;
  o.report["grid"] = opt.grid;
  o.report["epsilon"] = opt.epsilon;
  o.report["equilibrium_count"] = eqs.size();
  o.report["worst_case"] = eqs.front();
  o.report["worst_case_revenue"] = eqs.front().revenue;
  o.report["closed_form_guarantee"] = r_star;
  o.report["gap"] = r_star - eqs.front().revenue;
  o.header = {"index", "revenue", "skepticism"};
  for (std::size_t i = 0; i < eqs.size(); ++i) o.rows.push_back({double(i), eqs[i].revenue, eqs[i].skepticism});
  return o;
}

Output cmd_sweep(const rdp::InputFile& in, const Options& opt) {
  const rdp::TypeSpace ts = rdp::build_type_space(in.market);
  if (opt.c_grid.empty()) rdp::fail(rdp::errc::invalid_config, "--c-grid is required");
  const rdp::CostSweep s = rdp::sweep_cost(ts, opt.c_grid);
  Output o;
  o.report["points"] = s.points;
  o.report["pss_increasing"] = s.pss_increasing;
  o.report["cte_increasing"] = s.cte_increasing;
  o.report["mk_decreasing"] = s.mk_decreasing;
  o.header = {"cost", "full_surplus", "guarantee", "pss", "mk", "cte"};
  for (const auto& p : s.points) o.rows.push_back({p.cost, p.full_surplus, p.guarantee, p.pss, p.mk, p.cte});
  return o;
}

Output cmd_blackwell(const rdp::InputFile& in, const Options&) {
  if (in.garbling.empty()) rdp::fail(rdp::errc::invalid_garbling, "config has no 'garbling'");
  const rdp::BlackwellResult r = rdp::blackwell_compare(in.market, in.garbling);
  Output o;
  o.report = {{"fine", r.fine}, {"coarse", r.coarse}, {"verdict", r.verdict}};
  o.header = {"fine", "coarse", "verdict"};
  o.rows.push_back({r.fine, r.coarse, r.verdict ? 1.0 : 0.0});
  return o;
}

Output cmd_delete(const rdp::InputFile& in, const Options& opt) {
  const rdp::TypeSpace ts = rdp::build_type_space(in.market);
  const rdp::MenuProfile mp = rdp::eps_optimal_profile(ts, opt.epsilon, opt.grid);
  const auto space = opt.space == "full" ? rdp::ProducerSpace::full : rdp::ProducerSpace::threshold;
  const rdp::DeletionResult r = rdp::iterate_deletion(ts, mp, opt.epsilon, space, opt.max_rounds, opt.budget);
  Output o;
  o.report["rounds"] = r.rounds;
  o.report["round_bound"] = r.round_bound;
  o.report["converged"] = r.converged;
  o.report["trace"] = r.trace;
  o.report["producer"] = r.producer;
  o.report["consumer_means"] = r.consumer_means;
  o.header = {"round", "producer_count", "consumer_count", "mean_lo", "mean_hi"};
  for (const auto& t : r.trace)
    o.rows.push_back({double(t.round), double(t.producer_count), double(t.consumer_count), t.mean_lo, t.mean_hi});
  return o;
}

Output cmd_dispersion(const rdp::InputFile& in, const Options& opt) {
  const rdp::TypeSpace ts = rdp::build_type_space(in.market);
  Output o;
  o.header = {"type", "price", "cdf"};
  json types = json::array();
  for (std::size_t k = 0; k < ts.size(); ++k) {
    const rdp::PriceDispersion d = rdp::dispersion_cdf(ts, k);
    types.push_back({{"type", k}, {"continuous_mass", d.cont_mass}, {"support_lo", d.lo()},
                     {"support_hi", d.hi()}, {"atom_price", d.atom_price}, {"atom_mass", d.atom_mass}});
    const double lo = d.cont_mass > 0.0 ? d.lo() : d.atom_price;
    const double hi = std::max(d.hi(), d.atom_price);
    for (std::size_t i = 0; i <= opt.grid; ++i) {
      const double p = lo + (hi - lo) * double(i) / double(opt.grid);
      o.rows.push_back({double(k), p, d.cdf(p)});
    }
  }
  o.report["types"] = types;
  return o;
}

Output cmd_cost(const rdp::InputFile& in, const Options& opt) {
  const rdp::TypeSpace ts = rdp::build_type_space(in.market);
  const auto cost = rdp::piecewise_linear_cost(in.disclosure_cost);
  const rdp::CostAdjusted r = rdp::cost_adjusted_profile(ts, cost, opt.grid, opt.budget);
  Output o;
  o.report["endpoint"] = r.endpoint;
  o.report["profit"] = r.profit;
  json menus = json::array();
  for (const auto& m : r.menus) menus.push_back(rdp::describe_menu(m));
  o.report["menus"] = menus;
  o.header = {"type", "endpoint"};
  for (std::size_t k = 0; k < r.endpoint.size(); ++k) o.rows.push_back({double(k), r.endpoint[k]});
  o.rows.push_back({-1.0, r.profit});
  return o;
}

Output cmd_paths(const rdp::InputFile& in, const Options& opt) {
  const rdp::TypeSpace ts = rdp::build_type_space(in.market);
  const rdp::AlternatingPath seq = rdp::sequential_path(ts);
  const rdp::PathBound sb = rdp::path_revenue_bound_detail(ts, seq);
  const rdp::MenuProfile mp = rdp::eps_optimal_profile(ts, opt.epsilon, opt.grid);
  const rdp::Equilibrium worst = rdp::worst_case_equilibrium(ts, mp, opt.budget);
  const rdp::AlternatingPath found = rdp::find_path(ts, mp, worst);
  Output o;
  o.report["sequential"] = {{"path", seq}, {"bound", sb.stride_sum}, {"quantile_form", sb.quantile_form}};
  o.report["found"] = {{"path", found}, {"bound", rdp::path_revenue_bound(ts, found)},
                       {"worst_case_revenue", worst.revenue}};
  const auto all = rdp::enumerate_stride_paths(ts, opt.units);
  double best = -INFINITY;
  rdp::AlternatingPath arg;
  for (const auto& p : all) {
    const double b = rdp::path_revenue_bound(ts, p);
    if (b > best) {
      best = b;
      arg = p;
    }
  }
  o.report["stride_search"] = {{"paths", all.size()}, {"best_bound", best}, {"best_path", arg}};
  o.header = {"step", "type", "from", "to"};
  for (std::size_t t = 0; t < found.steps.size(); ++t)
    o.rows.push_back({double(t), double(found.steps[t].type), found.steps[t].from, found.steps[t].to});
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Robust disclosure pricing: solve, verify and analyse markets"};
  app.require_subcommand(1);
  Options opt;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--input", opt.input, "JSON market file")->required();
    sub->add_option("--out", opt.out, "write output here instead of stdout");
    sub->add_option("--grid", opt.grid, "grid size n")->check(CLI::PositiveNumber);
    sub->add_option("--epsilon", opt.epsilon, "price perturbation")->check(CLI::NonNegativeNumber);
    sub->add_option("--budget", opt.budget, "enumeration budget")->check(CLI::PositiveNumber);
    sub->add_option("--format", opt.format, "report or csv")->check(CLI::IsMember({"report", "csv"}));
  };
  struct Sub {
    const char* name;
    const char* help;
    Output (*fn)(const rdp::InputFile&, const Options&);
  };
  const std::vector<Sub> subs = {
      {"solve", "type space, tipping point, optimal menus and guarantee", cmd_solve},
      {"verify", "enumerate equilibria of a discretized menu profile", cmd_verify},
      {"sweep", "surplus shares across a cost grid", cmd_sweep},
      {"blackwell", "compare guarantees under a garbling", cmd_blackwell},
      {"delete", "iterated strict dominance trace", cmd_delete},
      {"dispersion", "bang-bang price distributions", cmd_dispersion},
      {"cost", "optimal endpoints under a disclosure cost", cmd_cost},
      {"paths", "alternating paths and revenue bounds", cmd_paths},
  };
  std::vector<std::pair<CLI::App*, const Sub*>> apps;
  for (const Sub& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    common(sub);
    apps.push_back({sub, &s});
  }
  app.get_subcommand("verify")
      ->add_option("--profile", opt.profile, "optimal, benchmark, binary2 or binary3")
      ->check(CLI::IsMember({"optimal", "benchmark", "binary2", "binary3"}));
  app.get_subcommand("sweep")->add_option("--c-grid", opt.c_grid, "costs to evaluate")->delimiter(',');
  app.get_subcommand("delete")->add_option("--space", opt.space, "threshold or full")
      ->check(CLI::IsMember({"threshold", "full"}));
  app.get_subcommand("delete")->add_option("--max-rounds", opt.max_rounds, "round limit");
  app.get_subcommand("paths")->add_option("--units", opt.units, "stride grid denominator");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    const rdp::InputFile in = rdp::load_input(opt.input);
    Output o;
    for (auto& [sub, s] : apps)
      if (sub->parsed()) o = s->fn(in, opt);
    const std::string text = opt.format == "csv" ? to_csv(o.header, o.rows) : o.report.dump(2) + "\n";
    if (opt.out.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(opt.out);
      if (!f) rdp::fail(rdp::errc::invalid_config, "cannot write " + opt.out);
      f << text;
    }
  } catch (const rdp::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
