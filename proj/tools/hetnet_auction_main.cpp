//------------------------------------------------------------------------------
//
//   Copyright 2026 the hetnet-auction authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hetnet/alloc_basic.hpp"
#include "hetnet/alloc_extended.hpp"
#include "hetnet/io.hpp"
#include "hetnet/oracle.hpp"
#include "hetnet/payments.hpp"
#include "hetnet/rng.hpp"
#include "hetnet/sim.hpp"

namespace {

using namespace hetnet;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitBoundViolation = 3;
constexpr int kExitBudget = 4;

int exit_code_for(const Error& e) {
  return e.code() == Errc::TooLarge ? kExitBudget : kExitInput;
}

PaymentParams payment_params(const std::string& epsilon, int jobs) {
  PaymentParams params;
  params.epsilon_rel = rat_from_string(epsilon);
  params.jobs = jobs;
  return params;
}

// ---------------------------------------------------------------------------
// auction
// ---------------------------------------------------------------------------

int cmd_auction(const std::string& model, const std::string& config_path,
                const std::string& bids_path, const std::string& epsilon, int jobs,
                const std::string& out_path) {
  const SlotConfig config = load_config_file(config_path);
  const PaymentParams params = payment_params(epsilon, jobs);

  AuctionResult result;
  if (model == "basic") {
    const std::vector<Bid> bids = load_basic_bids_file(bids_path);
    validate(config, std::span<const Bid>(bids));
    result = run_auction_basic(config, bids, params);
  } else {
    const std::vector<ExtendedBid> bids = load_extended_bids_file(bids_path);
    validate(config, std::span<const ExtendedBid>(bids));
    result = run_auction_extended(config, bids, params);
  }

  const std::string text = auction_result_to_json(result);
  if (out_path.empty() || out_path == "-") {
    std::cout << text << "\n";
  } else {
    std::ofstream out(out_path);
    out << text << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// oracle-compare
// ---------------------------------------------------------------------------

int cmd_oracle_compare(const std::string& model, const std::string& config_path,
                       const std::string& bids_path) {
  const SlotConfig config = load_config_file(config_path);

  Rat welfare_alg, welfare_opt;
  Rat bound(0);
  bool have_bound = false;
  if (model == "basic") {
    const std::vector<Bid> bids = load_basic_bids_file(bids_path);
    validate(config, std::span<const Bid>(bids));
    welfare_alg = welfare_basic(bids, allocate_basic(config, bids).allocation);
    welfare_opt = optimal_basic(config, bids).welfare;
    if (!bids.empty()) {
      bound = approx_ratio_bound(delta(config, std::span<const Bid>(bids)));
      have_bound = true;
    }
  } else {
    const std::vector<ExtendedBid> bids = load_extended_bids_file(bids_path);
    validate(config, std::span<const ExtendedBid>(bids));
    welfare_alg = welfare_extended(bids, allocate_extended(config, bids).allocation, config);
    welfare_opt = optimal_extended(config, bids).welfare;
    if (!bids.empty()) {
      bound = approx_ratio_bound(delta(config, std::span<const ExtendedBid>(bids)));
      have_bound = true;
    }
  }

  const Rat ratio = welfare_opt == 0 ? Rat(1) : Rat(welfare_alg / welfare_opt);
  nlohmann::json j;
  j["welfare_alg"] = rat_to_string(welfare_alg);
  j["welfare_opt"] = rat_to_string(welfare_opt);
  j["ratio"] = ratio.get_d();
  j["alpha_bound"] = have_bound ? bound.get_d() : 0.0;
  std::cout << j.dump(2) << "\n";

  if (have_bound && ratio < bound) {
    std::cerr << "ratio fell below the guaranteed bound\n";
    return kExitBoundViolation;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// simulate
// ---------------------------------------------------------------------------

int cmd_simulate(const std::string& scenario_path, const std::string& config_path,
                 const std::string& scheduler_name_arg, long long seed,
                 const std::string& trace_path, bool synth, bool oracle, bool no_payments,
                 const std::string& epsilon, int jobs, const std::string& out_dir) {
  ScenarioSpec scenario = load_scenario_file(scenario_path);
  if (seed >= 0) scenario.rng_seed = static_cast<std::uint64_t>(seed);

  SlotConfig config;
  config.num_rbs = 100;
  config.subband_size = 2;
  if (!config_path.empty()) config = load_config_file(config_path);

  const auto scheduler = scheduler_from_name(scheduler_name_arg);
  if (!scheduler) {
    std::cerr << "unknown scheduler '" << scheduler_name_arg << "'\n";
    return kExitInput;
  }

  std::vector<TraceRecord> trace;
  if (!trace_path.empty()) {
    trace = load_trace_file(trace_path, config);
  } else if (synth) {
    trace = synth_trace(scenario, config);
  } else {
    std::cerr << "no trace: pass --trace FILE or --synth\n";
    return kExitInput;
  }

  SimulationOptions options;
  options.scheduler = *scheduler;
  options.oracle_enabled = oracle;
  options.payments_enabled = !no_payments;
  options.payments = payment_params(epsilon, jobs);

  const SimulationResult result = run_simulation(scenario, config, options, trace);

  std::filesystem::create_directories(out_dir);
  {
    std::ofstream csv(std::filesystem::path(out_dir) / "metrics.csv");
    csv << metrics_to_csv(result);
  }
  {
    std::ofstream json_out(std::filesystem::path(out_dir) / "summary.json");
    json_out << summary_to_json(result) << "\n";
  }
  std::cout << "wrote " << result.slots.size() << " slots to " << out_dir << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// truthfulness-check
// ---------------------------------------------------------------------------

struct RandomBasic {
  SlotConfig config;
  std::vector<Bid> bids;
};

RandomBasic random_basic(Rng& rng) {
  RandomBasic inst;
  inst.config.num_rbs = rng.uniform_int(12, 30);
  inst.config.subband_size = 1;
  const int bidders = rng.uniform_int(3, 8);
  for (int i = 0; i < bidders; ++i) {
    Bid b;
    b.bidder_id = i + 1;
    b.kind = rng.uniform_int(1, 100) <= 30 ? BidderKind::RelayNode : BidderKind::DirectUE;
    b.demand_rbs = rng.uniform_int(1, inst.config.num_rbs / 2 - 1);
    b.value = make_rat(rng.uniform_int(1, 2000), 100);
    inst.bids.push_back(std::move(b));
  }
  return inst;
}

struct RandomExtended {
  SlotConfig config;
  std::vector<ExtendedBid> bids;
};

RandomExtended random_extended(Rng& rng) {
  RandomExtended inst;
  const int subbands = rng.uniform_int(6, 12);
  inst.config.num_rbs = subbands * 2;
  inst.config.subband_size = 2;
  const int bidders = rng.uniform_int(4, 8);
  const int cap = std::max(2, inst.config.num_rbs / 6);
  for (int i = 0; i < bidders; ++i) {
    ExtendedBid b;
    b.bidder_id = i + 1;
    b.kind = rng.uniform_int(1, 100) <= 30 ? BidderKind::RelayNode : BidderKind::DirectUE;
    b.demand_rbs = rng.uniform_int(1, cap);
    b.unit_value = make_rat(rng.uniform_int(50, 150), 100);
    for (int s = 0; s < subbands; ++s) b.cqi.push_back(rng.uniform_int(4, 15));
    inst.bids.push_back(std::move(b));
  }
  return inst;
}

struct TruthfulnessStats {
  int trials = 0;
  int violations = 0;
  int flip_failures = 0;
  double worst_gain = 0.0;
};

// Ascending 50-point sweep of one bidder's price; true iff the win flags
// never revert from winning to losing.
template <class BidT, class Rule>
bool sweep_is_monotone(Rule&& rule, const SlotConfig& config, const std::vector<BidT>& bids,
                       size_t pos) {
  std::vector<BidT> probe = bids;
  const Rat submitted = bid_price(bids[pos]);
  bool seen_win = false;
  for (int k = 1; k <= 50; ++k) {
    set_bid_price(probe[pos], Rat(submitted * Rat(k, 50)));
    const bool wins = rule(config, probe).is_winner(bids[pos].bidder_id);
    if (seen_win && !wins) return false;
    seen_win = seen_win || wins;
  }
  return true;
}

TruthfulnessStats check_basic_truthfulness(int trials, std::uint64_t seed,
                                           const PaymentParams& params) {
  TruthfulnessStats stats;
  Rng rng(seed);
  auto rule = [](const SlotConfig& c, const std::vector<Bid>& b) {
    return allocate_basic(c, b).allocation;
  };
  for (int t = 0; t < trials; ++t) {
    const RandomBasic inst = random_basic(rng);
    const AuctionResult truthful = run_auction_basic(inst.config, inst.bids, params);
    const size_t pick =
        static_cast<size_t>(rng.uniform_int(0, static_cast<int>(inst.bids.size()) - 1));
    const Rat true_value = inst.bids[pick].value;
    auto lied = inst.bids;
    lied[pick].value = true_value * make_rat(rng.uniform_int(1, 200), 100);
    ++stats.trials;
    const AuctionResult misreport = run_auction_basic(inst.config, lied, params);
    const Rat u_truth = utility_basic(truthful, lied[pick].bidder_id, true_value);
    const Rat u_lie = utility_basic(misreport, lied[pick].bidder_id, true_value);
    const Rat tol = 2 * params.epsilon_rel * true_value;
    if (u_truth < u_lie - tol) {
      ++stats.violations;
      stats.worst_gain = std::max(stats.worst_gain, Rat(u_lie - u_truth).get_d());
    }
    if (truthful.allocation.is_winner(lied[pick].bidder_id) && true_value > 0 &&
        !sweep_is_monotone(rule, inst.config, inst.bids, pick))
      ++stats.flip_failures;
  }
  return stats;
}

TruthfulnessStats check_extended_truthfulness(int trials, std::uint64_t seed,
                                              const PaymentParams& params) {
  TruthfulnessStats stats;
  Rng rng(seed);
  auto rule = [](const SlotConfig& c, const std::vector<ExtendedBid>& b) {
    return allocate_extended(c, b).allocation;
  };
  for (int t = 0; t < trials; ++t) {
    const RandomExtended inst = random_extended(rng);
    const AuctionResult truthful = run_auction_extended(inst.config, inst.bids, params);
    const size_t pick =
        static_cast<size_t>(rng.uniform_int(0, static_cast<int>(inst.bids.size()) - 1));
    const Rat true_value = inst.bids[pick].unit_value;
    auto lied = inst.bids;
    lied[pick].unit_value = true_value * make_rat(rng.uniform_int(1, 200), 100);
    ++stats.trials;
    const AuctionResult misreport = run_auction_extended(inst.config, lied, params);
    const Rat u_truth =
        utility_extended(truthful, inst.config, inst.bids, lied[pick].bidder_id, true_value);
    const Rat u_lie =
        utility_extended(misreport, inst.config, lied, lied[pick].bidder_id, true_value);
    const Rat tol = 2 * params.epsilon_rel * true_value;
    if (u_truth < u_lie - tol) {
      ++stats.violations;
      stats.worst_gain = std::max(stats.worst_gain, Rat(u_lie - u_truth).get_d());
    }
    if (truthful.allocation.is_winner(lied[pick].bidder_id) && true_value > 0 &&
        !sweep_is_monotone(rule, inst.config, inst.bids, pick))
      ++stats.flip_failures;
  }
  return stats;
}

// Negative control: a rule rigged to un-win a bidder on a price band must be
// caught by the sweep.
bool self_test_flip_checker() {
  SlotConfig config;
  config.num_rbs = 12;
  config.subband_size = 1;
  const std::vector<Bid> bids = {{1, BidderKind::DirectUE, 2, Rat(6)},
                                 {2, BidderKind::DirectUE, 2, Rat(5)}};
  auto rigged = [](const SlotConfig& c, const std::vector<Bid>& b) {
    Allocation alloc = allocate_basic(c, b).allocation;
    if (b[0].value > 2 && b[0].value < 4) {
      alloc.winners[b[0].bidder_id] = false;
      alloc.assignment[b[0].bidder_id] = {};
    }
    return alloc;
  };
  auto honest = [](const SlotConfig& c, const std::vector<Bid>& b) {
    return allocate_basic(c, b).allocation;
  };
  return !sweep_is_monotone(rigged, config, bids, 0) &&
         sweep_is_monotone(honest, config, bids, 0);
}

int cmd_truthfulness_check(const std::string& model, int trials, long long seed,
                           const std::string& epsilon, bool self_test) {
  if (self_test) {
    if (self_test_flip_checker()) {
      std::cout << "self-test: rigged rule detected, checker is live\n";
      return kExitOk;
    }
    std::cerr << "self-test: checker failed to flag the rigged rule\n";
    return 1;
  }

  PaymentParams params;
  params.epsilon_rel = rat_from_string(epsilon);
  const std::uint64_t rng_seed = seed >= 0 ? static_cast<std::uint64_t>(seed) : 1;
  const TruthfulnessStats stats = model == "basic"
                                      ? check_basic_truthfulness(trials, rng_seed, params)
                                      : check_extended_truthfulness(trials, rng_seed, params);
  std::cout << "model=" << model << " trials=" << stats.trials
            << " utility_violations=" << stats.violations
            << " flip_failures=" << stats.flip_failures
            << " worst_misreport_gain=" << stats.worst_gain << "\n";
  return stats.violations == 0 && stats.flip_failures == 0 ? kExitOk : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Truthful spectrum auctions for relay-augmented downlinks"};
  app.require_subcommand(1);

  std::string model = "basic", config_path, bids_path, epsilon = "1e-6", out_path;
  int jobs = 1;

  CLI::App* auction = app.add_subcommand("auction", "run one auction round and print the result");
  auction->add_option("--model", model)->check(CLI::IsMember({"basic", "extended"}))->required();
  auction->add_option("--config", config_path)->required();
  auction->add_option("--bids", bids_path)->required();
  auction->add_option("--epsilon", epsilon);
  auction->add_option("--jobs", jobs);
  auction->add_option("--out", out_path);

  CLI::App* compare = app.add_subcommand("oracle-compare", "greedy vs exact optimum vs bound");
  compare->add_option("--model", model)->check(CLI::IsMember({"basic", "extended"}))->required();
  compare->add_option("--config", config_path)->required();
  compare->add_option("--bids", bids_path)->required();

  std::string scenario_path, scheduler = "auction-extended", trace_path, out_dir = "out";
  long long seed = -1;
  bool synth = false, oracle = false, no_payments = false;
  CLI::App* simulate = app.add_subcommand("simulate", "run a time-slotted scenario");
  simulate->add_option("--scenario", scenario_path)->required();
  simulate->add_option("--config", config_path);
  simulate->add_option("--scheduler", scheduler);
  simulate->add_option("--seed", seed);
  simulate->add_option("--trace", trace_path);
  simulate->add_flag("--synth", synth, "synthesize the CQI trace from the scenario seed");
  simulate->add_flag("--oracle", oracle, "compare each slot against the exact optimum");
  simulate->add_flag("--no-payments", no_payments, "skip critical-price computation");
  simulate->add_option("--epsilon", epsilon);
  simulate->add_option("--jobs", jobs);
  simulate->add_option("--out", out_dir);

  int trials = 200;
  bool self_test = false;
  CLI::App* truthcheck = app.add_subcommand("truthfulness-check", "randomized property audit");
  truthcheck->add_option("--model", model)->check(CLI::IsMember({"basic", "extended"}));
  truthcheck->add_option("--trials", trials);
  truthcheck->add_option("--seed", seed);
  truthcheck->add_option("--epsilon", epsilon);
  truthcheck->add_flag("--self-test", self_test, "verify the checker flags a rigged rule");

  CLI11_PARSE(app, argc, argv);

  try {
    if (auction->parsed())
      return cmd_auction(model, config_path, bids_path, epsilon, jobs, out_path);
    if (compare->parsed()) return cmd_oracle_compare(model, config_path, bids_path);
    if (simulate->parsed())
      return cmd_simulate(scenario_path, config_path, scheduler, seed, trace_path, synth, oracle,
                          no_payments, epsilon, jobs, out_dir);
    if (truthcheck->parsed())
      return cmd_truthfulness_check(model, trials, seed, epsilon, self_test);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
