#pragma once
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

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hetnet/core.hpp"
#include "hetnet/payments.hpp"

namespace hetnet {

/// One bidder's reported per-sub-band CQI in one slot.
struct TraceRecord {
  int slot = 0;
  int bidder_id = 0;
  std::vector<int> cqi;
};

struct RosterEntry {
  int bidder_id;
  BidderKind kind;
  int served_ues;  // relays aggregate this many users; 1 for direct UEs
};

/// Time-slotted scenario: roster shape, demand and pricing model, seed.
/// Direct UEs get ids 1..num_direct_ues, relays follow.
struct ScenarioSpec {
  int num_slots = 1000;
  int slot_ms = 10;
  int num_direct_ues = 40;
  int num_rns = 5;
  int rn_served_min = 1;
  int rn_served_max = 2;
  int demand_min = 10;
  int demand_max = 40;
  Rat base_unit_price = Rat(1, 20);  // currency per information bit
  Rat price_noise_min = Rat(1, 2);   // multiplicative, uniform on a fine grid
  Rat price_noise_max = Rat(3, 2);
  std::uint64_t rng_seed = 1;

  int num_bidders() const { return num_direct_ues + num_rns; }
  /// Deterministic roster; relay served-UE counts are drawn from the seed.
  std::vector<RosterEntry> roster() const;
};

/// Scenario/config compatibility: demand bounds sane and small enough that
/// every generated slot satisfies the allocation-rule domain (max demand
/// below half the blocks, with relay demands clamped to that ceiling).
void validate_scenario(const ScenarioSpec& scenario, const SlotConfig& config);

struct SlotMetrics {
  int slot = 0;
  int num_bidders = 0;
  Rat welfare;
  std::optional<Rat> welfare_opt;
  std::optional<double> ratio;
  std::optional<double> alpha_bound;  // worst-case guarantee at this slot's delta
  Rat throughput_bits;
  std::map<int, Rat> per_bidder_throughput;
  std::map<int, Rat> per_bidder_payment;
  long long runtime_us = 0;
  int num_winners = 0;
  int reserved_rbs = 0;
};

enum class Scheduler { AuctionBasic, AuctionExtended, RoundRobin, BestCqi };

std::optional<Scheduler> scheduler_from_name(std::string_view name);
std::string_view scheduler_name(Scheduler scheduler);

/// Parses trace CSV rows `slot,bidder_id,cqi_0,...` with one CQI per
/// sub-band. Throws ParseError (with line number) or CqiOutOfRange.
std::vector<TraceRecord> load_trace(std::istream& in, const SlotConfig& config);
std::vector<TraceRecord> load_trace_file(const std::string& path, const SlotConfig& config);

/// Synthesizes per-bidder, per-sub-band CQI as bounded random walks on
/// [0, 15]: unit steps, start uniform in [6, 12]. Fully determined by the
/// scenario seed.
std::vector<TraceRecord> synth_trace(const ScenarioSpec& scenario, const SlotConfig& config);

/// Bids for one slot: demand uniform in [demand_min, demand_max] (relays
/// scale by served-UE count, clamped to the domain ceiling), unit price
/// base * noise with noise uniform on a 1/10000 grid, CQI copied from the
/// trace. Deterministic per (seed, slot).
std::vector<ExtendedBid> generate_bids(const ScenarioSpec& scenario, const SlotConfig& config,
                                       std::span<const TraceRecord> slot_records, int slot);

/// Homogeneous view of extended bids: total value = unit price * demand.
std::vector<Bid> to_basic_bids(std::span<const ExtendedBid> bids);

struct SimulationOptions {
  Scheduler scheduler = Scheduler::AuctionExtended;
  bool oracle_enabled = false;
  bool payments_enabled = true;  // auctions only; baselines never charge
  PaymentParams payments;
};

struct SimulationSummary {
  int num_slots = 0;
  Rat total_welfare;
  Rat mean_welfare;
  Rat total_throughput_bits;
  Rat mean_throughput_bits;
  std::optional<double> min_ratio;
  std::optional<double> mean_ratio;
  std::map<int, Rat> per_bidder_throughput;
  std::map<int, Rat> per_bidder_payment;
  double mean_runtime_us = 0.0;
};

struct SimulationResult {
  std::vector<SlotMetrics> slots;
  SimulationSummary summary;
};

/// Drives the scenario slot by slot: bids from the trace, one scheduler run,
/// optional exact-optimum comparison (only on slots within the oracle
/// budget), metrics per slot. Every allocation is audited; a violation stops
/// the run. Identical inputs produce identical metrics.
SimulationResult run_simulation(const ScenarioSpec& scenario, const SlotConfig& config,
                                const SimulationOptions& options,
                                std::span<const TraceRecord> trace);

}  // namespace hetnet
