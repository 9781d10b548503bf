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

#include "hetnet/sim.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "hetnet/alloc_basic.hpp"
#include "hetnet/alloc_extended.hpp"
#include "hetnet/baselines.hpp"
#include "hetnet/oracle.hpp"
#include "hetnet/rng.hpp"

namespace hetnet {

namespace {

// Stream tags so each independent random stream has its own key space.
constexpr std::uint64_t kStreamRoster = 0x01;
constexpr std::uint64_t kStreamTrace = 0x02;
constexpr std::uint64_t kStreamBids = 0x03;

constexpr long kNoiseGrid = 10000;

int demand_ceiling(const SlotConfig& config) { return (config.num_rbs - 1) / 2; }

}  // namespace

std::vector<RosterEntry> ScenarioSpec::roster() const {
  std::vector<RosterEntry> out;
  out.reserve(static_cast<size_t>(num_bidders()));
  for (int i = 0; i < num_direct_ues; ++i)
    out.push_back({i + 1, BidderKind::DirectUE, 1});
  Rng rng(Rng::mix(rng_seed, kStreamRoster));
  for (int i = 0; i < num_rns; ++i)
    out.push_back({num_direct_ues + i + 1, BidderKind::RelayNode,
                   rng.uniform_int(rn_served_min, rn_served_max)});
  return out;
}

void validate_scenario(const ScenarioSpec& scenario, const SlotConfig& config) {
  if (scenario.num_slots < 0) throw Error(Errc::BadArgument, "negative slot count");
  if (scenario.num_direct_ues < 0 || scenario.num_rns < 0)
    throw Error(Errc::BadArgument, "negative roster count");
  if (scenario.num_bidders() == 0) throw Error(Errc::BadArgument, "empty roster");
  if (scenario.demand_min < 1 || scenario.demand_max < scenario.demand_min)
    throw Error(Errc::BadArgument, "demand bounds must satisfy 1 <= min <= max");
  if (scenario.rn_served_min < 1 || scenario.rn_served_max < scenario.rn_served_min)
    throw Error(Errc::BadArgument, "served-UE bounds must satisfy 1 <= min <= max");
  if (scenario.price_noise_min <= 0 || scenario.price_noise_max < scenario.price_noise_min)
    throw Error(Errc::BadArgument, "price noise bounds must satisfy 0 < min <= max");
  if (scenario.base_unit_price < 0) throw Error(Errc::BadArgument, "negative base price");
  // UE demands are used as drawn; they must fit the allocation-rule domain.
  if (scenario.demand_max > demand_ceiling(config))
    throw Error(Errc::DeltaTooSmall,
                "demand_max " + std::to_string(scenario.demand_max) +
                    " exceeds the ceiling " + std::to_string(demand_ceiling(config)) +
                    " for " + std::to_string(config.num_rbs) + " blocks");
}

std::optional<Scheduler> scheduler_from_name(std::string_view name) {
  if (name == "auction-basic") return Scheduler::AuctionBasic;
  if (name == "auction-extended") return Scheduler::AuctionExtended;
  if (name == "round-robin") return Scheduler::RoundRobin;
  if (name == "best-cqi") return Scheduler::BestCqi;
  return std::nullopt;
}

std::string_view scheduler_name(Scheduler scheduler) {
  switch (scheduler) {
    case Scheduler::AuctionBasic: return "auction-basic";
    case Scheduler::AuctionExtended: return "auction-extended";
    case Scheduler::RoundRobin: return "round-robin";
    case Scheduler::BestCqi: return "best-cqi";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// Traces
// ---------------------------------------------------------------------------

namespace {

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.push_back("");
  return fields;
}

int parse_int(const std::string& text, int line_no, const char* what) {
  try {
    size_t used = 0;
    const int value = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    throw Error(Errc::ParseError, std::string("bad ") + what + " '" + text + "'", line_no);
  }
}

}  // namespace

std::vector<TraceRecord> load_trace(std::istream& in, const SlotConfig& config) {
  std::vector<TraceRecord> records;
  const size_t want_cqi = static_cast<size_t>(config.num_subbands());
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (line_no == 1 && line.rfind("slot,", 0) == 0) continue;  // optional header
    const std::vector<std::string> fields = split_csv(line);
    if (fields.size() != 2 + want_cqi)
      throw Error(Errc::ParseError,
                  "expected " + std::to_string(2 + want_cqi) + " fields, found " +
                      std::to_string(fields.size()),
                  line_no);
    TraceRecord rec;
    rec.slot = parse_int(fields[0], line_no, "slot");
    rec.bidder_id = parse_int(fields[1], line_no, "bidder id");
    if (rec.slot < 0) throw Error(Errc::ParseError, "negative slot", line_no);
    rec.cqi.reserve(want_cqi);
    for (size_t i = 0; i < want_cqi; ++i) {
      const int c = parse_int(fields[2 + i], line_no, "CQI");
      if (c < 0 || c >= CqiRateTable::kLevels)
        throw Error(Errc::CqiOutOfRange, "CQI " + std::to_string(c) + " outside [0,15]", line_no);
      rec.cqi.push_back(c);
    }
    records.push_back(std::move(rec));
  }
  return records;
}

std::vector<TraceRecord> load_trace_file(const std::string& path, const SlotConfig& config) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open trace file '" + path + "'");
  return load_trace(in, config);
}

std::vector<TraceRecord> synth_trace(const ScenarioSpec& scenario, const SlotConfig& config) {
  validate_scenario(scenario, config);
  const std::vector<RosterEntry> roster = scenario.roster();
  const int num_subbands = config.num_subbands();

  std::vector<TraceRecord> records;
  records.reserve(static_cast<size_t>(scenario.num_slots) * roster.size());

  // One independent walk per (bidder, sub-band).
  std::vector<std::vector<int>> cqi(roster.size(),
                                    std::vector<int>(static_cast<size_t>(num_subbands)));
  std::vector<std::vector<Rng>> walks;
  walks.reserve(roster.size());
  for (size_t b = 0; b < roster.size(); ++b) {
    walks.emplace_back();
    for (int s = 0; s < num_subbands; ++s) {
      walks[b].push_back(Rng(Rng::mix(Rng::mix(scenario.rng_seed, kStreamTrace),
                                      static_cast<std::uint64_t>(roster[b].bidder_id) * 4096 +
                                          static_cast<std::uint64_t>(s))));
      cqi[b][static_cast<size_t>(s)] = walks[b].back().uniform_int(6, 12);
    }
  }

  for (int slot = 0; slot < scenario.num_slots; ++slot) {
    for (size_t b = 0; b < roster.size(); ++b) {
      records.push_back({slot, roster[b].bidder_id, cqi[b]});
      for (int s = 0; s < num_subbands; ++s) {
        const int step = walks[b][static_cast<size_t>(s)].uniform_int(-1, 1);
        int& level = cqi[b][static_cast<size_t>(s)];
        level = std::clamp(level + step, 0, CqiRateTable::kLevels - 1);
      }
    }
  }
  return records;
}

// ---------------------------------------------------------------------------
// Bids
// ---------------------------------------------------------------------------

std::vector<ExtendedBid> generate_bids(const ScenarioSpec& scenario, const SlotConfig& config,
                                       std::span<const TraceRecord> slot_records, int slot) {
  const std::vector<RosterEntry> roster = scenario.roster();
  std::unordered_map<int, const TraceRecord*> by_bidder;
  for (const TraceRecord& rec : slot_records)
    if (rec.slot == slot) by_bidder[rec.bidder_id] = &rec;

  Rng rng(Rng::mix(Rng::mix(scenario.rng_seed, kStreamBids), static_cast<std::uint64_t>(slot)));
  const Rat noise_span = scenario.price_noise_max - scenario.price_noise_min;

  std::vector<ExtendedBid> bids;
  bids.reserve(roster.size());
  for (const RosterEntry& entry : roster) {
    auto it = by_bidder.find(entry.bidder_id);
    if (it == by_bidder.end())
      throw Error(Errc::BadArgument, "trace has no record for bidder " +
                                         std::to_string(entry.bidder_id) + " in slot " +
                                         std::to_string(slot));
    ExtendedBid bid;
    bid.bidder_id = entry.bidder_id;
    bid.kind = entry.kind;
    int demand = rng.uniform_int(scenario.demand_min, scenario.demand_max) * entry.served_ues;
    bid.demand_rbs = std::min(demand, demand_ceiling(config));
    const long noise_tick = rng.uniform_int(0, kNoiseGrid);
    const Rat noise = scenario.price_noise_min + noise_span * Rat(noise_tick, kNoiseGrid);
    bid.unit_value = scenario.base_unit_price * noise;
    bid.cqi = it->second->cqi;
    bids.push_back(std::move(bid));
  }
  return bids;
}

std::vector<Bid> to_basic_bids(std::span<const ExtendedBid> bids) {
  std::vector<Bid> out;
  out.reserve(bids.size());
  for (const ExtendedBid& b : bids)
    out.push_back({b.bidder_id, b.kind, b.demand_rbs, b.unit_value * b.demand_rbs});
  return out;
}

// ---------------------------------------------------------------------------
// Driver
// ---------------------------------------------------------------------------

namespace {

void require_feasible(const SlotConfig& config, std::span<const ExtendedBid> bids,
                      const Allocation& alloc, int slot) {
  const std::vector<Violation> violations = check_feasibility(config, bids, alloc);
  if (!violations.empty())
    throw Error(Errc::BadArgument, "slot " + std::to_string(slot) + " produced an infeasible allocation: " +
                                       violations.front().detail);
}

}  // namespace

SimulationResult run_simulation(const ScenarioSpec& scenario, const SlotConfig& config,
                                const SimulationOptions& options,
                                std::span<const TraceRecord> trace) {
  validate_scenario(scenario, config);

  // Slot index over the trace.
  std::vector<std::vector<TraceRecord>> per_slot(static_cast<size_t>(scenario.num_slots));
  for (const TraceRecord& rec : trace)
    if (rec.slot >= 0 && rec.slot < scenario.num_slots)
      per_slot[static_cast<size_t>(rec.slot)].push_back(rec);

  SimulationResult result;
  result.slots.reserve(static_cast<size_t>(scenario.num_slots));

  int rr_cursor = 0;
  const bool is_auction =
      options.scheduler == Scheduler::AuctionBasic || options.scheduler == Scheduler::AuctionExtended;

  for (int slot = 0; slot < scenario.num_slots; ++slot) {
    std::vector<ExtendedBid> bids;
    try {
      bids = generate_bids(scenario, config, per_slot[static_cast<size_t>(slot)], slot);
      validate(config, std::span<const ExtendedBid>(bids));
    } catch (const Error& e) {
      throw Error(e.code(), "slot " + std::to_string(slot) + ": " + e.what());
    }

    SlotMetrics metrics;
    metrics.slot = slot;
    metrics.num_bidders = static_cast<int>(bids.size());
    if (!bids.empty())
      metrics.alpha_bound =
          approx_ratio_bound(delta(config, std::span<const ExtendedBid>(bids))).get_d();

    const auto start = std::chrono::steady_clock::now();
    Allocation alloc;
    switch (options.scheduler) {
      case Scheduler::AuctionBasic: {
        const std::vector<Bid> basic = to_basic_bids(bids);
        if (options.payments_enabled) {
          AuctionResult auction = run_auction_basic(config, basic, options.payments);
          for (const auto& [id, charge] : auction.charges) metrics.per_bidder_payment[id] = charge;
          alloc = std::move(auction.allocation);
          metrics.welfare = std::move(auction.social_welfare);
        } else {
          alloc = allocate_basic(config, basic).allocation;
          metrics.welfare = welfare_basic(basic, alloc);
        }
        break;
      }
      case Scheduler::AuctionExtended: {
        if (options.payments_enabled) {
          AuctionResult auction = run_auction_extended(config, bids, options.payments);
          for (const auto& [id, charge] : auction.charges) metrics.per_bidder_payment[id] = charge;
          alloc = std::move(auction.allocation);
          metrics.welfare = std::move(auction.social_welfare);
        } else {
          alloc = allocate_extended(config, bids).allocation;
          metrics.welfare = welfare_extended(bids, alloc, config);
        }
        break;
      }
      case Scheduler::RoundRobin: {
        RoundRobinOutcome rr = round_robin(config, bids, rr_cursor);
        rr_cursor = rr.next_cursor;
        alloc = std::move(rr.allocation);
        metrics.welfare = capped_welfare(config, bids, alloc);
        break;
      }
      case Scheduler::BestCqi: {
        alloc = best_cqi(config, bids);
        metrics.welfare = capped_welfare(config, bids, alloc);
        break;
      }
    }
    metrics.runtime_us = std::chrono::duration_cast<std::chrono::microseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();

    if (is_auction) {
      require_feasible(config, bids, alloc, slot);
    } else {
      const std::vector<ExtendedBid> effective = effective_bids(bids, alloc);
      require_feasible(config, effective, alloc, slot);
    }

    metrics.throughput_bits = raw_throughput_bits(config, bids, alloc);
    for (const ExtendedBid& b : bids)
      metrics.per_bidder_throughput[b.bidder_id] =
          delivered_bits(config, b, alloc.rbs_of(b.bidder_id));
    metrics.num_winners = alloc.num_winners();
    metrics.reserved_rbs = static_cast<int>(alloc.reserved.size());

    if (options.oracle_enabled && config.num_rbs <= kOracleMaxRbsExtended) {
      std::optional<Rat> opt;
      if (options.scheduler == Scheduler::AuctionBasic &&
          bids.size() <= static_cast<size_t>(kOracleMaxBiddersBasic)) {
        opt = optimal_basic(config, to_basic_bids(bids)).welfare;
      } else if (options.scheduler != Scheduler::AuctionBasic &&
                 bids.size() <= static_cast<size_t>(kOracleMaxBiddersExtended)) {
        opt = optimal_extended(config, bids).welfare;
      }
      if (opt) {
        metrics.welfare_opt = *opt;
        metrics.ratio = *opt == 0 ? 1.0 : Rat(metrics.welfare / *opt).get_d();
      }
    }

    result.slots.push_back(std::move(metrics));
  }

  // Aggregate.
  SimulationSummary& summary = result.summary;
  summary.num_slots = static_cast<int>(result.slots.size());
  summary.total_welfare = 0;
  summary.total_throughput_bits = 0;
  double runtime_total = 0;
  double ratio_total = 0;
  int ratio_count = 0;
  for (const SlotMetrics& m : result.slots) {
    summary.total_welfare += m.welfare;
    summary.total_throughput_bits += m.throughput_bits;
    runtime_total += static_cast<double>(m.runtime_us);
    if (m.ratio) {
      ratio_total += *m.ratio;
      ++ratio_count;
      if (!summary.min_ratio || *m.ratio < *summary.min_ratio) summary.min_ratio = *m.ratio;
    }
    for (const auto& [id, bits] : m.per_bidder_throughput) summary.per_bidder_throughput[id] += bits;
    for (const auto& [id, paid] : m.per_bidder_payment) summary.per_bidder_payment[id] += paid;
  }
  if (summary.num_slots > 0) {
    summary.mean_welfare = summary.total_welfare / summary.num_slots;
    summary.mean_throughput_bits = summary.total_throughput_bits / summary.num_slots;
    summary.mean_runtime_us = runtime_total / summary.num_slots;
  }
  if (ratio_count > 0) summary.mean_ratio = ratio_total / ratio_count;
  return result;
}

}  // namespace hetnet
