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

#include <istream>
#include <string>
#include <vector>

#include "hetnet/core.hpp"
#include "hetnet/sim.hpp"

namespace hetnet {

/// Config JSON: {"num_rbs": N, "subband_size": S, "rate_table": [16 entries]}.
/// Rate entries may be integers, decimals (converted exactly), or strings
/// like "13/4". An absent rate_table selects the bundled default.
SlotConfig load_config_json(std::istream& in);
SlotConfig load_config_file(const std::string& path);

/// Bids CSV, one bidder per row.
///   homogeneous:   bidder_id,kind,demand_r,value
///   heterogeneous: bidder_id,kind,demand_r,unit_value,cqi_0,...
/// kind is UE or RN. '#' comments, blank lines and an optional header row
/// are skipped. Errors carry the offending line number.
std::vector<Bid> load_basic_bids_csv(std::istream& in);
std::vector<Bid> load_basic_bids_file(const std::string& path);
std::vector<ExtendedBid> load_extended_bids_csv(std::istream& in);
std::vector<ExtendedBid> load_extended_bids_file(const std::string& path);

/// Scenario JSON; every field optional, defaults as in ScenarioSpec.
/// Prices accept the same forms as rate entries.
ScenarioSpec load_scenario_json(std::istream& in);
ScenarioSpec load_scenario_file(const std::string& path);

/// Stable-key JSON renderings. Rationals appear as exact "p/q" strings next
/// to a reader-friendly double.
std::string auction_result_to_json(const AuctionResult& result, int indent = 2);
std::string summary_to_json(const SimulationResult& result, int indent = 2);

/// One CSV row per slot:
/// slot,num_bidders,welfare,welfare_opt,ratio,throughput_bits,num_winners,reserved_rbs
/// Rationals are exact strings; optional fields are empty when absent.
/// Byte-identical across runs with the same seed (timings are reported only
/// in the JSON summary).
std::string metrics_to_csv(const SimulationResult& result);

}  // namespace hetnet
