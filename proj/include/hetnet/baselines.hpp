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

#include <span>
#include <vector>

#include "hetnet/core.hpp"

namespace hetnet {

struct RoundRobinOutcome {
  Allocation allocation;
  int next_cursor = 0;
};

/// Reference scheduler: walks blocks 1..N handing each to the next bidder in
/// a fixed circular order (the input order) starting at `cursor`; demands and
/// prices are ignored. The start position rotates by one each slot so short
/// positions even out over time. If any relay received blocks, the tail of
/// the spectrum is converted into a reservation (shrinking assignments from
/// the highest block down) until it covers the largest relay holding.
RoundRobinOutcome round_robin(const SlotConfig& config, std::span<const ExtendedBid> bids,
                              int cursor);

/// Reference scheduler: every block goes to the bidder with the best CQI on
/// its sub-band (ties to the lower bidder id). Demands and prices are
/// ignored; the relay reservation is carved from the tail as in round_robin.
Allocation best_cqi(const SlotConfig& config, std::span<const ExtendedBid> bids);

/// Demand-ignoring schedulers cannot satisfy the exact-demand constraint as
/// submitted; for feasibility audits their winners' demands are restated as
/// the block counts actually received.
std::vector<ExtendedBid> effective_bids(std::span<const ExtendedBid> bids,
                                        const Allocation& alloc);

/// Comparison welfare for demand-ignoring schedulers: each bidder's value
/// counts only on its best `demand_rbs` assigned blocks; anything beyond the
/// demand contributes nothing.
Rat capped_welfare(const SlotConfig& config, std::span<const ExtendedBid> bids,
                   const Allocation& alloc);

/// Unweighted throughput: information bits over all assigned blocks.
/// Reserved blocks carry none.
Rat raw_throughput_bits(const SlotConfig& config, std::span<const ExtendedBid> bids,
                        const Allocation& alloc);

}  // namespace hetnet
