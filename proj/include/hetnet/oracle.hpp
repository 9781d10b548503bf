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

#include <optional>
#include <span>
#include <vector>

#include "hetnet/core.hpp"

namespace hetnet {

inline constexpr int kOracleMaxBiddersBasic = 22;
inline constexpr int kOracleMaxBiddersExtended = 14;
inline constexpr int kOracleMaxRbsExtended = 32;

struct OracleOutcome {
  Rat welfare;
  Allocation allocation;
};

/// Exact optimum of the homogeneous winner determination problem by
/// exhaustive winner-set enumeration. A set is feasible iff its total demand
/// plus the largest winning relay demand fits in N. Welfare ties prefer the
/// lexicographically smallest winner-id set. Winners are materialized on
/// consecutive blocks in ascending id order. Throws TooLarge above
/// kOracleMaxBiddersBasic bidders.
OracleOutcome optimal_basic(const SlotConfig& config, std::span<const Bid> bids);

/// Exact optimum of the heterogeneous problem: winner sets are enumerated as
/// above; for each set the block assignment is solved exactly as a
/// transportation problem over sub-bands (winners supply their demand,
/// sub-bands offer their block count), via min-cost max-flow in exact
/// rational arithmetic. Throws TooLarge above kOracleMaxBiddersExtended
/// bidders or kOracleMaxRbsExtended blocks.
OracleOutcome optimal_extended(const SlotConfig& config, std::span<const ExtendedBid> bids);

/// Independent check for the binary-search payments: scans the price grid
/// 0, step, 2*step, ... up to the submitted price and returns the smallest
/// winning price. Returns nullopt if the bidder never wins on the grid.
template <class BidT, class Rule>
std::optional<Rat> sweep_critical_price(Rule&& rule, const SlotConfig& config,
                                        const std::vector<BidT>& bids, int bidder_id,
                                        const Rat& grid_step);

}  // namespace hetnet

#include "hetnet/oracle_inl.hpp"
