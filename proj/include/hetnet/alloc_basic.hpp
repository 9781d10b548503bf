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

#include <map>
#include <span>
#include <vector>

#include "hetnet/core.hpp"

namespace hetnet {

/// Final dual state of the homogeneous greedy. `lambda` grows by a fixed
/// factor per admission; it is reported in floating point since the admission
/// test itself is carried out in exact integer arithmetic (admitted demand
/// against N - 2 * max demand, the log of the lambda budget).
struct DualStateBasic {
  double lambda = 0.0;
  std::map<int, double> rho;  // relay bidders only
  std::map<int, Rat> xi;      // 0 for losers, bid value for winners
  int iterations = 0;
};

/// N divided by the largest single demand. Governs the admission budget and
/// the worst-case welfare guarantee.
Rat delta(const SlotConfig& config, std::span<const Bid> bids);
Rat delta(const SlotConfig& config, std::span<const ExtendedBid> bids);

/// Worst-case welfare ratio (delta - 2) / (delta * e - 2) of the greedy
/// against the optimum. `e` is pinned to a rational slightly above its true
/// value, so the returned bound never exceeds the guaranteed ratio.
Rat approx_ratio_bound(const Rat& delta);

struct BasicOutcome {
  Allocation allocation;
  DualStateBasic duals;
};

/// Greedy primal-dual winner determination for homogeneous resource blocks:
/// bids are admitted in descending value-per-block order (ties to the lower
/// bidder id) while the admitted demand stays within N - 2 * max demand.
/// Winners receive consecutive blocks in admission order, followed by a
/// reservation sized to the largest winning relay demand. The result always
/// satisfies check_feasibility.
BasicOutcome allocate_basic(const SlotConfig& config, std::span<const Bid> bids);

DualSnapshot to_snapshot(const DualStateBasic& duals);

}  // namespace hetnet
