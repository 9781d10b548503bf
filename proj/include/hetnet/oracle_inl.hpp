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

#include "hetnet/payments.hpp"

namespace hetnet {

template <class BidT, class Rule>
std::optional<Rat> sweep_critical_price(Rule&& rule, const SlotConfig& config,
                                        const std::vector<BidT>& bids, int bidder_id,
                                        const Rat& grid_step) {
  if (grid_step <= 0) throw Error(Errc::BadArgument, "grid step must be positive");
  size_t pos = bids.size();
  for (size_t i = 0; i < bids.size(); ++i)
    if (bids[i].bidder_id == bidder_id) pos = i;
  if (pos == bids.size())
    throw Error(Errc::BadArgument, "bidder " + std::to_string(bidder_id) + " not in the roster");

  const Rat submitted = bid_price(bids[pos]);
  std::vector<BidT> probe_bids = bids;
  for (Rat price = 0; price <= submitted; price += grid_step) {
    set_bid_price(probe_bids[pos], price);
    if (rule(config, probe_bids).is_winner(bidder_id)) return price;
  }
  return std::nullopt;
}

}  // namespace hetnet
