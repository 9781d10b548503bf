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

AuctionResult run_auction_basic(const SlotConfig& config, const std::vector<Bid>& bids,
                                const PaymentParams& params) {
  BasicOutcome outcome = allocate_basic(config, bids);
  auto rule = [](const SlotConfig& c, const std::vector<Bid>& b) {
    return allocate_basic(c, b).allocation;
  };
  AuctionResult result = run_auction<Bid>(rule, config, bids, params);
  result.duals = to_snapshot(outcome.duals);
  return result;
}

AuctionResult run_auction_extended(const SlotConfig& config, const std::vector<ExtendedBid>& bids,
                                   const PaymentParams& params) {
  ExtendedOutcome outcome = allocate_extended(config, bids);
  auto rule = [](const SlotConfig& c, const std::vector<ExtendedBid>& b) {
    return allocate_extended(c, b).allocation;
  };
  AuctionResult result = run_auction<ExtendedBid>(rule, config, bids, params);
  result.duals = to_snapshot(outcome.duals);
  return result;
}

Rat utility_basic(const AuctionResult& result, int bidder_id, const Rat& true_value) {
  if (!result.allocation.is_winner(bidder_id)) return 0;
  auto it = result.payments.find(bidder_id);
  const Rat payment = it == result.payments.end() ? Rat(0) : it->second;
  return true_value - payment;
}

Rat utility_extended(const AuctionResult& result, const SlotConfig& config,
                     std::span<const ExtendedBid> bids, int bidder_id,
                     const Rat& true_unit_value) {
  if (!result.allocation.is_winner(bidder_id)) return 0;
  const ExtendedBid* bid = nullptr;
  for (const ExtendedBid& b : bids)
    if (b.bidder_id == bidder_id) bid = &b;
  if (bid == nullptr)
    throw Error(Errc::BadArgument, "bidder " + std::to_string(bidder_id) + " not in the roster");
  const Rat bits = delivered_bits(config, *bid, result.allocation.rbs_of(bidder_id));
  auto it = result.payments.find(bidder_id);
  const Rat unit_payment = it == result.payments.end() ? Rat(0) : it->second;
  return (true_unit_value - unit_payment) * bits;
}

}  // namespace hetnet
