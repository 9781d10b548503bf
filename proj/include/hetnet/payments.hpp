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

#include <future>
#include <span>
#include <utility>
#include <vector>

#include "hetnet/alloc_basic.hpp"
#include "hetnet/alloc_extended.hpp"
#include "hetnet/core.hpp"

namespace hetnet {

/// Binary-search controls for critical prices. The search stops once the
/// bracket width falls below epsilon_rel times the bidder's submitted price,
/// keeping the probe count stable across valuation scales.
struct PaymentParams {
  Rat epsilon_rel = Rat(1, 1000000);
  int jobs = 1;  // parallel per-winner searches; results are order-independent
};

inline const Rat& bid_price(const Bid& b) { return b.value; }
inline const Rat& bid_price(const ExtendedBid& b) { return b.unit_value; }
inline void set_bid_price(Bid& b, Rat price) { b.value = std::move(price); }
inline void set_bid_price(ExtendedBid& b, Rat price) { b.unit_value = std::move(price); }

struct CriticalPriceResult {
  Rat price;
  int probes = 0;
};

/// Critical price of a winning bidder under an arbitrary deterministic
/// allocation rule: binary search on [0, submitted price], rerunning the rule
/// with the probe price substituted and all other bids fixed. Requires the
/// rule to be winner-monotone in the bidder's own price. The returned price
/// is the final bracket midpoint, within epsilon_rel * price of the true
/// threshold. Throws NotAWinner if the bidder loses as submitted.
template <class BidT, class Rule>
CriticalPriceResult critical_payment_detail(Rule&& rule, const SlotConfig& config,
                                            const std::vector<BidT>& bids, int bidder_id,
                                            const PaymentParams& params = {}) {
  if (params.epsilon_rel <= 0 || params.epsilon_rel >= 1)
    throw Error(Errc::BadArgument, "epsilon_rel must lie in (0, 1)");

  size_t pos = bids.size();
  for (size_t i = 0; i < bids.size(); ++i)
    if (bids[i].bidder_id == bidder_id) pos = i;
  if (pos == bids.size())
    throw Error(Errc::BadArgument, "bidder " + std::to_string(bidder_id) + " not in the roster");

  if (!rule(config, bids).is_winner(bidder_id))
    throw Error(Errc::NotAWinner, "bidder " + std::to_string(bidder_id) + " lost; payment is zero");

  const Rat submitted = bid_price(bids[pos]);
  CriticalPriceResult result;
  if (submitted == 0) {
    result.price = 0;
    return result;
  }

  std::vector<BidT> probe_bids = bids;
  Rat lo = 0;               // loses here (by convention; never probed)
  Rat hi = submitted;       // wins here
  const Rat stop = params.epsilon_rel * submitted;
  while (hi - lo > stop) {
    Rat mid = (lo + hi) / 2;
    set_bid_price(probe_bids[pos], mid);
    ++result.probes;
    if (rule(config, probe_bids).is_winner(bidder_id))
      hi = std::move(mid);
    else
      lo = std::move(mid);
  }
  result.price = (lo + hi) / 2;
  return result;
}

template <class BidT, class Rule>
Rat critical_payment(Rule&& rule, const SlotConfig& config, const std::vector<BidT>& bids,
                     int bidder_id, const PaymentParams& params = {}) {
  return critical_payment_detail(std::forward<Rule>(rule), config, bids, bidder_id, params).price;
}

namespace detail {

inline Rat auction_welfare(const SlotConfig&, std::span<const Bid> bids, const Allocation& alloc) {
  return welfare_basic(bids, alloc);
}
inline Rat auction_welfare(const SlotConfig& config, std::span<const ExtendedBid> bids,
                           const Allocation& alloc) {
  return welfare_extended(bids, alloc, config);
}

// Monetary amount due given the per-model payment.
inline Rat charge_of(const SlotConfig&, const Bid&, const Allocation&, const Rat& payment) {
  return payment;
}
inline Rat charge_of(const SlotConfig& config, const ExtendedBid& bid, const Allocation& alloc,
                     const Rat& unit_payment) {
  return unit_payment * delivered_bits(config, bid, alloc.rbs_of(bid.bidder_id));
}

}  // namespace detail

/// Runs an allocation rule once, then prices every winner at its critical
/// price; losers pay zero. Winner searches are independent and may run on
/// params.jobs threads.
template <class BidT, class Rule>
AuctionResult run_auction(Rule&& rule, const SlotConfig& config, const std::vector<BidT>& bids,
                          const PaymentParams& params = {}) {
  AuctionResult result;
  result.allocation = rule(config, bids);
  result.social_welfare = detail::auction_welfare(config, bids, result.allocation);

  std::vector<size_t> winner_positions;
  for (size_t i = 0; i < bids.size(); ++i) {
    result.payments[bids[i].bidder_id] = 0;
    result.charges[bids[i].bidder_id] = 0;
    if (result.allocation.is_winner(bids[i].bidder_id)) winner_positions.push_back(i);
  }

  std::vector<Rat> prices(winner_positions.size());
  auto worker = [&](size_t begin, size_t end) {
    for (size_t w = begin; w < end; ++w)
      prices[w] = critical_payment(rule, config, bids, bids[winner_positions[w]].bidder_id, params);
  };
  const int jobs = std::max(1, params.jobs);
  if (jobs == 1 || winner_positions.size() < 2) {
    worker(0, winner_positions.size());
  } else {
    std::vector<std::future<void>> futures;
    const size_t chunk = (winner_positions.size() + jobs - 1) / jobs;
    for (size_t begin = 0; begin < winner_positions.size(); begin += chunk)
      futures.push_back(std::async(std::launch::async, worker, begin,
                                   std::min(begin + chunk, winner_positions.size())));
    for (auto& f : futures) f.get();
  }

  for (size_t w = 0; w < winner_positions.size(); ++w) {
    const BidT& bid = bids[winner_positions[w]];
    result.payments[bid.bidder_id] = prices[w];
    result.charges[bid.bidder_id] = detail::charge_of(config, bid, result.allocation, prices[w]);
  }
  return result;
}

/// The two shipped auctions: greedy allocation plus critical-price payments.
AuctionResult run_auction_basic(const SlotConfig& config, const std::vector<Bid>& bids,
                                const PaymentParams& params = {});
AuctionResult run_auction_extended(const SlotConfig& config, const std::vector<ExtendedBid>& bids,
                                   const PaymentParams& params = {});

/// Truthful-bidding utility: what the bidder gains given its true valuation.
/// Winners: true value minus payment; losers: zero.
Rat utility_basic(const AuctionResult& result, int bidder_id, const Rat& true_value);

/// Heterogeneous model: (true unit value - unit payment) * delivered bits.
Rat utility_extended(const AuctionResult& result, const SlotConfig& config,
                     std::span<const ExtendedBid> bids, int bidder_id,
                     const Rat& true_unit_value);

}  // namespace hetnet
