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

#include "hetnet/baselines.hpp"

#include <algorithm>

namespace hetnet {

namespace {

// Converts tail blocks into the relay reservation until it covers the
// largest relay holding, then marks winners and sorts assignments.
void finalize_baseline(const SlotConfig& config, std::span<const ExtendedBid> bids,
                       std::vector<int>& holder_of_rb, Allocation& alloc) {
  std::vector<int> held(bids.size(), 0);
  for (int holder : holder_of_rb)
    if (holder >= 0) ++held[static_cast<size_t>(holder)];

  auto relay_need = [&] {
    int need = 0;
    for (size_t i = 0; i < bids.size(); ++i)
      if (bids[i].kind == BidderKind::RelayNode) need = std::max(need, held[i]);
    return need;
  };

  int reserved_count = 0;
  int tail = config.num_rbs - 1;  // 0-based scan from the highest block
  while (reserved_count < relay_need() && tail >= 0) {
    const int holder = holder_of_rb[static_cast<size_t>(tail)];
    if (holder >= 0) {
      holder_of_rb[static_cast<size_t>(tail)] = -2;  // reserved
      --held[static_cast<size_t>(holder)];
      ++reserved_count;
    }
    --tail;
  }

  for (const ExtendedBid& b : bids) {
    alloc.winners[b.bidder_id] = false;
    alloc.assignment[b.bidder_id] = {};
  }
  for (int rb0 = 0; rb0 < config.num_rbs; ++rb0) {
    const int holder = holder_of_rb[static_cast<size_t>(rb0)];
    if (holder == -2) {
      alloc.reserved.push_back(rb0 + 1);
    } else if (holder >= 0) {
      alloc.assignment[bids[static_cast<size_t>(holder)].bidder_id].push_back(rb0 + 1);
    }
  }
  for (const ExtendedBid& b : bids)
    alloc.winners[b.bidder_id] = !alloc.assignment[b.bidder_id].empty();
}

}  // namespace

RoundRobinOutcome round_robin(const SlotConfig& config, std::span<const ExtendedBid> bids,
                              int cursor) {
  validate_structure(config, bids);
  RoundRobinOutcome out;
  const int count = static_cast<int>(bids.size());
  if (count == 0) {
    out.next_cursor = 0;
    return out;
  }
  cursor = (cursor % count + count) % count;

  std::vector<int> holder_of_rb(static_cast<size_t>(config.num_rbs));
  for (int rb0 = 0; rb0 < config.num_rbs; ++rb0)
    holder_of_rb[static_cast<size_t>(rb0)] = (cursor + rb0) % count;

  finalize_baseline(config, bids, holder_of_rb, out.allocation);
  out.next_cursor = (cursor + 1) % count;
  return out;
}

Allocation best_cqi(const SlotConfig& config, std::span<const ExtendedBid> bids) {
  validate_structure(config, bids);
  Allocation alloc;
  if (bids.empty()) return alloc;

  std::vector<int> holder_of_rb(static_cast<size_t>(config.num_rbs), -1);
  for (int rb0 = 0; rb0 < config.num_rbs; ++rb0) {
    const int sb = rb0 / config.subband_size;
    int best = -1;
    int best_cqi_value = -1;
    int best_id = 0;
    for (size_t i = 0; i < bids.size(); ++i) {
      const int c = bids[i].cqi[static_cast<size_t>(sb)];
      if (c > best_cqi_value ||
          (c == best_cqi_value && bids[i].bidder_id < best_id)) {
        best = static_cast<int>(i);
        best_cqi_value = c;
        best_id = bids[i].bidder_id;
      }
    }
    holder_of_rb[static_cast<size_t>(rb0)] = best;
  }

  finalize_baseline(config, bids, holder_of_rb, alloc);
  return alloc;
}

std::vector<ExtendedBid> effective_bids(std::span<const ExtendedBid> bids,
                                        const Allocation& alloc) {
  std::vector<ExtendedBid> out(bids.begin(), bids.end());
  for (ExtendedBid& b : out) {
    if (alloc.is_winner(b.bidder_id))
      b.demand_rbs = static_cast<int>(alloc.rbs_of(b.bidder_id).size());
  }
  return out;
}

Rat capped_welfare(const SlotConfig& config, std::span<const ExtendedBid> bids,
                   const Allocation& alloc) {
  Rat total = 0;
  for (const ExtendedBid& b : bids) {
    const std::vector<int>& rbs = alloc.rbs_of(b.bidder_id);
    if (rbs.empty()) continue;
    std::vector<Rat> bits;
    bits.reserve(rbs.size());
    for (int rb : rbs)
      bits.push_back(config.rates.bits_per_rb(b.cqi[static_cast<size_t>(config.subband_of_rb(rb))]));
    const size_t keep = std::min(bits.size(), static_cast<size_t>(b.demand_rbs));
    std::partial_sort(bits.begin(), bits.begin() + static_cast<long>(keep), bits.end(),
                      [](const Rat& a, const Rat& c) { return a > c; });
    for (size_t i = 0; i < keep; ++i) total += b.unit_value * bits[i];
  }
  return total;
}

Rat raw_throughput_bits(const SlotConfig& config, std::span<const ExtendedBid> bids,
                        const Allocation& alloc) {
  Rat total = 0;
  for (const ExtendedBid& b : bids) total += delivered_bits(config, b, alloc.rbs_of(b.bidder_id));
  return total;
}

}  // namespace hetnet
