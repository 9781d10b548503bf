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

#include "hetnet/core.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace hetnet {

const char* bidder_kind_name(BidderKind kind) {
  return kind == BidderKind::RelayNode ? "RN" : "UE";
}

// ---------------------------------------------------------------------------
// CqiRateTable
// ---------------------------------------------------------------------------

CqiRateTable::CqiRateTable() : CqiRateTable(default_table().bits_per_rb_) {}

CqiRateTable::CqiRateTable(std::array<Rat, kLevels> bits_per_rb)
    : bits_per_rb_(std::move(bits_per_rb)) {
  if (bits_per_rb_[0] != 0)
    throw Error(Errc::BadConfig, "rate table must map CQI 0 to zero bits");
  for (int c = 0; c < kLevels; ++c) {
    if (bits_per_rb_[c] < 0)
      throw Error(Errc::BadConfig, "rate table entries must be nonnegative");
    if (c > 0 && bits_per_rb_[c] < bits_per_rb_[c - 1])
      throw Error(Errc::BadConfig, "rate table must be monotone non-decreasing");
  }
}

const Rat& CqiRateTable::bits_per_rb(int cqi) const {
  if (cqi < 0 || cqi >= kLevels)
    throw Error(Errc::CqiOutOfRange, "CQI " + std::to_string(cqi) + " outside [0,15]");
  return bits_per_rb_[cqi];
}

CqiRateTable CqiRateTable::default_table() {
  // Modulation/coding efficiencies scaled to information bits per RB.
  static const long kBits[kLevels] = {0,   13,  20,  32,  51,  74,  99,  124,
                                      161, 202, 229, 279, 328, 380, 430, 467};
  std::array<Rat, kLevels> t;
  for (int c = 0; c < kLevels; ++c) t[c] = Rat(kBits[c]);
  return CqiRateTable(std::move(t));
}

CqiRateTable CqiRateTable::constant_table(const Rat& bits) {
  std::array<Rat, kLevels> t;
  t[0] = 0;
  for (int c = 1; c < kLevels; ++c) t[c] = bits;
  return CqiRateTable(std::move(t));
}

CqiRateTable CqiRateTable::identity_table() {
  std::array<Rat, kLevels> t;
  for (int c = 0; c < kLevels; ++c) t[c] = Rat(c);
  return CqiRateTable(std::move(t));
}

// ---------------------------------------------------------------------------
// Allocation
// ---------------------------------------------------------------------------

bool Allocation::is_winner(int bidder_id) const {
  auto it = winners.find(bidder_id);
  return it != winners.end() && it->second;
}

const std::vector<int>& Allocation::rbs_of(int bidder_id) const {
  static const std::vector<int> kEmpty;
  auto it = assignment.find(bidder_id);
  return it == assignment.end() ? kEmpty : it->second;
}

int Allocation::num_winners() const {
  int n = 0;
  for (const auto& [id, won] : winners)
    if (won) ++n;
  return n;
}

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

namespace {

void validate_config(const SlotConfig& config) {
  if (config.num_rbs < 1)
    throw Error(Errc::BadConfig, "need at least one resource block");
  if (config.subband_size < 1)
    throw Error(Errc::BadConfig, "sub-band size must be positive");
  if (config.num_rbs % config.subband_size != 0)
    throw Error(Errc::BadConfig, "resource block count must be divisible by the sub-band size");
}

// Shared per-bidder fields; lets one audit serve both bid flavours.
struct BidView {
  int id;
  BidderKind kind;
  int demand;
};

BidView view_of(const Bid& b) { return {b.bidder_id, b.kind, b.demand_rbs}; }
BidView view_of(const ExtendedBid& b) { return {b.bidder_id, b.kind, b.demand_rbs}; }

template <class BidT>
void check_common(const SlotConfig& config, std::span<const BidT> bids) {
  validate_config(config);
  std::unordered_set<int> seen;
  for (const BidT& b : bids) {
    if (b.bidder_id < 0)
      throw Error(Errc::BadArgument, "bidder id must be nonnegative");
    if (!seen.insert(b.bidder_id).second)
      throw Error(Errc::DuplicateBidder, "bidder " + std::to_string(b.bidder_id) + " appears twice");
    if (b.demand_rbs < 1)
      throw Error(Errc::InvalidDemand,
                  "bidder " + std::to_string(b.bidder_id) + " requests " + std::to_string(b.demand_rbs) + " blocks");
  }
}

void check_values(std::span<const Bid> bids) {
  for (const Bid& b : bids)
    if (b.value < 0)
      throw Error(Errc::NegativeValue, "bidder " + std::to_string(b.bidder_id) + " bids a negative value");
}

void check_values(std::span<const ExtendedBid> bids) {
  for (const ExtendedBid& b : bids)
    if (b.unit_value < 0)
      throw Error(Errc::NegativeValue, "bidder " + std::to_string(b.bidder_id) + " bids a negative unit price");
}

void check_cqi(const SlotConfig&, std::span<const Bid>) {}

void check_cqi(const SlotConfig& config, std::span<const ExtendedBid> bids) {
  const size_t want = static_cast<size_t>(config.num_subbands());
  for (const ExtendedBid& b : bids) {
    if (b.cqi.size() != want)
      throw Error(Errc::CqiLengthMismatch,
                  "bidder " + std::to_string(b.bidder_id) + " reports " + std::to_string(b.cqi.size()) +
                      " sub-band CQIs, expected " + std::to_string(want));
    for (int c : b.cqi)
      if (c < 0 || c >= CqiRateTable::kLevels)
        throw Error(Errc::CqiOutOfRange,
                    "bidder " + std::to_string(b.bidder_id) + " reports CQI " + std::to_string(c));
  }
}

template <class BidT>
void check_delta(const SlotConfig& config, std::span<const BidT> bids) {
  if (bids.empty()) return;
  const int m = max_demand(bids);
  // The greedy admission exponent and the ratio bound need N > 2 * max demand.
  if (config.num_rbs - 2 * m <= 0)
    throw Error(Errc::DeltaTooSmall,
                "largest demand " + std::to_string(m) + " must be below half of " +
                    std::to_string(config.num_rbs) + " blocks");
}

}  // namespace

int max_demand(std::span<const Bid> bids) {
  int m = 0;
  for (const Bid& b : bids) m = std::max(m, b.demand_rbs);
  return m;
}

int max_demand(std::span<const ExtendedBid> bids) {
  int m = 0;
  for (const ExtendedBid& b : bids) m = std::max(m, b.demand_rbs);
  return m;
}

void validate(const SlotConfig& config, std::span<const Bid> bids) {
  validate_structure(config, bids);
  check_delta(config, bids);
}

void validate(const SlotConfig& config, std::span<const ExtendedBid> bids) {
  validate_structure(config, bids);
  check_delta(config, bids);
}

void validate_structure(const SlotConfig& config, std::span<const Bid> bids) {
  check_common(config, bids);
  check_values(bids);
  check_cqi(config, bids);
}

void validate_structure(const SlotConfig& config, std::span<const ExtendedBid> bids) {
  check_common(config, bids);
  check_values(bids);
  check_cqi(config, bids);
}

// ---------------------------------------------------------------------------
// Feasibility audit
// ---------------------------------------------------------------------------

const char* violation_kind_name(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::DemandMismatch: return "DemandMismatch";
    case Violation::Kind::LoserAssigned: return "LoserAssigned";
    case Violation::Kind::UnknownBidder: return "UnknownBidder";
    case Violation::Kind::RbOutOfRange: return "RbOutOfRange";
    case Violation::Kind::RbOverlap: return "RbOverlap";
    case Violation::Kind::ReservationShortfall: return "ReservationShortfall";
  }
  return "Unknown";
}

namespace {

std::vector<Violation> audit(const SlotConfig& config, const std::vector<BidView>& bids,
                             const Allocation& alloc) {
  std::vector<Violation> out;
  std::unordered_map<int, const BidView*> roster;
  for (const BidView& b : bids) roster[b.id] = &b;

  auto known = [&](int id) { return roster.count(id) != 0; };

  for (const auto& [id, won] : alloc.winners) {
    if (won && !known(id))
      out.push_back({Violation::Kind::UnknownBidder, id, -1,
                     "winner flag for unknown bidder " + std::to_string(id)});
  }

  std::unordered_map<int, int> holder_of_rb;  // rb -> bidder id (or -2 for reserved)
  auto place = [&](int rb, int holder_id) {
    if (rb < 1 || rb > config.num_rbs) {
      out.push_back({Violation::Kind::RbOutOfRange, holder_id, rb,
                     "block " + std::to_string(rb) + " outside [1," + std::to_string(config.num_rbs) + "]"});
      return;
    }
    auto [it, inserted] = holder_of_rb.emplace(rb, holder_id);
    if (!inserted)
      out.push_back({Violation::Kind::RbOverlap, holder_id, rb,
                     "block " + std::to_string(rb) + " already held by " +
                         (it->second == -2 ? std::string("the reservation") : std::to_string(it->second))});
  };

  for (const auto& [id, rbs] : alloc.assignment) {
    if (!known(id)) {
      if (!rbs.empty())
        out.push_back({Violation::Kind::UnknownBidder, id, -1,
                       "assignment for unknown bidder " + std::to_string(id)});
      continue;
    }
    const bool won = alloc.is_winner(id);
    if (!won && !rbs.empty())
      out.push_back({Violation::Kind::LoserAssigned, id, -1,
                     "losing bidder " + std::to_string(id) + " holds " + std::to_string(rbs.size()) + " blocks"});
    if (won && static_cast<int>(rbs.size()) != roster[id]->demand)
      out.push_back({Violation::Kind::DemandMismatch, id, -1,
                     "winner " + std::to_string(id) + " holds " + std::to_string(rbs.size()) +
                         " blocks, demanded " + std::to_string(roster[id]->demand)});
    for (int rb : rbs) place(rb, id);
  }

  // Winners may legitimately be absent from `assignment` only if they demand
  // nothing, which validation forbids; flag them as demand mismatches.
  for (const auto& [id, won] : alloc.winners) {
    if (won && known(id) && alloc.assignment.find(id) == alloc.assignment.end())
      out.push_back({Violation::Kind::DemandMismatch, id, -1,
                     "winner " + std::to_string(id) + " holds no blocks"});
  }

  for (int rb : alloc.reserved) place(rb, -2);

  const int reserved_count = static_cast<int>(alloc.reserved.size());
  for (const BidView& b : bids) {
    if (b.kind != BidderKind::RelayNode || !alloc.is_winner(b.id)) continue;
    const int held = static_cast<int>(alloc.rbs_of(b.id).size());
    if (held > reserved_count)
      out.push_back({Violation::Kind::ReservationShortfall, b.id, -1,
                     "relay " + std::to_string(b.id) + " holds " + std::to_string(held) +
                         " blocks but only " + std::to_string(reserved_count) + " are reserved"});
  }

  return out;
}

}  // namespace

std::vector<Violation> check_feasibility(const SlotConfig& config, std::span<const Bid> bids,
                                         const Allocation& alloc) {
  std::vector<BidView> views;
  views.reserve(bids.size());
  for (const Bid& b : bids) views.push_back(view_of(b));
  return audit(config, views, alloc);
}

std::vector<Violation> check_feasibility(const SlotConfig& config,
                                         std::span<const ExtendedBid> bids,
                                         const Allocation& alloc) {
  std::vector<BidView> views;
  views.reserve(bids.size());
  for (const ExtendedBid& b : bids) views.push_back(view_of(b));
  return audit(config, views, alloc);
}

// ---------------------------------------------------------------------------
// Welfare
// ---------------------------------------------------------------------------

Rat welfare_basic(std::span<const Bid> bids, const Allocation& alloc) {
  Rat total = 0;
  for (const Bid& b : bids)
    if (alloc.is_winner(b.bidder_id)) total += b.value;
  return total;
}

Rat rb_value(const ExtendedBid& bid, int rb, const SlotConfig& config) {
  if (rb < 1 || rb > config.num_rbs)
    throw Error(Errc::BadArgument, "resource block " + std::to_string(rb) + " out of range");
  const int sb = config.subband_of_rb(rb);
  if (sb >= static_cast<int>(bid.cqi.size()))
    throw Error(Errc::CqiLengthMismatch, "bid has no CQI for sub-band " + std::to_string(sb));
  return bid.unit_value * config.rates.bits_per_rb(bid.cqi[sb]);
}

Rat delivered_bits(const SlotConfig& config, const ExtendedBid& bid,
                   const std::vector<int>& rbs) {
  Rat bits = 0;
  for (int rb : rbs) {
    const int sb = config.subband_of_rb(rb);
    bits += config.rates.bits_per_rb(bid.cqi.at(static_cast<size_t>(sb)));
  }
  return bits;
}

Rat welfare_extended(std::span<const ExtendedBid> bids, const Allocation& alloc,
                     const SlotConfig& config) {
  Rat total = 0;
  for (const ExtendedBid& b : bids) {
    if (!alloc.is_winner(b.bidder_id)) continue;
    total += b.unit_value * delivered_bits(config, b, alloc.rbs_of(b.bidder_id));
  }
  return total;
}

}  // namespace hetnet
