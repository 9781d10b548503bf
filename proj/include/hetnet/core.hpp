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

#include <array>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "hetnet/errors.hpp"
#include "hetnet/rational.hpp"

namespace hetnet {

/// A bidder is either a relay node, which must be backed by spectrum reserved
/// for its inner-cell retransmission, or a user equipment served directly by
/// the donor base station.
enum class BidderKind { RelayNode, DirectUE };

const char* bidder_kind_name(BidderKind kind);

/// Homogeneous-model bid: `value` is the total willingness-to-pay for
/// `demand_rbs` resource blocks.
struct Bid {
  int bidder_id = 0;
  BidderKind kind = BidderKind::DirectUE;
  int demand_rbs = 1;
  Rat value;
};

/// Heterogeneous-model bid: `unit_value` is the price per unit of delivered
/// data, and `cqi` holds one reported channel quality per sub-band.
struct ExtendedBid {
  int bidder_id = 0;
  BidderKind kind = BidderKind::DirectUE;
  int demand_rbs = 1;
  Rat unit_value;
  std::vector<int> cqi;
};

/// Maps a CQI level (0..15) to the information bits one resource block
/// carries at that level. Level 0 means an unusable channel and always maps
/// to zero; the table must be monotone non-decreasing.
class CqiRateTable {
 public:
  static constexpr int kLevels = 16;

  CqiRateTable();  // default_table()
  explicit CqiRateTable(std::array<Rat, kLevels> bits_per_rb);

  const Rat& bits_per_rb(int cqi) const;
  const std::array<Rat, kLevels>& values() const { return bits_per_rb_; }

  /// Bundled default: standard modulation/coding efficiencies scaled to
  /// bits per resource block. Monotone; treated as an arbitrary input by
  /// every consumer.
  static CqiRateTable default_table();
  /// bits_per_rb[0] = 0, every other level = `bits`.
  static CqiRateTable constant_table(const Rat& bits);
  /// bits_per_rb[c] = c.
  static CqiRateTable identity_table();

 private:
  std::array<Rat, kLevels> bits_per_rb_;
};

/// Static description of one auction round: N resource blocks grouped into
/// sub-bands of S consecutive blocks each.
struct SlotConfig {
  int num_rbs = 0;
  int subband_size = 1;
  CqiRateTable rates;

  int num_subbands() const { return num_rbs / subband_size; }
  /// Sub-band index of resource block `rb`, with rb in [1, num_rbs].
  int subband_of_rb(int rb) const { return (rb - 1) / subband_size; }
};

/// Outcome of winner determination. `reserved` is the block of spectrum set
/// aside for relay-node inner communication; it belongs to no bidder.
struct Allocation {
  std::map<int, bool> winners;
  std::map<int, std::vector<int>> assignment;  // sorted RB indices, 1-based
  std::vector<int> reserved;                   // sorted RB indices, 1-based

  bool is_winner(int bidder_id) const;
  /// Assigned blocks of a bidder; empty for losers and unknown ids.
  const std::vector<int>& rbs_of(int bidder_id) const;
  int num_winners() const;
};

/// Final dual variables of a greedy run, kept for diagnostics. `lambda` has
/// one entry for the homogeneous rule and one entry per resource block for
/// the heterogeneous rule. Lambda and rho are reported in floating point;
/// they never participate in allocation decisions.
struct DualSnapshot {
  std::vector<double> lambda;
  std::map<int, double> rho;
  std::map<int, Rat> xi;
  int iterations = 0;
};

/// Allocation plus per-bidder payments.
/// `payments` is the per-model payment: the total charge in the homogeneous
/// model, the unit price in the heterogeneous model. `charges` is always the
/// monetary amount due (unit price times delivered bits in the heterogeneous
/// model; equal to `payments` otherwise).
struct AuctionResult {
  Allocation allocation;
  std::map<int, Rat> payments;
  std::map<int, Rat> charges;
  Rat social_welfare;
  DualSnapshot duals;
};

int max_demand(std::span<const Bid> bids);
int max_demand(std::span<const ExtendedBid> bids);

/// Full input validation: config sanity, unique ids, well-formed bids, CQI
/// vectors matching the sub-band count, and the allocation-rule domain
/// requirement N > 2 * max demand. Throws Error on the first problem found.
void validate(const SlotConfig& config, std::span<const Bid> bids);
void validate(const SlotConfig& config, std::span<const ExtendedBid> bids);

/// Same checks minus the N > 2 * max demand requirement. The exact solvers
/// accept any structurally sound instance.
void validate_structure(const SlotConfig& config, std::span<const Bid> bids);
void validate_structure(const SlotConfig& config, std::span<const ExtendedBid> bids);

struct Violation {
  enum class Kind {
    DemandMismatch,         // winner holds a number of RBs != its demand
    LoserAssigned,          // non-winner holds RBs
    UnknownBidder,          // allocation mentions an id outside the roster
    RbOutOfRange,           // RB index outside [1, N]
    RbOverlap,              // RB held by two parties (or listed twice)
    ReservationShortfall,   // winning relay holds more RBs than are reserved
  };
  Kind kind;
  int bidder_id = -1;  // -1 when not tied to a bidder
  int rb = -1;         // -1 when not tied to a block
  std::string detail;
};

const char* violation_kind_name(Violation::Kind kind);

/// Audits an allocation against the model constraints: winners hold exactly
/// their demand, losers hold nothing, no block is double-used, and the
/// reservation covers every winning relay. Violations are returned as data.
std::vector<Violation> check_feasibility(const SlotConfig& config,
                                         std::span<const Bid> bids,
                                         const Allocation& alloc);
std::vector<Violation> check_feasibility(const SlotConfig& config,
                                         std::span<const ExtendedBid> bids,
                                         const Allocation& alloc);

/// Sum of winning bids' values.
Rat welfare_basic(std::span<const Bid> bids, const Allocation& alloc);

/// Value of one resource block to one bidder: unit price times the bits the
/// block carries at the bidder's reported CQI for that sub-band.
Rat rb_value(const ExtendedBid& bid, int rb, const SlotConfig& config);

/// Sum over winners of the per-block values of their assigned blocks.
/// Reserved blocks contribute nothing.
Rat welfare_extended(std::span<const ExtendedBid> bids, const Allocation& alloc,
                     const SlotConfig& config);

/// Information bits delivered to `bid` over the given blocks.
Rat delivered_bits(const SlotConfig& config, const ExtendedBid& bid,
                   const std::vector<int>& rbs);

}  // namespace hetnet
