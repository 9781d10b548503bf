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

/// Final dual state of the heterogeneous greedy. The per-block lambdas are
/// initialized together and always receive the same multiplicative update, so
/// every entry is equal at every step; the vector form is kept to mirror the
/// per-block dual and the equality is asserted in tests.
struct DualStateExtended {
  std::vector<double> lambda_per_rb;
  std::map<int, double> rho;
  std::map<int, Rat> xi;
  int iterations = 0;
};

struct TopRSelection {
  std::vector<int> indices;  // 0-based, ascending
  Rat total;
};

/// Picks r entries of `values` with the largest sum. Ties prefer the lower
/// index. Selection by partial sort; O(|values| log |values|).
/// Throws RTooLarge when r exceeds the input size.
TopRSelection top_r_subset(std::span<const Rat> values, int r);

/// Same contract, computed by the table recurrence
///   f(k, r) = max{ f(k-1, r-1) + e_k, f(k-1, r) }
/// in O(|values| * r). Reference implementation; must agree with
/// top_r_subset on the total.
TopRSelection top_r_subset_dp(std::span<const Rat> values, int r);

/// Greedy selection key. TotalValue admits the bidder whose best block set
/// sums highest, the production rule. PerRbValue divides that sum by the
/// bidder's demand; experimental, not used by any shipped auction.
enum class SelectionCriterion { TotalValue, PerRbValue };

struct ExtendedOutcome {
  Allocation allocation;
  DualStateExtended duals;
};

/// Greedy primal-dual winner determination with heterogeneous blocks: each
/// round, every unallocated bidder is scored by its best remaining block set
/// of size equal to its demand; the highest-scoring bidder takes that set
/// (ties to the lower bidder id; within a set, equal-valued blocks prefer the
/// lower index). Admissions continue while the admitted demand stays within
/// N - 2 * max demand. The reservation takes the lowest-indexed free blocks.
ExtendedOutcome allocate_extended(const SlotConfig& config, std::span<const ExtendedBid> bids,
                                  SelectionCriterion criterion = SelectionCriterion::TotalValue);

DualSnapshot to_snapshot(const DualStateExtended& duals);

}  // namespace hetnet
