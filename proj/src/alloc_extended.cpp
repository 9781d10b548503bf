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

#include "hetnet/alloc_extended.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>

namespace hetnet {

TopRSelection top_r_subset(std::span<const Rat> values, int r) {
  if (r < 0) throw Error(Errc::BadArgument, "subset size must be nonnegative");
  if (r > static_cast<int>(values.size()))
    throw Error(Errc::RTooLarge, "subset size " + std::to_string(r) + " exceeds " +
                                     std::to_string(values.size()) + " values");
  std::vector<int> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::partial_sort(order.begin(), order.begin() + r, order.end(), [&](int a, int b) {
    const int c = cmp(values[a], values[b]);
    if (c != 0) return c > 0;
    return a < b;
  });
  TopRSelection sel;
  sel.indices.assign(order.begin(), order.begin() + r);
  std::sort(sel.indices.begin(), sel.indices.end());
  sel.total = 0;
  for (int i : sel.indices) sel.total += values[i];
  return sel;
}

TopRSelection top_r_subset_dp(std::span<const Rat> values, int r) {
  if (r < 0) throw Error(Errc::BadArgument, "subset size must be nonnegative");
  const int n = static_cast<int>(values.size());
  if (r > n)
    throw Error(Errc::RTooLarge, "subset size " + std::to_string(r) + " exceeds " +
                                     std::to_string(n) + " values");

  // best[k][j]: best sum choosing j of the first k values. Unreachable states
  // (j > k) are never read.
  std::vector<std::vector<Rat>> best(static_cast<size_t>(n) + 1,
                                     std::vector<Rat>(static_cast<size_t>(r) + 1));
  std::vector<std::vector<bool>> took(static_cast<size_t>(n) + 1,
                                      std::vector<bool>(static_cast<size_t>(r) + 1, false));
  for (int k = 1; k <= n; ++k) {
    const int jmax = std::min(k, r);
    for (int j = 1; j <= jmax; ++j) {
      const Rat with_k = best[k - 1][j - 1] + values[k - 1];
      if (j == k || with_k >= best[k - 1][j]) {
        best[k][j] = with_k;
        took[k][j] = true;
      } else {
        best[k][j] = best[k - 1][j];
      }
    }
  }

  TopRSelection sel;
  sel.total = best[n][r];
  int j = r;
  for (int k = n; k >= 1 && j >= 1; --k) {
    if (took[k][j]) {
      sel.indices.push_back(k - 1);
      --j;
    }
  }
  std::reverse(sel.indices.begin(), sel.indices.end());
  return sel;
}

ExtendedOutcome allocate_extended(const SlotConfig& config, std::span<const ExtendedBid> bids,
                                  SelectionCriterion criterion) {
  validate(config, bids);

  ExtendedOutcome out;
  const int n = config.num_rbs;
  out.duals.lambda_per_rb.assign(static_cast<size_t>(n), 1.0 / n);
  for (const ExtendedBid& b : bids) {
    out.allocation.winners[b.bidder_id] = false;
    out.allocation.assignment[b.bidder_id] = {};
    out.duals.xi[b.bidder_id] = 0;
    if (b.kind == BidderKind::RelayNode) out.duals.rho[b.bidder_id] = 0.0;
  }
  if (bids.empty()) return out;

  const int m = max_demand(bids);
  const int admission_budget = n - 2 * m;  // same exact form of the lambda exit test
  const int relay_count = static_cast<int>(
      std::count_if(bids.begin(), bids.end(),
                    [](const ExtendedBid& b) { return b.kind == BidderKind::RelayNode; }));
  const size_t bid_count = bids.size();

  // Per-bidder block values are fixed for the whole run, so each bidder's
  // block preference (value desc, index asc) is computed once; a round then
  // only needs to walk it skipping taken blocks.
  std::vector<std::vector<Rat>> block_value(bid_count);
  std::vector<std::vector<int>> pref(bid_count);
  for (size_t i = 0; i < bid_count; ++i) {
    block_value[i].reserve(static_cast<size_t>(n));
    for (int rb = 1; rb <= n; ++rb)
      block_value[i].push_back(bids[i].unit_value *
                               config.rates.bits_per_rb(bids[i].cqi[config.subband_of_rb(rb)]));
    pref[i].resize(static_cast<size_t>(n));
    std::iota(pref[i].begin(), pref[i].end(), 0);
    std::stable_sort(pref[i].begin(), pref[i].end(), [&](int a, int b) {
      return cmp(block_value[i][a], block_value[i][b]) > 0;
    });
  }

  // Scan order for the argmax: ascending bidder id, so a strict comparison
  // resolves ties toward the lower id.
  std::vector<int> by_id(bid_count);
  std::iota(by_id.begin(), by_id.end(), 0);
  std::sort(by_id.begin(), by_id.end(),
            [&](int a, int b) { return bids[a].bidder_id < bids[b].bidder_id; });

  std::vector<bool> taken(static_cast<size_t>(n), false);
  std::vector<bool> allocated(bid_count, false);
  int free_rbs = n;
  int admitted_demand = 0;
  int winner_count = 0;
  int reservation = 0;

  auto best_set_of = [&](size_t i, std::vector<int>& set_out) -> Rat {
    set_out.clear();
    Rat total = 0;
    for (int rb0 : pref[i]) {
      if (taken[static_cast<size_t>(rb0)]) continue;
      set_out.push_back(rb0);
      total += block_value[i][static_cast<size_t>(rb0)];
      if (static_cast<int>(set_out.size()) == bids[i].demand_rbs) break;
    }
    return total;
  };

  std::vector<int> candidate, best_set;
  while (winner_count < static_cast<int>(bid_count) && admitted_demand <= admission_budget) {
    int best_idx = -1;
    Rat best_key;
    for (int i : by_id) {
      if (allocated[static_cast<size_t>(i)]) continue;
      if (free_rbs < bids[static_cast<size_t>(i)].demand_rbs) continue;  // no full-size set left
      Rat key = best_set_of(static_cast<size_t>(i), candidate);
      if (criterion == SelectionCriterion::PerRbValue)
        key /= bids[static_cast<size_t>(i)].demand_rbs;
      if (best_idx < 0 || cmp(key, best_key) > 0) {
        best_idx = i;
        best_key = std::move(key);
        best_set = candidate;
      }
    }
    if (best_idx < 0) break;

    const ExtendedBid& b = bids[static_cast<size_t>(best_idx)];
    out.allocation.winners[b.bidder_id] = true;
    Rat total = 0;
    std::vector<int>& rbs = out.allocation.assignment[b.bidder_id];
    for (int rb0 : best_set) {
      taken[static_cast<size_t>(rb0)] = true;
      rbs.push_back(rb0 + 1);
      total += block_value[static_cast<size_t>(best_idx)][static_cast<size_t>(rb0)];
    }
    std::sort(rbs.begin(), rbs.end());
    free_rbs -= b.demand_rbs;
    out.duals.xi[b.bidder_id] = std::move(total);
    if (b.kind == BidderKind::RelayNode) {
      const double lambda_now = std::exp(static_cast<double>(admitted_demand) / m) / n;
      out.duals.rho[b.bidder_id] = lambda_now / relay_count;
      reservation = std::max(reservation, b.demand_rbs);
    }
    allocated[static_cast<size_t>(best_idx)] = true;
    admitted_demand += b.demand_rbs;
    ++winner_count;
    ++out.duals.iterations;
  }

  const double lambda_final = std::exp(static_cast<double>(admitted_demand) / m) / n;
  std::fill(out.duals.lambda_per_rb.begin(), out.duals.lambda_per_rb.end(), lambda_final);

  // Reservation: lowest-indexed free blocks. Welfare-neutral, so the choice
  // only needs to be deterministic.
  for (int rb0 = 0; rb0 < n && static_cast<int>(out.allocation.reserved.size()) < reservation;
       ++rb0) {
    if (!taken[static_cast<size_t>(rb0)]) out.allocation.reserved.push_back(rb0 + 1);
  }
  assert(static_cast<int>(out.allocation.reserved.size()) == reservation);

  return out;
}

DualSnapshot to_snapshot(const DualStateExtended& duals) {
  DualSnapshot snap;
  snap.lambda = duals.lambda_per_rb;
  snap.rho = duals.rho;
  snap.xi = duals.xi;
  snap.iterations = duals.iterations;
  return snap;
}

}  // namespace hetnet
