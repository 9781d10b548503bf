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

#include "hetnet/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace hetnet {

namespace {

// Feasibility of a winner set reduces to: total demand plus the largest
// winning relay demand fits in N (the reservation can then be sized exactly
// to that largest relay demand).
template <class BidT>
bool set_feasible(std::span<const BidT> bids, unsigned mask, int num_rbs) {
  int total = 0;
  int max_relay = 0;
  for (size_t i = 0; i < bids.size(); ++i) {
    if (!(mask >> i & 1u)) continue;
    total += bids[i].demand_rbs;
    if (bids[i].kind == BidderKind::RelayNode)
      max_relay = std::max(max_relay, bids[i].demand_rbs);
    if (total + max_relay > num_rbs) return false;
  }
  return total + max_relay <= num_rbs;
}

template <class BidT>
std::vector<int> winner_ids_of_mask(std::span<const BidT> bids, unsigned mask) {
  std::vector<int> ids;
  for (size_t i = 0; i < bids.size(); ++i)
    if (mask >> i & 1u) ids.push_back(bids[i].bidder_id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

template <class BidT>
Allocation empty_allocation(std::span<const BidT> bids) {
  Allocation alloc;
  for (const BidT& b : bids) {
    alloc.winners[b.bidder_id] = false;
    alloc.assignment[b.bidder_id] = {};
  }
  return alloc;
}

// ---------------------------------------------------------------------------
// Exact min-cost max-flow (successive shortest paths with potentials) over
// rational edge costs. Sized for the tiny transportation graphs the oracle
// builds; correctness over speed.
// ---------------------------------------------------------------------------

class MinCostFlow {
 public:
  explicit MinCostFlow(int num_nodes) : head_(num_nodes, -1) {}

  void add_edge(int from, int to, int capacity, Rat cost) {
    edges_.push_back({to, head_[from], capacity, cost});
    head_[from] = static_cast<int>(edges_.size()) - 1;
    edges_.push_back({from, head_[to], 0, -std::move(cost)});
    head_[to] = static_cast<int>(edges_.size()) - 1;
  }

  // Sends `amount` units from source to sink at minimum cost; returns false
  // if that much flow does not exist.
  bool send(int source, int sink, int amount) {
    const int n = static_cast<int>(head_.size());
    std::vector<Rat> potential(n, 0);

    // First shortest-path tree via Bellman-Ford (costs may be negative);
    // afterwards reduced costs stay nonnegative and Dijkstra suffices.
    bool first = true;
    while (amount > 0) {
      std::vector<Rat> dist(n, 0);
      std::vector<char> reached(n, 0);
      std::vector<int> parent_edge(n, -1);
      if (first) {
        reached[source] = 1;
        bool changed = true;
        while (changed) {
          changed = false;
          for (int u = 0; u < n; ++u) {
            if (!reached[u]) continue;
            for (int e = head_[u]; e != -1; e = edges_[e].next) {
              if (edges_[e].capacity <= 0) continue;
              const int v = edges_[e].to;
              const Rat nd = dist[u] + edges_[e].cost;
              if (!reached[v] || nd < dist[v]) {
                reached[v] = 1;
                dist[v] = nd;
                parent_edge[v] = e;
                changed = true;
              }
            }
          }
        }
        first = false;
      } else {
        // O(V^2) Dijkstra on reduced costs.
        std::vector<char> done(n, 0);
        reached[source] = 1;
        for (;;) {
          int u = -1;
          for (int v = 0; v < n; ++v)
            if (reached[v] && !done[v] && (u < 0 || dist[v] < dist[u])) u = v;
          if (u < 0) break;
          done[u] = 1;
          for (int e = head_[u]; e != -1; e = edges_[e].next) {
            if (edges_[e].capacity <= 0) continue;
            const int v = edges_[e].to;
            const Rat nd = dist[u] + edges_[e].cost + potential[u] - potential[v];
            if (!reached[v] || nd < dist[v]) {
              reached[v] = 1;
              dist[v] = nd;
              parent_edge[v] = e;
            }
          }
        }
      }
      if (!reached[sink]) return false;
      for (int v = 0; v < n; ++v)
        if (reached[v]) potential[v] += dist[v];

      int bottleneck = amount;
      for (int v = sink; v != source;) {
        const int e = parent_edge[v];
        bottleneck = std::min(bottleneck, edges_[e].capacity);
        v = edges_[e ^ 1].to;
      }
      for (int v = sink; v != source;) {
        const int e = parent_edge[v];
        edges_[e].capacity -= bottleneck;
        edges_[e ^ 1].capacity += bottleneck;
        v = edges_[e ^ 1].to;
      }
      amount -= bottleneck;
    }
    return true;
  }

  int flow_on(int edge_index) const { return edges_[2 * edge_index + 1].capacity; }

 private:
  struct Edge {
    int to;
    int next;
    int capacity;
    Rat cost;
  };
  std::vector<Edge> edges_;
  std::vector<int> head_;
};

// Best block assignment for a fixed winner set: transportation between
// winners (supply = demand) and sub-bands (capacity = blocks per sub-band),
// maximizing the summed block values. Returns the welfare and fills
// per-winner sub-band counts.
Rat best_assignment(const SlotConfig& config, std::span<const ExtendedBid> bids,
                    const std::vector<size_t>& winners,
                    std::vector<std::vector<int>>* counts_out) {
  const int num_subbands = config.num_subbands();
  const int w = static_cast<int>(winners.size());
  // Nodes: 0 source, 1..w winners, w+1..w+num_subbands sub-bands, last sink.
  MinCostFlow flow(w + num_subbands + 2);
  const int source = 0;
  const int sink = w + num_subbands + 1;

  int total_demand = 0;
  std::vector<std::vector<int>> value_edge(static_cast<size_t>(w),
                                           std::vector<int>(static_cast<size_t>(num_subbands)));
  int edge_count = 0;
  for (int i = 0; i < w; ++i) {
    const ExtendedBid& b = bids[winners[static_cast<size_t>(i)]];
    flow.add_edge(source, 1 + i, b.demand_rbs, Rat(0));
    ++edge_count;
    total_demand += b.demand_rbs;
  }
  for (int i = 0; i < w; ++i) {
    const ExtendedBid& b = bids[winners[static_cast<size_t>(i)]];
    for (int s = 0; s < num_subbands; ++s) {
      const Rat value = b.unit_value * config.rates.bits_per_rb(b.cqi[static_cast<size_t>(s)]);
      value_edge[static_cast<size_t>(i)][static_cast<size_t>(s)] = edge_count++;
      flow.add_edge(1 + i, 1 + w + s, std::min(b.demand_rbs, config.subband_size), -value);
    }
  }
  for (int s = 0; s < num_subbands; ++s) {
    flow.add_edge(1 + w + s, sink, config.subband_size, Rat(0));
    ++edge_count;
  }

  const bool ok = flow.send(source, sink, total_demand);
  assert(ok);
  (void)ok;

  Rat welfare = 0;
  if (counts_out) counts_out->assign(static_cast<size_t>(w), std::vector<int>(static_cast<size_t>(num_subbands), 0));
  for (int i = 0; i < w; ++i) {
    const ExtendedBid& b = bids[winners[static_cast<size_t>(i)]];
    for (int s = 0; s < num_subbands; ++s) {
      const int units = flow.flow_on(value_edge[static_cast<size_t>(i)][static_cast<size_t>(s)]);
      if (units == 0) continue;
      welfare += Rat(units) * b.unit_value * config.rates.bits_per_rb(b.cqi[static_cast<size_t>(s)]);
      if (counts_out) (*counts_out)[static_cast<size_t>(i)][static_cast<size_t>(s)] = units;
    }
  }
  return welfare;
}

}  // namespace

// ---------------------------------------------------------------------------
// optimal_basic
// ---------------------------------------------------------------------------

OracleOutcome optimal_basic(const SlotConfig& config, std::span<const Bid> bids) {
  validate_structure(config, bids);
  if (bids.size() > static_cast<size_t>(kOracleMaxBiddersBasic))
    throw Error(Errc::TooLarge, std::to_string(bids.size()) + " bidders exceed the exhaustive budget of " +
                                    std::to_string(kOracleMaxBiddersBasic));

  const unsigned num_masks = 1u << bids.size();
  Rat best_welfare = 0;
  unsigned best_mask = 0;
  std::vector<int> best_ids;  // sorted winner ids of best_mask

  for (unsigned mask = 0; mask < num_masks; ++mask) {
    if (!set_feasible(bids, mask, config.num_rbs)) continue;
    Rat welfare = 0;
    for (size_t i = 0; i < bids.size(); ++i)
      if (mask >> i & 1u) welfare += bids[i].value;
    const int c = cmp(welfare, best_welfare);
    if (c < 0) continue;
    std::vector<int> ids = winner_ids_of_mask(bids, mask);
    if (c > 0 || std::lexicographical_compare(ids.begin(), ids.end(), best_ids.begin(), best_ids.end())) {
      best_welfare = std::move(welfare);
      best_mask = mask;
      best_ids = std::move(ids);
    }
  }

  OracleOutcome out;
  out.welfare = best_welfare;
  out.allocation = empty_allocation(bids);

  // Consecutive blocks in ascending winner-id order, reservation after.
  std::vector<size_t> winner_positions;
  for (size_t i = 0; i < bids.size(); ++i)
    if (best_mask >> i & 1u) winner_positions.push_back(i);
  std::sort(winner_positions.begin(), winner_positions.end(),
            [&](size_t a, size_t b) { return bids[a].bidder_id < bids[b].bidder_id; });

  int next_rb = 1;
  int reservation = 0;
  for (size_t pos : winner_positions) {
    const Bid& b = bids[pos];
    out.allocation.winners[b.bidder_id] = true;
    std::vector<int>& rbs = out.allocation.assignment[b.bidder_id];
    rbs.resize(static_cast<size_t>(b.demand_rbs));
    std::iota(rbs.begin(), rbs.end(), next_rb);
    next_rb += b.demand_rbs;
    if (b.kind == BidderKind::RelayNode) reservation = std::max(reservation, b.demand_rbs);
  }
  out.allocation.reserved.resize(static_cast<size_t>(reservation));
  std::iota(out.allocation.reserved.begin(), out.allocation.reserved.end(), next_rb);
  return out;
}

// ---------------------------------------------------------------------------
// optimal_extended
// ---------------------------------------------------------------------------

OracleOutcome optimal_extended(const SlotConfig& config, std::span<const ExtendedBid> bids) {
  validate_structure(config, bids);
  if (bids.size() > static_cast<size_t>(kOracleMaxBiddersExtended))
    throw Error(Errc::TooLarge, std::to_string(bids.size()) + " bidders exceed the exhaustive budget of " +
                                    std::to_string(kOracleMaxBiddersExtended));
  if (config.num_rbs > kOracleMaxRbsExtended)
    throw Error(Errc::TooLarge, std::to_string(config.num_rbs) + " blocks exceed the exhaustive budget of " +
                                    std::to_string(kOracleMaxRbsExtended));

  // Per-bidder welfare ceiling (demand times best block value) for pruning.
  std::vector<Rat> ceiling(bids.size());
  for (size_t i = 0; i < bids.size(); ++i) {
    Rat best_block = 0;
    for (int c : bids[i].cqi) {
      Rat value = bids[i].unit_value * config.rates.bits_per_rb(c);
      if (value > best_block) best_block = std::move(value);
    }
    ceiling[i] = Rat(bids[i].demand_rbs) * best_block;
  }

  const unsigned num_masks = 1u << bids.size();
  bool have_best = false;
  Rat best_welfare = 0;
  unsigned best_mask = 0;
  std::vector<int> best_ids;
  std::vector<std::vector<int>> best_counts;

  std::vector<size_t> winners;
  std::vector<std::vector<int>> counts;
  for (unsigned mask = 0; mask < num_masks; ++mask) {
    if (!set_feasible(bids, mask, config.num_rbs)) continue;

    winners.clear();
    Rat ub = 0;
    for (size_t i = 0; i < bids.size(); ++i) {
      if (mask >> i & 1u) {
        winners.push_back(i);
        ub += ceiling[i];
      }
    }
    if (have_best && cmp(ub, best_welfare) < 0) continue;

    const Rat welfare = best_assignment(config, bids, winners, &counts);
    const int c = have_best ? cmp(welfare, best_welfare) : 1;
    if (c < 0) continue;
    std::vector<int> ids = winner_ids_of_mask(bids, mask);
    if (c > 0 ||
        std::lexicographical_compare(ids.begin(), ids.end(), best_ids.begin(), best_ids.end())) {
      have_best = true;
      best_welfare = welfare;
      best_mask = mask;
      best_ids = std::move(ids);
      best_counts = counts;
    }
  }

  OracleOutcome out;
  out.welfare = best_welfare;
  out.allocation = empty_allocation(bids);
  if (!have_best) return out;

  std::vector<size_t> winner_positions;
  for (size_t i = 0; i < bids.size(); ++i)
    if (best_mask >> i & 1u) winner_positions.push_back(i);
  // best_counts rows follow mask bit order; materialize per sub-band in
  // ascending winner-id order for a deterministic layout.
  std::vector<size_t> order(winner_positions.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return bids[winner_positions[a]].bidder_id < bids[winner_positions[b]].bidder_id;
  });

  int reservation = 0;
  for (size_t pos : winner_positions) {
    out.allocation.winners[bids[pos].bidder_id] = true;
    if (bids[pos].kind == BidderKind::RelayNode)
      reservation = std::max(reservation, bids[pos].demand_rbs);
  }

  std::vector<bool> taken(static_cast<size_t>(config.num_rbs), false);
  for (int s = 0; s < config.num_subbands(); ++s) {
    int rb = s * config.subband_size + 1;
    for (size_t o : order) {
      const size_t row = o;
      int units = best_counts[row][static_cast<size_t>(s)];
      while (units-- > 0) {
        out.allocation.assignment[bids[winner_positions[row]].bidder_id].push_back(rb);
        taken[static_cast<size_t>(rb - 1)] = true;
        ++rb;
      }
    }
  }
  for (auto& [id, rbs] : out.allocation.assignment) std::sort(rbs.begin(), rbs.end());

  for (int rb = 1; rb <= config.num_rbs &&
                   static_cast<int>(out.allocation.reserved.size()) < reservation;
       ++rb) {
    if (!taken[static_cast<size_t>(rb - 1)]) out.allocation.reserved.push_back(rb);
  }
  return out;
}

}  // namespace hetnet
