#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hetnet/alloc_basic.hpp"
#include "hetnet/alloc_extended.hpp"
#include "hetnet/oracle.hpp"
#include "support/generators.hpp"

using namespace hetnet;
using hetnet::testgen::gen_extended;

namespace {

SlotConfig identity_config_n8() {
  SlotConfig c;
  c.num_rbs = 8;
  c.subband_size = 2;
  c.rates = CqiRateTable::identity_table();
  return c;
}

// Two user bids fighting over four sub-bands; values engineered so the first
// round picks bidder 1 on sub-band 0 and the second picks bidder 2 next door.
std::vector<ExtendedBid> canonical_extended() {
  return {
      {1, BidderKind::DirectUE, 2, make_rat(2), {3, 1, 1, 1}},
      {2, BidderKind::DirectUE, 2, make_rat(1), {2, 4, 1, 1}},
  };
}

std::vector<Rat> rats(std::initializer_list<long> values) {
  std::vector<Rat> out;
  for (long v : values) out.push_back(Rat(v));
  return out;
}

}  // namespace

TEST_CASE("top_r_subset picks the largest entries") {
  const std::vector<Rat> values = rats({5, 1, 3});
  const TopRSelection sel = top_r_subset(values, 2);
  CHECK(sel.indices == std::vector<int>{0, 2});
  CHECK(sel.total == 8);

  CHECK(top_r_subset(values, 0).indices.empty());
  CHECK(top_r_subset(values, 0).total == 0);

  const TopRSelection all = top_r_subset(values, 3);
  CHECK(all.indices == std::vector<int>{0, 1, 2});
  CHECK(all.total == 9);

  CHECK_THROWS_AS(top_r_subset(values, 4), Error);
  try {
    top_r_subset(values, 4);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::RTooLarge);
  }
}

TEST_CASE("top_r_subset prefers lower indices on ties") {
  const std::vector<Rat> values = rats({3, 3, 1});
  CHECK(top_r_subset(values, 1).indices == std::vector<int>{0});
  CHECK(top_r_subset(values, 2).indices == std::vector<int>{0, 1});
}

TEST_CASE("table recurrence and partial sort agree everywhere") {
  Rng rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = rng.uniform_int(0, 10);
    std::vector<Rat> values;
    for (int i = 0; i < n; ++i) values.push_back(make_rat(rng.uniform_int(-20, 60), 7));
    for (int r = 0; r <= n; ++r) {
      const TopRSelection fast = top_r_subset(values, r);
      const TopRSelection slow = top_r_subset_dp(values, r);
      CHECK(fast.total == slow.total);
      CHECK(static_cast<int>(slow.indices.size()) == r);
      Rat recomputed = 0;
      for (int i : slow.indices) recomputed += values[static_cast<size_t>(i)];
      CHECK(recomputed == slow.total);
    }
  }
}

TEST_CASE("canonical heterogeneous round matches the hand trace") {
  const SlotConfig config = identity_config_n8();
  const std::vector<ExtendedBid> bids = canonical_extended();
  const ExtendedOutcome out = allocate_extended(config, bids);

  CHECK(out.allocation.is_winner(1));
  CHECK(out.allocation.is_winner(2));
  CHECK(out.allocation.rbs_of(1) == std::vector<int>{1, 2});
  CHECK(out.allocation.rbs_of(2) == std::vector<int>{3, 4});
  CHECK(out.allocation.reserved.empty());
  CHECK(welfare_extended(bids, out.allocation, config) == 20);
  CHECK(out.duals.iterations == 2);
  CHECK(out.duals.xi.at(1) == 12);
  CHECK(out.duals.xi.at(2) == 8);
  for (double l : out.duals.lambda_per_rb)
    CHECK(l == doctest::Approx(std::exp(2.0) / 8.0).epsilon(1e-12));

  CHECK(check_feasibility(config, bids, out.allocation).empty());
  CHECK(optimal_extended(config, bids).welfare == 20);
}

TEST_CASE("a lone bidder takes its best blocks") {
  SlotConfig config = identity_config_n8();
  ExtendedBid bid{1, BidderKind::DirectUE, 3, make_rat(1), {1, 7, 2, 5}};
  const std::vector<ExtendedBid> solo_bids = {bid};
  const ExtendedOutcome out = allocate_extended(config, solo_bids);
  CHECK(out.allocation.is_winner(1));
  // best three blocks: sub-band 1 (both) and one from sub-band 3
  CHECK(out.allocation.rbs_of(1) == std::vector<int>{3, 4, 7});
}

TEST_CASE("per-round sets match top_r_subset on the opening round") {
  Rng rng(22);
  for (int trial = 0; trial < 40; ++trial) {
    auto inst = gen_extended(rng);
    const ExtendedOutcome out = allocate_extended(inst.config, inst.bids);
    if (out.duals.iterations == 0) continue;
    // first winner's set must equal its unconstrained best set
    int first_winner = -1;
    Rat best_total = -1;
    for (const ExtendedBid& b : inst.bids) {
      if (!out.allocation.is_winner(b.bidder_id)) continue;
      const Rat total = out.duals.xi.at(b.bidder_id);
      if (total > best_total) {
        best_total = total;
        first_winner = b.bidder_id;
      }
    }
    const ExtendedBid* bid = nullptr;
    for (const ExtendedBid& b : inst.bids)
      if (b.bidder_id == first_winner) bid = &b;
    REQUIRE(bid != nullptr);
    std::vector<Rat> values;
    for (int rb = 1; rb <= inst.config.num_rbs; ++rb)
      values.push_back(rb_value(*bid, rb, inst.config));
    const TopRSelection best = top_r_subset(values, bid->demand_rbs);
    CHECK(best.total >= out.duals.xi.at(first_winner));
  }
}

TEST_CASE("all per-block lambdas stay equal") {
  Rng rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    auto inst = gen_extended(rng);
    const ExtendedOutcome out = allocate_extended(inst.config, inst.bids);
    REQUIRE(!out.duals.lambda_per_rb.empty());
    for (double l : out.duals.lambda_per_rb) CHECK(l == out.duals.lambda_per_rb.front());
  }
}

TEST_CASE("allocations are feasible and never beat the oracle") {
  Rng rng(24);
  for (int trial = 0; trial < 60; ++trial) {
    testgen::ExtendedGen params;
    params.max_bidders = 8;
    params.max_subbands = 12;
    auto inst = gen_extended(rng, params);
    const ExtendedOutcome out = allocate_extended(inst.config, inst.bids);
    CHECK(check_feasibility(inst.config, inst.bids, out.allocation).empty());
    const OracleOutcome opt = optimal_extended(inst.config, inst.bids);
    CHECK(welfare_extended(inst.bids, out.allocation, inst.config) <= opt.welfare);
  }
}

TEST_CASE("winning relays are backed by the lowest free blocks") {
  SlotConfig config = identity_config_n8();
  const std::vector<ExtendedBid> bids = {
      {1, BidderKind::RelayNode, 2, make_rat(5), {1, 1, 9, 1}},
      {2, BidderKind::DirectUE, 2, make_rat(1), {1, 9, 1, 1}},
  };
  const ExtendedOutcome out = allocate_extended(config, bids);
  CHECK(out.allocation.is_winner(1));
  CHECK(out.allocation.rbs_of(1) == std::vector<int>{5, 6});  // its best sub-band
  CHECK(out.allocation.is_winner(2));
  CHECK(out.allocation.rbs_of(2) == std::vector<int>{3, 4});
  // reservation: two lowest blocks not taken by anyone
  CHECK(out.allocation.reserved == std::vector<int>{1, 2});
  CHECK(check_feasibility(config, bids, out.allocation).empty());
}

TEST_CASE("raising a unit price keeps a winner winning") {
  Rng rng(25);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    auto inst = gen_extended(rng);
    const ExtendedOutcome out = allocate_extended(inst.config, inst.bids);
    for (size_t i = 0; i < inst.bids.size(); ++i) {
      if (!out.allocation.is_winner(inst.bids[i].bidder_id)) continue;
      auto raised = inst.bids;
      raised[i].unit_value += make_rat(rng.uniform_int(1, 300), 100);
      const ExtendedOutcome again = allocate_extended(inst.config, raised);
      CHECK(again.allocation.is_winner(raised[i].bidder_id));
      ++checked;
      break;
    }
  }
  CHECK(checked > 30);
}

TEST_CASE("uniform demands and flat rates reduce to the homogeneous greedy") {
  // With a constant rate table every block looks alike, so the heterogeneous
  // greedy must pick the same winners as the homogeneous rule run on values
  // v * r * CR, provided all demands are equal (the two rules rank by total
  // and by per-block value respectively, which then coincide).
  Rng rng(26);
  for (int trial = 0; trial < 60; ++trial) {
    testgen::ExtendedGen params;
    params.uniform_demand = true;
    auto inst = gen_extended(rng, params);
    const Rat cr = make_rat(rng.uniform_int(1, 30), 4);
    inst.config.rates = CqiRateTable::constant_table(cr);
    for (auto& b : inst.bids)
      for (int& c : b.cqi) c = rng.uniform_int(1, 15);  // level 0 would zero a block

    std::vector<Bid> folded;
    for (const ExtendedBid& b : inst.bids)
      folded.push_back({b.bidder_id, b.kind, b.demand_rbs, Rat(b.unit_value * b.demand_rbs * cr)});

    const ExtendedOutcome ext = allocate_extended(inst.config, inst.bids);
    const BasicOutcome basic = allocate_basic(inst.config, folded);
    CHECK(ext.allocation.winners == basic.allocation.winners);
    CHECK(welfare_extended(inst.bids, ext.allocation, inst.config) ==
          welfare_basic(folded, basic.allocation));
  }
}

TEST_CASE("the normalized selection variant can pick different winners") {
  SlotConfig config;
  config.num_rbs = 12;
  config.subband_size = 1;
  config.rates = CqiRateTable::constant_table(Rat(1));
  // budget 12 - 2*4 = 4: the total-value rule admits the bulk bidder first,
  // the per-block rule admits the small high-density bidders first.
  std::vector<ExtendedBid> bids;
  bids.push_back({1, BidderKind::DirectUE, 4, Rat(3), std::vector<int>(12, 5)});
  for (int i = 2; i <= 6; ++i)
    bids.push_back({i, BidderKind::DirectUE, 1, Rat(10), std::vector<int>(12, 5)});

  const ExtendedOutcome total = allocate_extended(config, bids, SelectionCriterion::TotalValue);
  const ExtendedOutcome density = allocate_extended(config, bids, SelectionCriterion::PerRbValue);
  CHECK(total.allocation.is_winner(1));
  CHECK_FALSE(density.allocation.is_winner(1));
  CHECK(density.allocation.num_winners() == 5);
}
