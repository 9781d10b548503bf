#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hetnet/alloc_basic.hpp"
#include "hetnet/oracle.hpp"
#include "support/generators.hpp"

using namespace hetnet;
using hetnet::testgen::gen_basic;

namespace {

SlotConfig config_n(int n) {
  SlotConfig c;
  c.num_rbs = n;
  c.subband_size = 1;
  c.rates = CqiRateTable::default_table();
  return c;
}

Bid ue(int id, int r, long v_cents) { return {id, BidderKind::DirectUE, r, make_rat(v_cents, 100)}; }
Bid rn(int id, int r, long v_cents) { return {id, BidderKind::RelayNode, r, make_rat(v_cents, 100)}; }

// The canonical three-bidder round used throughout the suites.
std::vector<Bid> canonical_bids() { return {ue(1, 3, 900), ue(2, 4, 800), rn(3, 3, 300)}; }

}  // namespace

TEST_CASE("delta divides blocks by the largest demand") {
  CHECK(delta(config_n(12), canonical_bids()) == 3);
  const std::vector<Bid> table_scale = {ue(1, 40, 100), ue(2, 10, 100)};
  CHECK(delta(config_n(100), table_scale) == make_rat(5, 2));
  const std::vector<Bid> unit = {ue(1, 1, 100), ue(2, 1, 100)};
  CHECK(delta(config_n(10), unit) == 10);
  CHECK_THROWS_AS(delta(config_n(10), std::vector<Bid>{}), Error);
}

TEST_CASE("approx_ratio_bound follows the closed form") {
  CHECK(std::abs(approx_ratio_bound(Rat(3)).get_d() - 0.16247361568634495) < 1e-12);
  CHECK(std::abs(approx_ratio_bound(Rat(1000000)).get_d() - 1.0 / std::exp(1.0)) < 1e-5);
  // approaches zero from above as delta approaches 2
  const Rat near = approx_ratio_bound(Rat(2) + make_rat(1, 1000000));
  CHECK(near > 0);
  CHECK(near < make_rat(1, 1000));
  CHECK_THROWS_AS(approx_ratio_bound(Rat(2)), Error);
}

TEST_CASE("canonical round: two winners, budget exhausts before the relay") {
  const SlotConfig config = config_n(12);
  const std::vector<Bid> bids = canonical_bids();
  const BasicOutcome out = allocate_basic(config, bids);

  CHECK(out.allocation.is_winner(1));
  CHECK(out.allocation.is_winner(2));
  CHECK_FALSE(out.allocation.is_winner(3));
  CHECK(out.allocation.rbs_of(1) == std::vector<int>{1, 2, 3});
  CHECK(out.allocation.rbs_of(2) == std::vector<int>{4, 5, 6, 7});
  CHECK(out.allocation.reserved.empty());
  CHECK(welfare_basic(bids, out.allocation) == 17);

  CHECK(out.duals.iterations == 2);
  CHECK(out.duals.xi.at(1) == 9);
  CHECK(out.duals.xi.at(2) == 8);
  CHECK(out.duals.xi.at(3) == 0);
  // lambda after both admissions: exp(7/4) / 12
  CHECK(out.duals.lambda == doctest::Approx(std::exp(7.0 / 4.0) / 12.0).epsilon(1e-12));
  CHECK(check_feasibility(config, bids, out.allocation).empty());

  // The sample round is also the optimum.
  CHECK(optimal_basic(config, bids).welfare == 17);
}

TEST_CASE("a lone affordable bid always wins") {
  const std::vector<Bid> bids = {ue(1, 1, 500)};
  const BasicOutcome out = allocate_basic(config_n(10), bids);
  CHECK(out.allocation.is_winner(1));
  CHECK(welfare_basic(bids, out.allocation) == 5);
}

TEST_CASE("winning relay pins the reservation to its demand") {
  const SlotConfig config = config_n(12);
  const std::vector<Bid> bids = {ue(1, 3, 900), ue(2, 4, 800), rn(3, 3, 3000)};
  const BasicOutcome out = allocate_basic(config, bids);

  CHECK(out.allocation.is_winner(3));
  CHECK(out.allocation.is_winner(1));
  CHECK_FALSE(out.allocation.is_winner(2));
  CHECK(out.allocation.rbs_of(3) == std::vector<int>{1, 2, 3});  // selected first
  CHECK(out.allocation.rbs_of(1) == std::vector<int>{4, 5, 6});
  CHECK(out.allocation.reserved == std::vector<int>{7, 8, 9});
  CHECK(check_feasibility(config, bids, out.allocation).empty());
  // rho uses the lambda value before the relay's own update
  CHECK(out.duals.rho.at(3) == doctest::Approx(1.0 / 12.0).epsilon(1e-12));
}

TEST_CASE("equal per-block values resolve to the lower bidder id") {
  const SlotConfig config = config_n(11);  // budget 11 - 8 = 3
  const std::vector<Bid> bids = {ue(1, 3, 900), ue(5, 4, 800), ue(2, 4, 800)};
  const BasicOutcome out = allocate_basic(config, bids);
  CHECK(out.allocation.is_winner(1));
  CHECK(out.allocation.is_winner(2));
  CHECK_FALSE(out.allocation.is_winner(5));
}

TEST_CASE("empty roster allocates nothing") {
  const BasicOutcome out = allocate_basic(config_n(12), std::vector<Bid>{});
  CHECK(out.allocation.winners.empty());
  CHECK(out.duals.iterations == 0);
  CHECK(out.duals.lambda == doctest::Approx(1.0 / 12.0));
}

TEST_CASE("allocation is always feasible and never beats the oracle") {
  Rng rng(11);
  for (int trial = 0; trial < 150; ++trial) {
    auto inst = gen_basic(rng);
    const BasicOutcome out = allocate_basic(inst.config, inst.bids);
    CHECK(check_feasibility(inst.config, inst.bids, out.allocation).empty());
    if (inst.bids.size() <= 12) {
      const OracleOutcome opt = optimal_basic(inst.config, inst.bids);
      CHECK(welfare_basic(inst.bids, out.allocation) <= opt.welfare);
    }
  }
}

TEST_CASE("admitting everyone means the outcome is optimal") {
  Rng rng(12);
  int covered = 0;
  for (int trial = 0; trial < 200 && covered < 30; ++trial) {
    testgen::BasicGen params;
    params.min_bidders = 2;
    params.max_bidders = 5;
    params.min_rbs = 20;
    params.max_rbs = 30;
    auto inst = gen_basic(rng, params);
    const BasicOutcome out = allocate_basic(inst.config, inst.bids);
    if (out.allocation.num_winners() != static_cast<int>(inst.bids.size())) continue;
    ++covered;
    Rat everything = 0;
    for (const Bid& b : inst.bids) everything += b.value;
    CHECK(welfare_basic(inst.bids, out.allocation) == everything);
    CHECK(optimal_basic(inst.config, inst.bids).welfare == everything);
  }
  CHECK(covered >= 30);
}

TEST_CASE("lambda grows strictly with every admission") {
  Rng rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    auto inst = gen_basic(rng);
    const BasicOutcome out = allocate_basic(inst.config, inst.bids);
    const int m = max_demand(std::span<const Bid>(inst.bids));
    // reconstruct the lambda trajectory from the admitted demands
    std::vector<int> admitted_demands;
    for (const Bid& b : inst.bids)
      if (out.allocation.is_winner(b.bidder_id)) admitted_demands.push_back(b.demand_rbs);
    double lambda = 1.0 / inst.config.num_rbs;
    int running = 0;
    for (int r : admitted_demands) {
      running += r;
      const double next = std::exp(static_cast<double>(running) / m) / inst.config.num_rbs;
      CHECK(next > lambda);
      lambda = next;
    }
    CHECK(out.duals.lambda == doctest::Approx(lambda).epsilon(1e-9));
  }
}

TEST_CASE("raising a winner's value keeps it winning") {
  Rng rng(14);
  int checked = 0;
  for (int trial = 0; trial < 80; ++trial) {
    auto inst = gen_basic(rng);
    const BasicOutcome out = allocate_basic(inst.config, inst.bids);
    for (size_t i = 0; i < inst.bids.size(); ++i) {
      if (!out.allocation.is_winner(inst.bids[i].bidder_id)) continue;
      auto raised = inst.bids;
      raised[i].value += make_rat(rng.uniform_int(1, 500), 100);
      const BasicOutcome again = allocate_basic(inst.config, raised);
      CHECK(again.allocation.is_winner(raised[i].bidder_id));
      ++checked;
      break;
    }
  }
  CHECK(checked > 40);
}

TEST_CASE("identical inputs give identical outcomes") {
  Rng rng(15);
  auto inst = gen_basic(rng);
  const BasicOutcome a = allocate_basic(inst.config, inst.bids);
  const BasicOutcome b = allocate_basic(inst.config, inst.bids);
  CHECK(a.allocation.winners == b.allocation.winners);
  CHECK(a.allocation.assignment == b.allocation.assignment);
  CHECK(a.allocation.reserved == b.allocation.reserved);
}
