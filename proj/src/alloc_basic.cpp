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

#include "hetnet/alloc_basic.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>

namespace hetnet {

namespace {

// Rational upper bound on Euler's number, accurate to 17 digits. Keeping the
// pinned constant above e makes the reported bound a certified lower bound on
// the true guarantee.
const Rat& euler_upper() {
  static const Rat e = [] {
    Rat r(mpz_class("271828182845904524"), mpz_class("100000000000000000"));
    r.canonicalize();
    return r;
  }();
  return e;
}

Rat delta_of(int num_rbs, int m) {
  if (m <= 0) throw Error(Errc::BadArgument, "delta needs a nonempty bid set");
  return make_rat(num_rbs, m);
}

}  // namespace

Rat delta(const SlotConfig& config, std::span<const Bid> bids) {
  return delta_of(config.num_rbs, max_demand(bids));
}

Rat delta(const SlotConfig& config, std::span<const ExtendedBid> bids) {
  return delta_of(config.num_rbs, max_demand(bids));
}

Rat approx_ratio_bound(const Rat& delta) {
  if (delta <= 2) throw Error(Errc::BadArgument, "ratio bound defined only for delta > 2");
  return (delta - 2) / (delta * euler_upper() - 2);
}

BasicOutcome allocate_basic(const SlotConfig& config, std::span<const Bid> bids) {
  validate(config, bids);

  BasicOutcome out;
  const int n = config.num_rbs;
  out.duals.lambda = 1.0 / n;
  for (const Bid& b : bids) {
    out.allocation.winners[b.bidder_id] = false;
    out.allocation.assignment[b.bidder_id] = {};
    out.duals.xi[b.bidder_id] = 0;
    if (b.kind == BidderKind::RelayNode) out.duals.rho[b.bidder_id] = 0.0;
  }
  if (bids.empty()) return out;

  const int m = max_demand(bids);
  // Admitting while the previously admitted demand stays within this budget
  // is exactly the lambda-threshold exit test, evaluated without rounding:
  // N * lambda <= exp(delta - 2)  <=>  sum of admitted demands <= N - 2m.
  const int admission_budget = n - 2 * m;
  const int relay_count = static_cast<int>(
      std::count_if(bids.begin(), bids.end(),
                    [](const Bid& b) { return b.kind == BidderKind::RelayNode; }));

  std::vector<Rat> per_rb_value(bids.size());
  for (size_t i = 0; i < bids.size(); ++i)
    per_rb_value[i] = bids[i].value / bids[i].demand_rbs;

  std::vector<int> order(bids.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const int c = cmp(per_rb_value[a], per_rb_value[b]);
    if (c != 0) return c > 0;
    return bids[a].bidder_id < bids[b].bidder_id;
  });

  std::vector<int> admitted;  // indices into bids, in admission order
  int admitted_demand = 0;
  for (int idx : order) {
    if (admitted_demand > admission_budget) break;
    const Bid& b = bids[idx];
    out.allocation.winners[b.bidder_id] = true;
    out.duals.xi[b.bidder_id] = b.value;
    if (b.kind == BidderKind::RelayNode) {
      // lambda before this admission's update
      const double lambda_now = std::exp(static_cast<double>(admitted_demand) / m) / n;
      out.duals.rho[b.bidder_id] = lambda_now / relay_count;
    }
    admitted.push_back(idx);
    admitted_demand += b.demand_rbs;
    ++out.duals.iterations;
  }

  // (1/N) * exp(delta-2)^(S / (N-2m)) collapses to exp(S/m) / N.
  out.duals.lambda = std::exp(static_cast<double>(admitted_demand) / m) / n;

  // Winners take consecutive blocks in admission order; the reservation for
  // relay inner traffic follows immediately after.
  int next_rb = 1;
  int reservation = 0;
  for (int idx : admitted) {
    const Bid& b = bids[idx];
    std::vector<int>& rbs = out.allocation.assignment[b.bidder_id];
    rbs.resize(static_cast<size_t>(b.demand_rbs));
    std::iota(rbs.begin(), rbs.end(), next_rb);
    next_rb += b.demand_rbs;
    if (b.kind == BidderKind::RelayNode) reservation = std::max(reservation, b.demand_rbs);
  }
  out.allocation.reserved.resize(static_cast<size_t>(reservation));
  std::iota(out.allocation.reserved.begin(), out.allocation.reserved.end(), next_rb);
  assert(next_rb - 1 + reservation <= n);

  return out;
}

DualSnapshot to_snapshot(const DualStateBasic& duals) {
  DualSnapshot snap;
  snap.lambda = {duals.lambda};
  snap.rho = duals.rho;
  snap.xi = duals.xi;
  snap.iterations = duals.iterations;
  return snap;
}

}  // namespace hetnet
