// Test-only helpers: random instances and exhaustive oracles that share no
// code with the algorithms they check.
#ifndef GEOPRICER_TESTS_SUPPORT_HPP
#define GEOPRICER_TESTS_SUPPORT_HPP

#include <algorithm>
#include <functional>
#include <vector>

#include "geopricer/core.hpp"
#include "geopricer/poset.hpp"
#include "geopricer/rng.hpp"

namespace geopricer::oracle {

inline Instance random_instance(Rng& rng, int n, int m, int d, const std::vector<Rational>& budgets,
                                std::int64_t coord_max, Model model = Model::UudpMin) {
  auto point = [&] {
    std::vector<Rational> c;
    for (int k = 0; k < d; ++k) c.push_back(Rational(static_cast<std::int64_t>(rng.below(coord_max + 1))));
    return Point(std::move(c));
  };
  std::vector<Point> items;
  for (int i = 0; i < n; ++i) items.push_back(point());
  std::vector<Consumer> consumers;
  for (int c = 0; c < m; ++c) consumers.push_back({point(), budgets[rng.below(budgets.size())]});
  return Instance(d, std::move(items), std::move(consumers), model);
}

/// Revenue straight from the definitions, written independently of
/// evaluate_revenue.
inline Rational naive_revenue(const Instance& inst, const std::vector<Rational>& prices) {
  Rational total = 0;
  for (const Consumer& c : inst.consumers()) {
    std::vector<Rational> seen;
    for (int i = 0; i < inst.num_items(); ++i) {
      bool ok = true;
      for (int k = 0; k < inst.dimension(); ++k) ok = ok && inst.item(i)[k] >= c.point[k];
      if (ok) seen.push_back(prices[static_cast<std::size_t>(i)]);
    }
    if (seen.empty()) continue;
    Rational pay = 0;
    if (inst.model() == Model::UudpMin) {
      pay = *std::min_element(seen.begin(), seen.end());
    } else {
      for (const Rational& p : seen) pay += p;
    }
    if (pay <= c.budget) total += pay;
  }
  return total;
}

/// Best revenue over every assignment of the candidate prices (recursive).
inline Rational naive_optimum(const Instance& inst, const std::vector<Rational>& candidates) {
  std::vector<Rational> prices(static_cast<std::size_t>(inst.num_items()));
  Rational best = 0;
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == prices.size()) {
      best = std::max(best, naive_revenue(inst, prices));
      return;
    }
    for (const Rational& p : candidates) {
      prices[i] = p;
      go(i + 1);
    }
  };
  go(0);
  return best;
}

inline std::vector<Rational> budgets_and_zero(const Instance& inst) {
  std::vector<Rational> out{Rational(0)};
  for (const Consumer& c : inst.consumers()) out.push_back(c.budget);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Largest pairwise-incomparable subset, by subset enumeration.
inline int exhaustive_max_antichain(const DominanceOrder& order) {
  const int n = order.size();
  int best = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    const int size = __builtin_popcount(mask);
    if (size <= best) continue;
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) {
      for (int b = a + 1; b < n && ok; ++b) {
        if ((mask >> a & 1u) && (mask >> b & 1u) && order.comparable(a, b)) ok = false;
      }
    }
    if (ok) best = size;
  }
  return best;
}

/// Fewest chains partitioning the order, by subset dynamic programming.
inline int exhaustive_min_chain_partition(const DominanceOrder& order) {
  const int n = order.size();
  const unsigned full = (1u << n) - 1;
  std::vector<char> is_chain(full + 1, 1);
  for (unsigned mask = 1; mask <= full; ++mask) {
    for (int a = 0; a < n && is_chain[mask]; ++a) {
      for (int b = a + 1; b < n && is_chain[mask]; ++b) {
        if ((mask >> a & 1u) && (mask >> b & 1u) && !order.comparable(a, b)) is_chain[mask] = 0;
      }
    }
  }
  std::vector<int> dp(full + 1, n + 1);
  dp[0] = 0;
  for (unsigned mask = 1; mask <= full; ++mask) {
    const unsigned low = mask & -mask;
    // Every partition has a part containing the lowest element.
    for (unsigned sub = mask; sub; sub = (sub - 1) & mask) {
      if ((sub & low) && is_chain[sub]) dp[mask] = std::min(dp[mask], dp[mask ^ sub] + 1);
    }
  }
  return dp[full];
}

}  // namespace geopricer::oracle

#endif  // GEOPRICER_TESTS_SUPPORT_HPP
