#ifndef GEOPRICER_QPTAS_HPP
#define GEOPRICER_QPTAS_HPP

#include <cstdint>
#include <vector>

#include "geopricer/core.hpp"
#include "geopricer/exact.hpp"
#include "geopricer/subroutines.hpp"

namespace geopricer {

/**
 * A two-dimensional instance on the odd/even grid: items at odd coordinates
 * with exactly one item per odd row and column, consumers at even
 * coordinates. Items and consumers are index-aligned with the source.
 */
struct GridInstance {
  Instance instance;
  Embedding embedding;
};

/**
 * Rank-remaps a 2-D instance onto the grid. Items are ranked by (x, index)
 * and by (y, reversed index), so of two items on one row the lower index ends
 * up higher. A consumer moves to twice the number of items strictly below her
 * in each coordinate. Consideration sets are preserved exactly and checked.
 */
GridInstance grid_normalize(const Instance& inst);

struct PriceLadder {
  Rational epsilon;
  std::vector<Rational> levels;  ///< 0, 1, (1+eps), ..., (1+eps)^q
  int q = 0;
};

inline constexpr int kDefaultLadderCap = 40;

/// q is the least integer with (1+eps)^q >= the largest budget (0 when every
/// budget is at most 1). q > cap raises SizeError.
PriceLadder build_ladder(const Instance& inst, const Rational& eps, int cap = kDefaultLadderCap);

inline constexpr std::uint64_t kDefaultStateCap = 1'000'000;

/**
 * Profile dynamic program for 2-D min-buying pricing.
 *
 * Items are processed by decreasing y. The state after a prefix is the
 * profile: for each ladder level, the item of largest x among the prefix
 * items priced at or below it (or none). A consumer whose considered items
 * are exactly the first j in that order is charged when item j is placed: she
 * pays the lowest level whose profile item has x at least hers, if within
 * budget. The result equals the best assignment of ladder prices exactly.
 */
Solution qptas_uudp2(const Instance& inst, const Rational& eps, std::uint64_t state_cap = kDefaultStateCap);

struct PartitionNode {
  int lo = 0;     ///< x-rank range [lo, hi], 1-based
  int hi = 0;
  int split = 0;  ///< x-rank of the item owned by this node
  int item = -1;  ///< its index in the grid instance
  std::vector<int> consumers;  ///< consumers whose first item to the right in x is `split`
  int left = -1;
  int right = -1;
};

/// Balanced tree over item x-ranks; node 0 is the root (when there are items).
struct PartitionTree {
  std::vector<PartitionNode> nodes;
  std::vector<int> unassigned;  ///< consumers right of every item (consider nothing)
};

PartitionTree build_partition_tree(const GridInstance& g);

/**
 * Exact single-minded optimum over prices {0, 1} for 2-D instances with every
 * budget in {1, 2}.
 *
 * A consumer pays k when exactly k of her items cost 1 and k <= min(2, budget),
 * so only the three highest price-1 items of each relevant region matter. The
 * DP over the partition tree keys each node by the top three (by y) price-1
 * items to the right of its range and the top three inside it.
 */
Solution smp_special_case_dp(const Instance& inst, std::uint64_t state_cap = kDefaultStateCap);

/// True when every budget is 1 or 2.
bool budgets_in_one_two(const Instance& inst);

struct PreprocessedSmp {
  Instance instance;              ///< kept consumers with scaled budgets
  std::vector<int> consumer_map;  ///< kept consumer -> original consumer
  Rational scale;                 ///< M' = m n / (eps B_max); prices map back by division
  bool degenerate = false;        ///< nothing to scale (no items, live consumers, or positive budgets)
};

/// Drops consumers considering nothing, then those with budget below
/// eps B_max / (m n) over the rest, and multiplies the remaining budgets by
/// M' = m n / (eps B_max).
PreprocessedSmp preprocess_smp(const Instance& inst, const Rational& eps);

/// Divides every non-excluded price by the preprocessing scale.
PriceAssignment map_back_prices(const PreprocessedSmp& pre, const PriceAssignment& scaled);

}  // namespace geopricer

#endif  // GEOPRICER_QPTAS_HPP
