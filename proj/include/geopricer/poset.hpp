#ifndef GEOPRICER_POSET_HPP
#define GEOPRICER_POSET_HPP

#include <span>
#include <vector>

#include "geopricer/core.hpp"

namespace geopricer {

/**
 * Coordinate-wise dominance order on a list of items.
 *
 * less_equal(i, j) holds when item i is weakly below item j in every
 * coordinate. Equal points are ordered by index (the lower index is below),
 * which keeps the relation antisymmetric: duplicates always land in the same
 * chain and never inside one antichain.
 */
class DominanceOrder {
 public:
  explicit DominanceOrder(std::span<const Point> items);

  int size() const { return n_; }
  bool less_equal(int i, int j) const { return rel_[static_cast<std::size_t>(i * n_ + j)] != 0; }
  bool less(int i, int j) const { return i != j && less_equal(i, j); }
  bool comparable(int i, int j) const { return less_equal(i, j) || less_equal(j, i); }

  /// The order restricted to a subset; element k of the result is subset[k].
  DominanceOrder restricted(std::span<const int> subset) const;

 private:
  DominanceOrder() = default;
  int n_ = 0;
  std::vector<char> rel_;
};

DominanceOrder build_dominance_order(std::span<const Point> items);

/// Minimum chain partition via maximum bipartite matching (Hopcroft-Karp):
/// left copy i joined to right copy j when i < j; chains follow matched
/// edges. Each chain is listed bottom to top. Count = n - |matching|.
std::vector<std::vector<int>> min_chain_cover(const DominanceOrder& order);

/// Maximum antichain read off the minimum vertex cover of the same matching
/// (Konig). Its size equals the number of chains of min_chain_cover.
std::vector<int> max_antichain(const DominanceOrder& order);

struct ChainAntichainDecomposition {
  std::vector<std::vector<int>> antichains;
  std::vector<std::vector<int>> chains;  ///< each sorted bottom to top
};

/**
 * Splits items into antichains A_1..A_s and chains B_1..B_t.
 *
 * With n fixed at entry and threshold = ceil(n^(1 - eps/4)), maximum
 * antichains are extracted while they have at least `threshold` members; the
 * remainder is covered by a minimum chain partition. Guarantees
 * s <= ceil(n^(eps/4)) and t <= ceil(n^(1 - eps/4)).
 */
ChainAntichainDecomposition decompose_chains_antichains(std::span<const Point> items, const Rational& eps);

/// Exponent thresholds used by the decomposition, exposed for checks.
int antichain_threshold(int n, const Rational& eps);     // ceil(n^(1-eps/4))
int antichain_count_bound(int n, const Rational& eps);   // ceil(n^(eps/4))

}  // namespace geopricer

#endif  // GEOPRICER_POSET_HPP
