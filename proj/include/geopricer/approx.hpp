#ifndef GEOPRICER_APPROX_HPP
#define GEOPRICER_APPROX_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "geopricer/core.hpp"
#include "geopricer/exact.hpp"
#include "geopricer/subroutines.hpp"

namespace geopricer {

/// 1 / 4^(d-1).
Rational epsilon_of(int d);

struct ApproxConfig {
  std::function<Rational(int)> epsilon_schedule = epsilon_of;
  int balcan_blum_trials = 64;
  double net_constant = kDefaultNetConstant;
  std::uint64_t seed = 0;
  bool trace = true;
  /// Candidate prices for single-minded chain and base cases whose budgets
  /// are not all in {1, 2}; defaults to default_smp_lattice of the sub-instance.
  std::optional<PriceLattice> smp_lattice;
  std::uint64_t enumeration_cap = kDefaultEnumerationCap;
};

/**
 * One visited sub-instance. Consumers and items are indices into the
 * original instance. Leaves carry the revenue they earn on their own
 * sub-instance and the revenue of their prices extended to the whole
 * instance.
 */
struct ApproxTrace {
  std::string kind;  ///< root, base, chain, antichain, small-sets, hitting-group, coordinate-group
  std::string path;  ///< e.g. "/a0/h2/g1"
  int dimension = 0;
  Rational epsilon;
  std::vector<int> consumers;
  std::vector<int> items;
  bool leaf = false;
  bool skipped = false;  ///< leaf whose solver hit a cap; contributes nothing
  std::string method;
  Rational sub_revenue;
  Rational extended_revenue;
  PriceAssignment extended_prices;
  std::vector<ApproxTrace> children;
};

/// Leaves of a trace in depth-first order.
std::vector<const ApproxTrace*> trace_leaves(const ApproxTrace& root);

struct ApproxResult {
  Solution solution;
  ApproxTrace trace;
};

/**
 * Recursive approximation for d-dimensional min-buying pricing.
 *
 * d = 1 is solved exactly. Otherwise items are split into large antichains
 * and chains. Chains are solved exactly on the line. For each antichain,
 * consumers considering at most n^(1 - eps/2) of its items go to Balcan-Blum,
 * and the rest are covered by a hitting set H. Each hit item I* anchors the
 * consumers considering it, and each coordinate group of the antichain around
 * I* drops a coordinate and recurses. Every leaf's prices are extended to the
 * whole instance; the best extension wins, earliest leaf on ties.
 */
ApproxResult uudp_min_approx(const Instance& inst, const ApproxConfig& cfg = {});

/// The same recursion for single-minded pricing. Chain and base leaves use
/// smp_special_case_dp when every budget is 1 or 2 and otherwise the lattice
/// oracle under the enumeration cap; capped leaves are skipped.
ApproxResult smp_approx(const Instance& inst, const ApproxConfig& cfg = {});

/// Checks that every (consumer, considered item) pair of inst lies in some
/// leaf; returns the first uncovered pair or nullopt.
std::optional<std::pair<int, int>> find_uncovered_pair(const Instance& inst, const ApproxTrace& trace);

}  // namespace geopricer

#endif  // GEOPRICER_APPROX_HPP
