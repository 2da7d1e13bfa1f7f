#ifndef GEOPRICER_EXACT_HPP
#define GEOPRICER_EXACT_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "geopricer/core.hpp"

namespace geopricer {

/// Prices plus the revenue they earn on the instance they were computed for.
struct Solution {
  PriceAssignment prices;
  Rational revenue;
  std::string method;
};

/// Candidate prices for the single-minded oracle: strictly increasing,
/// non-negative, and containing 0.
class PriceLattice {
 public:
  explicit PriceLattice(std::vector<Rational> values);
  static PriceLattice parse(const std::string& csv);  // "0,1,3/2"

  const std::vector<Rational>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }

 private:
  std::vector<Rational> values_;
};

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

/// Sorted distinct budgets with 0 added.
std::vector<Rational> budget_candidates(const Instance& inst);

/// Distinct budgets, every non-negative pairwise budget difference, and 0.
PriceLattice default_smp_lattice(const Instance& inst);

/**
 * Level of a consumer in a one-dimensional instance: with items sorted so
 * that I_1 >= I_2 >= ... >= I_n, the j with the consumer's coordinate in
 * (I_{j+1}, I_j]. Equivalently the number of items she considers; 0 when she
 * lies above every item. Item coordinates must be pairwise distinct.
 */
int level_of(const Instance& inst, int consumer);

/**
 * Exact optimum of a one-dimensional min-buying instance.
 *
 * Dynamic program over items in non-increasing coordinate order with prices
 * restricted to budgets and 0 and non-increasing along that order:
 * T[j][P] = gamma_j(P) + max_{P' >= P} T[j-1][P'], where gamma_j(P) is what the
 * level-j consumers pay at price P. The inner max is a running maximum over
 * candidates visited in decreasing order.
 */
Solution solve_one_dim_uudp(const Instance& inst);

/// Exhaustive min-buying optimum with every item priced from budgets and 0.
Solution brute_force_uudp(const Instance& inst, std::uint64_t cap = kDefaultEnumerationCap);

/// Exhaustive optimum with every item priced from `candidates` (either model).
/// Ties go to the lexicographically smallest candidate-index vector.
Solution brute_force_over(const Instance& inst, std::span<const Rational> candidates,
                          std::uint64_t cap = kDefaultEnumerationCap);

/// Single-minded optimum restricted to lattice prices. This is the best
/// lattice assignment, not a global optimum over real prices.
Solution brute_force_smp(const Instance& inst, const PriceLattice& lattice,
                         std::uint64_t cap = kDefaultEnumerationCap);

/// Re-evaluates a solution's prices and throws std::logic_error if the
/// stored revenue disagrees.
void check_solution(const Instance& inst, const Solution& sol);

}  // namespace geopricer

#endif  // GEOPRICER_EXACT_HPP
