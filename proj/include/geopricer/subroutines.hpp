#ifndef GEOPRICER_SUBROUTINES_HPP
#define GEOPRICER_SUBROUTINES_HPP

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "geopricer/core.hpp"
#include "geopricer/exact.hpp"
#include "geopricer/rng.hpp"

namespace geopricer {

enum class EmbeddingKind { Identity, Chain, DropCoordinate, Grid, Permutation, Universal, Reduction };

std::string to_string(EmbeddingKind kind);

/**
 * A consideration-preserving embedding stored as per-index images.
 *
 * consumer_images[c] and item_images[i] are the images of consumer c and
 * item i of the source instance. The defining property is
 * dominates(item_images[i], consumer_images[c]) == dominates(I_i, C_c).
 */
struct Embedding {
  int source_dim = 0;
  int target_dim = 0;
  std::vector<Point> consumer_images;
  std::vector<Point> item_images;
  EmbeddingKind kind = EmbeddingKind::Identity;
};

/// The image instance of an embedding. Consumers are index-aligned with the
/// source; target item k is source item item_map[k].
struct EmbeddedInstance {
  Instance instance;
  Embedding embedding;
  std::vector<int> item_map;
};

struct EmbeddingCheck {
  bool ok = true;
  int consumer = -1;  ///< first offending pair, -1 when not pair-specific
  int item = -1;
  std::string reason;
};

/**
 * Checks that target is the image of source under emb: sizes, budgets and
 * models agree, target points equal the stored images, and every
 * (consumer, item) pair has the same domination status on both sides.
 */
EmbeddingCheck verify_embedding(const Instance& source, const Instance& target, const Embedding& emb);

/// Identity embedding of an instance onto itself.
Embedding identity_embedding(const Instance& inst);

/**
 * Maps a dominance chain to the line. The k-th chain item (0-based, bottom to
 * top) goes to coordinate k+1; a consumer goes to the coordinate of the lowest
 * chain item dominating her, or to chain length + 1 when none does. Every
 * consumer of inst is kept; the target items are exactly the chain.
 */
EmbeddedInstance chain_embedding(const Instance& inst, std::span<const int> chain);

/**
 * Deletes coordinate j. Requires the guard item to dominate every consumer
 * and every item to be at least the guard in coordinate j, which makes the
 * coordinate vacuous. Rejects one-dimensional input.
 */
EmbeddedInstance drop_coordinate_embedding(const Instance& inst, int j, int guard_item);

struct HittingSet {
  std::vector<int> items;  ///< sorted item indices
  Rational delta;
  std::uint64_t seed = 0;
  int resamples = 0;        ///< extra samples drawn after the first
  bool greedy_fallback = false;
  std::uint64_t sample_size = 0;  ///< draws per attempt, before deduplication
};

inline constexpr double kDefaultNetConstant = 8.0;
inline constexpr int kNetRetryCap = 32;

/// ceil(c * (d/delta) * ln(max(d/delta, 2))).
std::uint64_t epsilon_net_sample_size(int dimension, const Rational& delta, double c = kDefaultNetConstant);

/**
 * Samples items uniformly with replacement until every heavy consumer's
 * consideration set is hit, retrying with fresh substreams up to
 * kNetRetryCap times and then falling back to greedy set cover.
 * Heavy consumers must consider at least max(1, delta * n) items; otherwise a
 * PreconditionError lists the offenders.
 */
HittingSet epsilon_net_hitting_set(const Instance& inst, std::span<const int> heavy, const Rational& delta,
                                   const Rng& rng, double c = kDefaultNetConstant);

struct BalcanBlumSample {
  std::vector<int> items;      ///< kept items, ascending
  std::vector<int> consumers;  ///< consumers with exactly one kept item, ascending
};

/// Keeps every item independently with probability 1/k.
BalcanBlumSample balcan_blum_sample(const Instance& inst, int k, Rng& rng);

/// max(1, largest consideration set).
int max_consideration_size(const Instance& inst);

/**
 * Best of `trials` independent samples. Each sampled item is priced for its
 * own singleton consumers (the budget b maximizing b times the number of them
 * who can afford b); unsampled items get the model's neutral fill (excluded
 * for min-buying, 0 for single-minded). Trial t draws from rng.derive({t});
 * ties go to the lowest trial.
 */
Solution balcan_blum_approx(const Instance& inst, int trials, const Rng& rng);

/// Consumers with |S_C n antichain| <= threshold go to `small`, the rest to `large`.
std::pair<std::vector<int>, std::vector<int>> split_by_consideration_size(const Instance& inst,
                                                                          std::span<const int> antichain,
                                                                          const Rational& threshold);

/// Same split with threshold n^exponent, compared exactly in integers.
std::pair<std::vector<int>, std::vector<int>> split_by_power_threshold(const Instance& inst,
                                                                       std::span<const int> antichain,
                                                                       std::int64_t n, const Rational& exponent);

/**
 * A^j = {I in antichain : I[j] >= guard[j]} for each coordinate j. For an
 * antichain the groups cover it. Comparable members raise PreconditionError.
 */
std::vector<std::vector<int>> coordinate_groups(std::span<const int> antichain, int guard_item, const Instance& inst);

}  // namespace geopricer

#endif  // GEOPRICER_SUBROUTINES_HPP
