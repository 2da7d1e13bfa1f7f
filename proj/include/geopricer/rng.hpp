#ifndef GEOPRICER_RNG_HPP
#define GEOPRICER_RNG_HPP

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace geopricer {

/**
 * Deterministic SplitMix64 stream.
 *
 * The library never uses std:: distributions because their output differs
 * between standard library implementations. Everything random is drawn from
 * this generator, and substreams are derived by hashing (seed, tag...) so a
 * result depends only on the seed and the position in the computation, not
 * on scheduling.
 */
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  /// True with probability 1/k.
  bool one_in(std::uint64_t k) { return below(k) == 0; }

  /// Uniform double in [0, 1), 53-bit resolution.
  double uniform01();

  /// Uniformly random permutation of 0..n-1 (Fisher-Yates).
  std::vector<int> permutation(int n);

  /// Independent substream keyed by this stream's seed and the given tags.
  Rng derive(std::initializer_list<std::uint64_t> tags) const;

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t state_;
  std::uint64_t seed_ = state_;
};

/// SplitMix64 finalizer; used for seed derivation.
std::uint64_t mix64(std::uint64_t x);

}  // namespace geopricer

#endif  // GEOPRICER_RNG_HPP
