#include "geopricer/subroutines.hpp"

#include <algorithm>
#include <cmath>

#include "geopricer/errors.hpp"
#include "geopricer/exact_pow.hpp"

namespace geopricer {

std::string to_string(EmbeddingKind kind) {
  switch (kind) {
    case EmbeddingKind::Identity: return "identity";
    case EmbeddingKind::Chain: return "chain";
    case EmbeddingKind::DropCoordinate: return "drop-coordinate";
    case EmbeddingKind::Grid: return "grid";
    case EmbeddingKind::Permutation: return "permutation";
    case EmbeddingKind::Universal: return "universal";
    case EmbeddingKind::Reduction: return "reduction";
  }
  return "unknown";
}

EmbeddingCheck verify_embedding(const Instance& source, const Instance& target, const Embedding& emb) {
  auto fail = [](std::string reason, int c = -1, int i = -1) {
    return EmbeddingCheck{false, c, i, std::move(reason)};
  };
  if (source.num_consumers() != target.num_consumers() || source.num_items() != target.num_items()) {
    return fail("source and target sizes differ");
  }
  if (emb.consumer_images.size() != static_cast<std::size_t>(source.num_consumers()) ||
      emb.item_images.size() != static_cast<std::size_t>(source.num_items())) {
    return fail("embedding images do not cover the source");
  }
  if (source.model() != target.model()) return fail("decision models differ");
  for (int c = 0; c < source.num_consumers(); ++c) {
    if (source.consumer(c).budget != target.consumer(c).budget) return fail("budget changed", c);
    if (target.consumer(c).point != emb.consumer_images[static_cast<std::size_t>(c)]) {
      return fail("target consumer differs from its stored image", c);
    }
  }
  for (int i = 0; i < source.num_items(); ++i) {
    if (target.item(i) != emb.item_images[static_cast<std::size_t>(i)]) {
      return fail("target item differs from its stored image", -1, i);
    }
  }
  for (int c = 0; c < source.num_consumers(); ++c) {
    for (int i = 0; i < source.num_items(); ++i) {
      if (dominates(source.item(i), source.consumer(c).point) != dominates(target.item(i), target.consumer(c).point)) {
        return fail("domination status differs", c, i);
      }
    }
  }
  return {};
}

Embedding identity_embedding(const Instance& inst) {
  Embedding emb{inst.dimension(), inst.dimension(), {}, inst.items(), EmbeddingKind::Identity};
  for (const Consumer& c : inst.consumers()) emb.consumer_images.push_back(c.point);
  return emb;
}

namespace {

Instance image_instance(const Instance& inst, const Embedding& emb) {
  std::vector<Consumer> consumers;
  consumers.reserve(emb.consumer_images.size());
  for (std::size_t c = 0; c < emb.consumer_images.size(); ++c) {
    consumers.push_back({emb.consumer_images[c], inst.consumer(static_cast<int>(c)).budget});
  }
  return Instance(emb.target_dim, emb.item_images, std::move(consumers), inst.model());
}

}  // namespace

EmbeddedInstance chain_embedding(const Instance& inst, std::span<const int> chain) {
  for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
    if (!dominates(inst.item(chain[k + 1]), inst.item(chain[k]))) {
      throw PreconditionError("chain items " + std::to_string(chain[k]) + " and " + std::to_string(chain[k + 1]) +
                              " are out of dominance order");
    }
  }
  const auto len = static_cast<std::int64_t>(chain.size());
  Embedding emb{inst.dimension(), 1, {}, {}, EmbeddingKind::Chain};
  for (std::int64_t k = 0; k < len; ++k) emb.item_images.push_back(Point{Rational(k + 1)});
  for (const Consumer& c : inst.consumers()) {
    // Dominators form an up-set of the chain, so the first one fixes the rest.
    std::int64_t pos = len + 1;
    for (std::int64_t k = 0; k < len; ++k) {
      if (dominates(inst.item(chain[static_cast<std::size_t>(k)]), c.point)) {
        pos = k + 1;
        break;
      }
    }
    emb.consumer_images.push_back(Point{Rational(pos)});
  }
  Instance target = image_instance(inst, emb);
  return {std::move(target), std::move(emb), std::vector<int>(chain.begin(), chain.end())};
}

EmbeddedInstance drop_coordinate_embedding(const Instance& inst, int j, int guard_item) {
  if (inst.dimension() < 2) throw PreconditionError("cannot drop a coordinate of a one-dimensional instance");
  if (j < 0 || j >= inst.dimension()) throw InputError("coordinate index out of range");
  const Point& guard = inst.item(guard_item);
  for (int c = 0; c < inst.num_consumers(); ++c) {
    if (!dominates(guard, inst.consumer(c).point)) {
      throw PreconditionError("guard item " + std::to_string(guard_item) + " does not dominate consumer " +
                              std::to_string(c));
    }
  }
  const auto jj = static_cast<std::size_t>(j);
  for (int i = 0; i < inst.num_items(); ++i) {
    if (inst.item(i)[jj] < guard[jj]) {
      throw PreconditionError("item " + std::to_string(i) + " lies below guard item " + std::to_string(guard_item) +
                              " in coordinate " + std::to_string(j));
    }
  }
  auto drop = [jj](const Point& p) {
    std::vector<Rational> coords = p.coords;
    coords.erase(coords.begin() + static_cast<std::ptrdiff_t>(jj));
    return Point(std::move(coords));
  };
  Embedding emb{inst.dimension(), inst.dimension() - 1, {}, {}, EmbeddingKind::DropCoordinate};
  for (const Consumer& c : inst.consumers()) emb.consumer_images.push_back(drop(c.point));
  for (const Point& p : inst.items()) emb.item_images.push_back(drop(p));
  Instance target = image_instance(inst, emb);
  return {std::move(target), std::move(emb), all_indices(inst.num_items())};
}

std::uint64_t epsilon_net_sample_size(int dimension, const Rational& delta, double c) {
  if (!(delta > 0)) throw InputError("hitting-set delta must be positive");
  const double ratio = static_cast<double>(dimension) / delta.to_double();
  return static_cast<std::uint64_t>(std::ceil(c * ratio * std::log(std::max(ratio, 2.0))));
}

HittingSet epsilon_net_hitting_set(const Instance& inst, std::span<const int> heavy, const Rational& delta,
                                   const Rng& rng, double c) {
  const int n = inst.num_items();
  std::vector<std::vector<int>> targets;
  std::string light;
  for (int consumer : heavy) {
    auto set = consideration_set(inst, consumer);
    const Rational size(static_cast<std::int64_t>(set.size()));
    if (set.empty() || size < delta * Rational(n)) light += (light.empty() ? "" : ", ") + std::to_string(consumer);
    targets.push_back(std::move(set));
  }
  if (!light.empty()) throw PreconditionError("consumers below the heaviness threshold: " + light);

  HittingSet out;
  out.delta = delta;
  out.seed = rng.seed();
  if (targets.empty()) return out;
  out.sample_size = epsilon_net_sample_size(inst.dimension(), delta, c);

  auto hits_all = [&](const std::vector<char>& chosen) {
    return std::all_of(targets.begin(), targets.end(), [&](const std::vector<int>& set) {
      return std::any_of(set.begin(), set.end(), [&](int i) { return chosen[static_cast<std::size_t>(i)] != 0; });
    });
  };
  auto collect = [&](const std::vector<char>& chosen) {
    std::vector<int> items;
    for (int i = 0; i < n; ++i) {
      if (chosen[static_cast<std::size_t>(i)]) items.push_back(i);
    }
    return items;
  };

  // Drawing more than n * 64 times is pointless; every item is in by then
  // with overwhelming probability, and the verification catches the rest.
  const std::uint64_t draws = std::min<std::uint64_t>(out.sample_size, static_cast<std::uint64_t>(n) * 64);
  for (int attempt = 0; attempt <= kNetRetryCap; ++attempt) {
    Rng stream = rng.derive({static_cast<std::uint64_t>(attempt)});
    std::vector<char> chosen(static_cast<std::size_t>(n), 0);
    for (std::uint64_t k = 0; k < draws; ++k) chosen[stream.below(static_cast<std::uint64_t>(n))] = 1;
    if (hits_all(chosen)) {
      out.items = collect(chosen);
      out.resamples = attempt;
      return out;
    }
  }

  // Greedy cover: always succeeds because every target is nonempty.
  out.greedy_fallback = true;
  out.resamples = kNetRetryCap;
  std::vector<char> chosen(static_cast<std::size_t>(n), 0);
  std::vector<char> hit(targets.size(), 0);
  for (;;) {
    std::vector<int> gain(static_cast<std::size_t>(n), 0);
    bool any = false;
    for (std::size_t t = 0; t < targets.size(); ++t) {
      if (hit[t]) continue;
      any = true;
      for (int i : targets[t]) ++gain[static_cast<std::size_t>(i)];
    }
    if (!any) break;
    const auto best = static_cast<int>(std::max_element(gain.begin(), gain.end()) - gain.begin());
    chosen[static_cast<std::size_t>(best)] = 1;
    for (std::size_t t = 0; t < targets.size(); ++t) {
      if (std::find(targets[t].begin(), targets[t].end(), best) != targets[t].end()) hit[t] = 1;
    }
  }
  out.items = collect(chosen);
  return out;
}

BalcanBlumSample balcan_blum_sample(const Instance& inst, int k, Rng& rng) {
  if (k < 1) throw InputError("sampling parameter k must be positive");
  BalcanBlumSample out;
  std::vector<char> kept(static_cast<std::size_t>(inst.num_items()), 0);
  for (int i = 0; i < inst.num_items(); ++i) {
    if (rng.one_in(static_cast<std::uint64_t>(k))) {
      kept[static_cast<std::size_t>(i)] = 1;
      out.items.push_back(i);
    }
  }
  for (int c = 0; c < inst.num_consumers(); ++c) {
    int count = 0;
    for (int i : consideration_set(inst, c)) count += kept[static_cast<std::size_t>(i)];
    if (count == 1) out.consumers.push_back(c);
  }
  return out;
}

int max_consideration_size(const Instance& inst) {
  std::size_t k = 1;
  for (const auto& set : consideration_sets(inst)) k = std::max(k, set.size());
  return static_cast<int>(k);
}

Solution balcan_blum_approx(const Instance& inst, int trials, const Rng& rng) {
  if (trials < 1) throw InputError("trial count must be positive");
  const int k = max_consideration_size(inst);
  const auto sets = consideration_sets(inst);
  const Price fill = neutral_fill(inst.model());

  Solution best{PriceAssignment::uniform(inst.num_items(), fill), Rational(-1), "balcan-blum"};
  for (int t = 0; t < trials; ++t) {
    Rng stream = rng.derive({static_cast<std::uint64_t>(t)});
    const BalcanBlumSample sample = balcan_blum_sample(inst, k, stream);
    std::vector<char> kept(static_cast<std::size_t>(inst.num_items()), 0);
    for (int i : sample.items) kept[static_cast<std::size_t>(i)] = 1;

    // Budgets of each sampled item's singleton market.
    std::vector<std::vector<Rational>> market(static_cast<std::size_t>(inst.num_items()));
    for (int c : sample.consumers) {
      for (int i : sets[static_cast<std::size_t>(c)]) {
        if (kept[static_cast<std::size_t>(i)]) market[static_cast<std::size_t>(i)].push_back(inst.consumer(c).budget);
      }
    }
    std::vector<Price> prices(static_cast<std::size_t>(inst.num_items()), fill);
    for (int i : sample.items) {
      auto& budgets = market[static_cast<std::size_t>(i)];
      if (budgets.empty()) continue;
      std::sort(budgets.begin(), budgets.end(), std::greater<>());
      Rational best_take = -1;
      Rational best_price;
      for (std::size_t r = 0; r < budgets.size(); ++r) {
        const Rational take = budgets[r] * Rational(static_cast<std::int64_t>(r + 1));
        if (take > best_take) {
          best_take = take;
          best_price = budgets[r];
        }
      }
      prices[static_cast<std::size_t>(i)] = Price::of(best_price);
    }
    PriceAssignment assignment(std::move(prices));
    const Rational revenue = evaluate_revenue(inst, assignment).total;
    if (revenue > best.revenue) {
      best.prices = std::move(assignment);
      best.revenue = revenue;
    }
  }
  return best;
}

std::pair<std::vector<int>, std::vector<int>> split_by_consideration_size(const Instance& inst,
                                                                          std::span<const int> antichain,
                                                                          const Rational& threshold) {
  std::vector<char> in(static_cast<std::size_t>(inst.num_items()), 0);
  for (int i : antichain) in[static_cast<std::size_t>(i)] = 1;
  std::pair<std::vector<int>, std::vector<int>> out;
  for (int c = 0; c < inst.num_consumers(); ++c) {
    std::int64_t count = 0;
    for (int i : consideration_set(inst, c)) count += in[static_cast<std::size_t>(i)];
    (Rational(count) <= threshold ? out.first : out.second).push_back(c);
  }
  return out;
}

std::pair<std::vector<int>, std::vector<int>> split_by_power_threshold(const Instance& inst,
                                                                       std::span<const int> antichain,
                                                                       std::int64_t n, const Rational& exponent) {
  std::vector<char> in(static_cast<std::size_t>(inst.num_items()), 0);
  for (int i : antichain) in[static_cast<std::size_t>(i)] = 1;
  std::pair<std::vector<int>, std::vector<int>> out;
  for (int c = 0; c < inst.num_consumers(); ++c) {
    std::int64_t count = 0;
    for (int i : consideration_set(inst, c)) count += in[static_cast<std::size_t>(i)];
    (at_most_power(count, n, exponent) ? out.first : out.second).push_back(c);
  }
  return out;
}

std::vector<std::vector<int>> coordinate_groups(std::span<const int> antichain, int guard_item, const Instance& inst) {
  if (std::find(antichain.begin(), antichain.end(), guard_item) == antichain.end()) {
    throw PreconditionError("guard item is not a member of the antichain");
  }
  for (std::size_t a = 0; a < antichain.size(); ++a) {
    for (std::size_t b = a + 1; b < antichain.size(); ++b) {
      const Point& p = inst.item(antichain[a]);
      const Point& q = inst.item(antichain[b]);
      if (dominates(p, q) || dominates(q, p)) {
        throw PreconditionError("items " + std::to_string(antichain[a]) + " and " + std::to_string(antichain[b]) +
                                " are comparable");
      }
    }
  }
  const Point& guard = inst.item(guard_item);
  std::vector<std::vector<int>> groups(static_cast<std::size_t>(inst.dimension()));
  for (int j = 0; j < inst.dimension(); ++j) {
    for (int i : antichain) {
      if (inst.item(i)[static_cast<std::size_t>(j)] >= guard[static_cast<std::size_t>(j)]) {
        groups[static_cast<std::size_t>(j)].push_back(i);
      }
    }
  }
  return groups;
}

}  // namespace geopricer
