#include "geopricer/approx.hpp"

#include <algorithm>

#include "geopricer/errors.hpp"
#include "geopricer/exact_pow.hpp"
#include "geopricer/poset.hpp"
#include "geopricer/qptas.hpp"

namespace geopricer {

Rational epsilon_of(int d) {
  if (d < 1) throw InputError("dimension must be at least 1");
  Rational denom = 1;
  for (int k = 1; k < d; ++k) denom *= Rational(4);
  return Rational(1) / denom;
}

std::vector<const ApproxTrace*> trace_leaves(const ApproxTrace& root) {
  std::vector<const ApproxTrace*> out;
  std::vector<const ApproxTrace*> stack{&root};
  while (!stack.empty()) {
    const ApproxTrace* node = stack.back();
    stack.pop_back();
    if (node->leaf) out.push_back(node);
    for (auto it = node->children.rbegin(); it != node->children.rend(); ++it) stack.push_back(&*it);
  }
  return out;
}

std::optional<std::pair<int, int>> find_uncovered_pair(const Instance& inst, const ApproxTrace& trace) {
  const auto n = static_cast<std::size_t>(inst.num_items());
  std::vector<char> covered(static_cast<std::size_t>(inst.num_consumers()) * n, 0);
  for (const ApproxTrace* leaf : trace_leaves(trace)) {
    for (int c : leaf->consumers) {
      for (int i : leaf->items) covered[static_cast<std::size_t>(c) * n + static_cast<std::size_t>(i)] = 1;
    }
  }
  for (int c = 0; c < inst.num_consumers(); ++c) {
    for (int i : consideration_set(inst, c)) {
      if (!covered[static_cast<std::size_t>(c) * n + static_cast<std::size_t>(i)]) return std::make_pair(c, i);
    }
  }
  return std::nullopt;
}

namespace {

template <typename T>
std::vector<int> compose(const std::vector<int>& outer, const T& inner) {
  std::vector<int> out;
  out.reserve(inner.size());
  for (int k : inner) out.push_back(outer[static_cast<std::size_t>(k)]);
  return out;
}

std::uint64_t child_key(std::uint64_t key, char tag, std::size_t index) {
  return mix64(key ^ mix64((static_cast<std::uint64_t>(tag) << 32) + index + 1));
}

class Recursion {
 public:
  Recursion(const Instance& full, const ApproxConfig& cfg)
      : full_(full),
        cfg_(cfg),
        fill_(neutral_fill(full.model())),
        best_{PriceAssignment::uniform(full.num_items(), fill_), Rational(0), "approx-empty"} {
    best_.revenue = evaluate_revenue(full, best_.prices).total;
  }

  ApproxResult run() {
    ApproxTrace root;
    root.kind = "root";
    root.path = "";
    root.dimension = full_.dimension();
    root.consumers = all_indices(full_.num_consumers());
    root.items = all_indices(full_.num_items());
    recurse(full_, root.consumers, root.items, root, mix64(cfg_.seed));
    root.extended_revenue = best_.revenue;
    if (!cfg_.trace) root.children.clear();
    return {best_, std::move(root)};
  }

 private:
  /// Solves `sub` (dimension node.dimension) whose consumers and items map to
  /// the full instance through cmap and imap.
  void recurse(const Instance& sub, const std::vector<int>& cmap, const std::vector<int>& imap, ApproxTrace& node,
               std::uint64_t key) {
    if (sub.num_items() == 0 || sub.num_consumers() == 0) return;
    const int d = sub.dimension();
    if (d == 1) {
      std::vector<int> chain = all_indices(sub.num_items());
      std::sort(chain.begin(), chain.end(), [&](int a, int b) {
        return sub.item(a)[0] != sub.item(b)[0] ? sub.item(a)[0] < sub.item(b)[0] : a < b;
      });
      solve_chain(sub, chain, cmap, imap, node, "base", node.path + "/b");
      return;
    }

    const Rational eps = cfg_.epsilon_schedule(d);
    if (!(eps > 0) || eps > 1) throw InputError("epsilon schedule produced " + eps.str() + " for d = " + std::to_string(d));
    node.epsilon = eps;
    const auto n = static_cast<std::int64_t>(sub.num_items());
    const ChainAntichainDecomposition parts = decompose_chains_antichains(sub.items(), eps);

    for (std::size_t t = 0; t < parts.chains.size(); ++t) {
      solve_chain(sub, parts.chains[t], cmap, imap, node, "chain", node.path + "/c" + std::to_string(t));
    }

    // Heaviness cutoff: delta = 1 / ceil(n^(eps/2)) never exceeds n^(-eps/2).
    const Rational delta = Rational(1) / Rational(ceil_power(n, eps / 2));
    for (std::size_t a = 0; a < parts.antichains.size(); ++a) {
      const std::vector<int>& anti = parts.antichains[a];
      ApproxTrace& group = add_child(node, "antichain", node.path + "/a" + std::to_string(a), d, cmap, imap,
                                     all_indices(sub.num_consumers()), anti);
      const std::uint64_t anti_key = child_key(key, 'a', a);

      auto [small, large] = split_by_power_threshold(sub, anti, n, Rational(1) - eps / 2);
      // A large consumer that is not delta-heavy would break the hitting-set
      // precondition; she is served on the small side instead.
      SubInstance heavy_part = restrict_instance(sub, large, anti);
      std::vector<int> heavy;
      const Rational needed = delta * Rational(static_cast<std::int64_t>(anti.size()));
      for (int c = 0; c < heavy_part.instance.num_consumers(); ++c) {
        const auto size = static_cast<std::int64_t>(consideration_set(heavy_part.instance, c).size());
        if (size > 0 && Rational(size) >= needed) {
          heavy.push_back(c);
        } else {
          small.push_back(large[static_cast<std::size_t>(c)]);
        }
      }
      std::sort(small.begin(), small.end());
      if (heavy.size() != large.size()) heavy_part = restrict_instance(sub, compose(large, heavy), anti);

      if (!small.empty()) solve_small(sub, small, anti, cmap, imap, group, child_key(anti_key, 's', 0));
      if (heavy.empty()) continue;

      const Instance& big = heavy_part.instance;
      const std::vector<int> big_cmap = compose(cmap, heavy_part.consumer_map);
      const std::vector<int> big_imap = compose(imap, heavy_part.item_map);
      const HittingSet hits = epsilon_net_hitting_set(big, all_indices(big.num_consumers()), delta,
                                                      Rng(cfg_.seed).derive({child_key(anti_key, 'h', 0)}),
                                                      cfg_.net_constant);
      const std::vector<int> all_big_items = all_indices(big.num_items());
      for (int guard : hits.items) {
        std::vector<int> anchored;
        for (int c = 0; c < big.num_consumers(); ++c) {
          if (dominates(big.item(guard), big.consumer(c).point)) anchored.push_back(c);
        }
        ApproxTrace& hit = add_child(group, "hitting-group", group.path + "/h" + std::to_string(guard), d, big_cmap,
                                     big_imap, anchored, all_big_items);
        const std::uint64_t hit_key = child_key(anti_key, 'h', static_cast<std::size_t>(guard) + 1);
        const auto groups = coordinate_groups(all_big_items, guard, big);
        for (int j = 0; j < d; ++j) {
          const std::vector<int>& members = groups[static_cast<std::size_t>(j)];
          const SubInstance part = restrict_instance(big, anchored, members);
          const auto guard_pos =
              static_cast<int>(std::find(members.begin(), members.end(), guard) - members.begin());
          const EmbeddedInstance dropped = drop_coordinate_embedding(part.instance, j, guard_pos);
          const std::vector<int> part_cmap = compose(big_cmap, part.consumer_map);
          const std::vector<int> part_imap = compose(big_imap, compose(part.item_map, dropped.item_map));
          ApproxTrace& coord = add_child(hit, "coordinate-group", hit.path + "/g" + std::to_string(j), d - 1,
                                         part_cmap, part_imap, all_indices(part.instance.num_consumers()),
                                         all_indices(part.instance.num_items()));
          recurse(dropped.instance, part_cmap, part_imap, coord, child_key(hit_key, 'g', static_cast<std::size_t>(j)));
        }
      }
    }
  }

  ApproxTrace& add_child(ApproxTrace& parent, std::string kind, std::string path, int dimension,
                         const std::vector<int>& cmap, const std::vector<int>& imap, const std::vector<int>& consumers,
                         const std::vector<int>& items) {
    ApproxTrace child;
    child.kind = std::move(kind);
    child.path = std::move(path);
    child.dimension = dimension;
    child.consumers = compose(cmap, consumers);
    child.items = compose(imap, items);
    std::sort(child.consumers.begin(), child.consumers.end());
    std::sort(child.items.begin(), child.items.end());
    parent.children.push_back(std::move(child));
    return parent.children.back();
  }

  /// Records a solved leaf and keeps its extension when it beats the best.
  void finish_leaf(ApproxTrace& leaf, const std::optional<Solution>& sol, const std::vector<int>& leaf_imap) {
    leaf.leaf = true;
    if (!sol) {
      leaf.skipped = true;
      leaf.method = "skipped";
      return;
    }
    leaf.method = sol->method;
    leaf.sub_revenue = sol->revenue;
    PriceAssignment extended = extend_prices(sol->prices, leaf_imap, full_.num_items(), fill_);
    leaf.extended_revenue = evaluate_revenue(full_, extended).total;
    if (leaf.extended_revenue > best_.revenue) {
      best_ = Solution{extended, leaf.extended_revenue, "approx:" + leaf.kind};
    }
    if (cfg_.trace) leaf.extended_prices = std::move(extended);
  }

  void solve_chain(const Instance& sub, const std::vector<int>& chain, const std::vector<int>& cmap,
                   const std::vector<int>& imap, ApproxTrace& parent, const std::string& kind, const std::string& path) {
    ApproxTrace& leaf =
        add_child(parent, kind, path, sub.dimension(), cmap, imap, all_indices(sub.num_consumers()), chain);
    const EmbeddedInstance line = chain_embedding(sub, chain);
    finish_leaf(leaf, solve_line(line.instance), compose(imap, line.item_map));
  }

  std::optional<Solution> solve_line(const Instance& line) {
    if (line.model() == Model::UudpMin) return solve_one_dim_uudp(line);

    // Consumers beyond the top of the chain consider nothing; dropping them
    // keeps the budget test of the special-case DP meaningful.
    std::vector<int> active;
    for (int c = 0; c < line.num_consumers(); ++c) {
      if (!consideration_set(line, c).empty()) active.push_back(c);
    }
    const SubInstance kept = restrict_instance(line, active, all_indices(line.num_items()));
    const Instance& core = kept.instance;
    if (budgets_in_one_two(core)) {
      auto lift = [](const Point& p) { return Point{p[0], Rational(0)}; };
      std::vector<Point> items;
      for (const Point& p : core.items()) items.push_back(lift(p));
      std::vector<Consumer> consumers;
      for (const Consumer& c : core.consumers()) consumers.push_back({lift(c.point), c.budget});
      Solution sol = smp_special_case_dp(Instance(2, std::move(items), std::move(consumers), Model::Smp));
      sol.revenue = evaluate_revenue(line, sol.prices).total;
      return sol;
    }
    try {
      const PriceLattice lattice = cfg_.smp_lattice ? *cfg_.smp_lattice : default_smp_lattice(core);
      Solution sol = brute_force_smp(core, lattice, cfg_.enumeration_cap);
      sol.revenue = evaluate_revenue(line, sol.prices).total;
      return sol;
    } catch (const SizeError&) {
      return std::nullopt;
    }
  }

  void solve_small(const Instance& sub, const std::vector<int>& small, const std::vector<int>& anti,
                   const std::vector<int>& cmap, const std::vector<int>& imap, ApproxTrace& parent,
                   std::uint64_t key) {
    ApproxTrace& leaf = add_child(parent, "small-sets", parent.path + "/s", sub.dimension(), cmap, imap, small, anti);
    const SubInstance part = restrict_instance(sub, small, anti);
    const Solution sol =
        balcan_blum_approx(part.instance, cfg_.balcan_blum_trials, Rng(cfg_.seed).derive({key}));
    finish_leaf(leaf, sol, compose(imap, part.item_map));
  }

  const Instance& full_;
  const ApproxConfig& cfg_;
  Price fill_;
  Solution best_;
};

}  // namespace

ApproxResult uudp_min_approx(const Instance& inst, const ApproxConfig& cfg) {
  if (inst.model() != Model::UudpMin) throw PreconditionError("uudp_min_approx expects a uudp-min instance");
  return Recursion(inst, cfg).run();
}

ApproxResult smp_approx(const Instance& inst, const ApproxConfig& cfg) {
  if (inst.model() != Model::Smp) throw PreconditionError("smp_approx expects a single-minded instance");
  return Recursion(inst, cfg).run();
}

}  // namespace geopricer
