#include "geopricer/qptas.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <stdexcept>

#include "geopricer/errors.hpp"

namespace geopricer {

GridInstance grid_normalize(const Instance& inst) {
  if (inst.dimension() != 2) throw PreconditionError("grid normalization needs a two-dimensional instance");
  const int n = inst.num_items();

  std::vector<int> by_x = all_indices(n);
  std::sort(by_x.begin(), by_x.end(), [&](int a, int b) {
    const Rational& xa = inst.item(a)[0];
    const Rational& xb = inst.item(b)[0];
    return xa != xb ? xa < xb : a < b;
  });
  std::vector<int> by_y = all_indices(n);
  std::sort(by_y.begin(), by_y.end(), [&](int a, int b) {
    const Rational& ya = inst.item(a)[1];
    const Rational& yb = inst.item(b)[1];
    return ya != yb ? ya < yb : a > b;
  });

  Embedding emb{2, 2, {}, std::vector<Point>(static_cast<std::size_t>(n)), EmbeddingKind::Grid};
  std::vector<std::int64_t> x_rank(static_cast<std::size_t>(n));
  std::vector<std::int64_t> y_rank(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) {
    x_rank[static_cast<std::size_t>(by_x[static_cast<std::size_t>(r)])] = r + 1;
    y_rank[static_cast<std::size_t>(by_y[static_cast<std::size_t>(r)])] = r + 1;
  }
  for (int i = 0; i < n; ++i) {
    emb.item_images[static_cast<std::size_t>(i)] =
        Point{Rational(2 * x_rank[static_cast<std::size_t>(i)] - 1), Rational(2 * y_rank[static_cast<std::size_t>(i)] - 1)};
  }
  for (const Consumer& c : inst.consumers()) {
    std::int64_t below_x = 0;
    std::int64_t below_y = 0;
    for (const Point& p : inst.items()) {
      below_x += p[0] < c.point[0];
      below_y += p[1] < c.point[1];
    }
    emb.consumer_images.push_back(Point{Rational(2 * below_x), Rational(2 * below_y)});
  }

  std::vector<Consumer> consumers;
  for (std::size_t c = 0; c < emb.consumer_images.size(); ++c) {
    consumers.push_back({emb.consumer_images[c], inst.consumer(static_cast<int>(c)).budget});
  }
  Instance target(2, emb.item_images, std::move(consumers), inst.model());
  const EmbeddingCheck check = verify_embedding(inst, target, emb);
  if (!check.ok) throw std::logic_error("grid normalization broke a consideration set: " + check.reason);
  return {std::move(target), std::move(emb)};
}

PriceLadder build_ladder(const Instance& inst, const Rational& eps, int cap) {
  if (!(eps > 0)) throw InputError("ladder epsilon must be positive");
  Rational max_budget = 0;
  for (const Consumer& c : inst.consumers()) max_budget = std::max(max_budget, c.budget);
  PriceLadder ladder{eps, {Rational(0), Rational(1)}, 0};
  Rational level = 1;
  const Rational step = Rational(1) + eps;
  try {
    while (level < max_budget) {
      if (++ladder.q > cap) {
        throw SizeError("price ladder needs more than " + std::to_string(cap) + " levels");
      }
      level *= step;
      ladder.levels.push_back(level);
    }
  } catch (const ArithmeticError&) {
    throw SizeError("price ladder levels overflow exact arithmetic at q = " + std::to_string(ladder.q));
  }
  return ladder;
}

namespace {

void require_uudp2(const Instance& inst) {
  if (inst.dimension() != 2) throw PreconditionError("expected a two-dimensional instance");
  if (inst.model() != Model::UudpMin) throw PreconditionError("expected a uudp-min instance");
}

std::int64_t grid_coord(const Point& p, std::size_t k) { return p[k].num(); }

}  // namespace

Solution qptas_uudp2(const Instance& inst, const Rational& eps, std::uint64_t state_cap) {
  require_uudp2(inst);
  const PriceLadder ladder = build_ladder(inst, eps);
  const GridInstance grid = grid_normalize(inst);
  const Instance& g = grid.instance;
  const int n = g.num_items();
  const std::size_t levels = ladder.levels.size();

  std::vector<int> order = all_indices(n);  // decreasing y
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return grid_coord(g.item(a), 1) > grid_coord(g.item(b), 1); });
  std::vector<std::int64_t> x(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = grid_coord(g.item(i), 0);

  // A consumer at even row 2k considers the first n - k items of `order`.
  std::vector<std::vector<int>> at_level(static_cast<std::size_t>(n) + 1);
  for (int c = 0; c < g.num_consumers(); ++c) {
    const std::int64_t k = grid_coord(g.consumer(c).point, 1) / 2;
    at_level[static_cast<std::size_t>(n - k)].push_back(c);
  }

  using Profile = std::vector<int>;
  struct Entry {
    Rational value;
    int prev = -1;
    int level = 0;
  };
  struct Layer {
    std::map<Profile, int> index;
    std::vector<Profile> states;
    std::vector<Entry> entries;
  };
  std::vector<Layer> layers(static_cast<std::size_t>(n) + 1);
  layers[0].index.emplace(Profile(levels, -1), 0);
  layers[0].states.push_back(Profile(levels, -1));
  layers[0].entries.push_back({Rational(0), -1, 0});
  std::uint64_t total_states = 1;

  for (int j = 1; j <= n; ++j) {
    const int item = order[static_cast<std::size_t>(j - 1)];
    const Layer& prev = layers[static_cast<std::size_t>(j - 1)];
    Layer& cur = layers[static_cast<std::size_t>(j)];
    for (std::size_t s = 0; s < prev.states.size(); ++s) {
      for (std::size_t t = 0; t < levels; ++t) {
        Profile next = prev.states[s];
        for (std::size_t l = t; l < levels; ++l) {
          if (next[l] < 0 || x[static_cast<std::size_t>(item)] > x[static_cast<std::size_t>(next[l])]) next[l] = item;
        }
        for (std::size_t l = 1; l < levels; ++l) {
          if (next[l - 1] >= 0 && x[static_cast<std::size_t>(next[l - 1])] > x[static_cast<std::size_t>(next[l])]) {
            throw std::logic_error("profile lost monotonicity");
          }
        }
        Rational gain = 0;
        for (int c : at_level[static_cast<std::size_t>(j)]) {
          const std::int64_t cx = grid_coord(g.consumer(c).point, 0);
          for (std::size_t l = 0; l < levels; ++l) {
            if (next[l] >= 0 && x[static_cast<std::size_t>(next[l])] >= cx) {
              if (ladder.levels[l] <= g.consumer(c).budget) gain += ladder.levels[l];
              break;
            }
          }
        }
        const Rational value = prev.entries[s].value + gain;
        auto [it, fresh] = cur.index.emplace(next, static_cast<int>(cur.states.size()));
        if (fresh) {
          if (++total_states > state_cap) {
            throw SizeError("profile DP exceeded the state cap of " + std::to_string(state_cap));
          }
          cur.states.push_back(std::move(next));
          cur.entries.push_back({value, static_cast<int>(s), static_cast<int>(t)});
        } else if (value > cur.entries[static_cast<std::size_t>(it->second)].value) {
          cur.entries[static_cast<std::size_t>(it->second)] = {value, static_cast<int>(s), static_cast<int>(t)};
        }
      }
    }
  }

  const Layer& last = layers[static_cast<std::size_t>(n)];
  int best = 0;
  for (std::size_t s = 1; s < last.entries.size(); ++s) {
    if (last.entries[s].value > last.entries[static_cast<std::size_t>(best)].value) best = static_cast<int>(s);
  }
  std::vector<Price> prices(static_cast<std::size_t>(n), Price::of(0));
  for (int j = n, s = best; j >= 1; --j) {
    const Entry& e = layers[static_cast<std::size_t>(j)].entries[static_cast<std::size_t>(s)];
    prices[static_cast<std::size_t>(order[static_cast<std::size_t>(j - 1)])] =
        Price::of(ladder.levels[static_cast<std::size_t>(e.level)]);
    s = e.prev;
  }
  Solution sol{PriceAssignment(std::move(prices)), last.entries[static_cast<std::size_t>(best)].value, "qptas-2d"};
  check_solution(inst, sol);
  return sol;
}

PartitionTree build_partition_tree(const GridInstance& grid) {
  const Instance& g = grid.instance;
  const int n = g.num_items();
  std::vector<int> item_at_rank(static_cast<std::size_t>(n) + 1, -1);
  for (int i = 0; i < n; ++i) {
    item_at_rank[static_cast<std::size_t>((grid_coord(g.item(i), 0) + 1) / 2)] = i;
  }
  PartitionTree tree;
  std::vector<int> node_at_rank(static_cast<std::size_t>(n) + 2, -1);
  std::function<int(int, int)> build = [&](int lo, int hi) -> int {
    if (lo > hi) return -1;
    const int id = static_cast<int>(tree.nodes.size());
    const int split = lo + (hi - lo + 1) / 2;
    tree.nodes.push_back({lo, hi, split, item_at_rank[static_cast<std::size_t>(split)], {}, -1, -1});
    node_at_rank[static_cast<std::size_t>(split)] = id;
    const int left = build(lo, split - 1);
    const int right = build(split + 1, hi);
    tree.nodes[static_cast<std::size_t>(id)].left = left;
    tree.nodes[static_cast<std::size_t>(id)].right = right;
    return id;
  };
  build(1, n);
  for (int c = 0; c < g.num_consumers(); ++c) {
    const auto first = static_cast<std::size_t>(grid_coord(g.consumer(c).point, 0) / 2 + 1);
    if (first > static_cast<std::size_t>(n)) {
      tree.unassigned.push_back(c);
    } else {
      tree.nodes[static_cast<std::size_t>(node_at_rank[first])].consumers.push_back(c);
    }
  }
  return tree;
}

bool budgets_in_one_two(const Instance& inst) {
  return std::all_of(inst.consumers().begin(), inst.consumers().end(),
                     [](const Consumer& c) { return c.budget == 1 || c.budget == 2; });
}

namespace {

/// Up to three item indices sorted by decreasing y, padded with -1.
using Triple = std::array<int, 3>;
constexpr Triple kEmptyTriple{-1, -1, -1};

class SmpTreeDp {
 public:
  SmpTreeDp(const GridInstance& grid, std::uint64_t cap)
      : g_(grid.instance), tree_(build_partition_tree(grid)), cap_(cap), memo_(tree_.nodes.size()) {}

  Solution solve() {
    std::vector<Price> prices(static_cast<std::size_t>(g_.num_items()), Price::of(0));
    Rational best = 0;
    if (!tree_.nodes.empty()) {
      const auto& root = table(0, kEmptyTriple);
      auto best_it = root.begin();
      for (auto it = root.begin(); it != root.end(); ++it) {
        if (it->second.value > best_it->second.value) best_it = it;
      }
      best = best_it->second.value;
      assign(0, kEmptyTriple, best_it->first, prices);
    }
    return {PriceAssignment(std::move(prices)), best, "smp-special-dp"};
  }

 private:
  struct Entry {
    Rational value;
    int price = 0;
    Triple left;   // top three of the left child's region
    Triple right;  // top three of the right child's region
  };
  using Table = std::map<Triple, Entry>;

  std::int64_t y(int item) const { return grid_coord(g_.item(item), 1); }

  Triple top3(int own, const Triple& a, const Triple& b) const {
    std::vector<int> all;
    if (own >= 0) all.push_back(own);
    for (int i : a) {
      if (i >= 0) all.push_back(i);
    }
    for (int i : b) {
      if (i >= 0) all.push_back(i);
    }
    std::sort(all.begin(), all.end(), [&](int p, int q) { return y(p) > y(q); });
    Triple out = kEmptyTriple;
    for (std::size_t k = 0; k < std::min<std::size_t>(3, all.size()); ++k) out[k] = all[k];
    return out;
  }

  /// m1 + 2 m2 over the node's consumers, given the top three price-1 items
  /// at or right of the node's split.
  Rational node_revenue(const PartitionNode& node, const Triple& visible) const {
    Rational total = 0;
    for (int c : node.consumers) {
      const std::int64_t cy = grid_coord(g_.consumer(c).point, 1);
      std::int64_t count = 0;
      for (int i : visible) count += (i >= 0 && y(i) >= cy);
      if ((count == 1 || count == 2) && Rational(count) <= g_.consumer(c).budget) total += Rational(count);
    }
    return total;
  }

  const Table& table(int node_id, const Triple& outside) {
    static const Table kLeafTable{{kEmptyTriple, Entry{Rational(0), 0, kEmptyTriple, kEmptyTriple}}};
    if (node_id < 0) return kLeafTable;
    auto& by_context = memo_[static_cast<std::size_t>(node_id)];
    if (auto it = by_context.find(outside); it != by_context.end()) return it->second;

    const PartitionNode& node = tree_.nodes[static_cast<std::size_t>(node_id)];
    Table out;
    const Table& right = table(node.right, outside);
    for (int price = 0; price <= 1; ++price) {
      const int own = price == 1 ? node.item : -1;
      for (const auto& [sv, ev] : right) {
        const Triple visible = top3(own, sv, outside);
        const Rational here = node_revenue(node, visible);
        const Table& left = table(node.left, visible);
        for (const auto& [su, eu] : left) {
          const Triple region = top3(own, su, sv);
          const Rational value = ev.value + eu.value + here;
          auto [it, fresh] = out.try_emplace(region, Entry{value, price, su, sv});
          if (fresh) {
            if (++states_ > cap_) throw SizeError("2-SMP DP exceeded the state cap of " + std::to_string(cap_));
          } else if (value > it->second.value) {
            it->second = Entry{value, price, su, sv};
          }
        }
      }
    }
    return by_context.emplace(outside, std::move(out)).first->second;
  }

  void assign(int node_id, const Triple& outside, const Triple& region, std::vector<Price>& prices) {
    if (node_id < 0) return;
    const PartitionNode& node = tree_.nodes[static_cast<std::size_t>(node_id)];
    const Entry entry = table(node_id, outside).at(region);
    prices[static_cast<std::size_t>(node.item)] = Price::of(entry.price);
    const Triple visible = top3(entry.price == 1 ? node.item : -1, entry.right, outside);
    assign(node.right, outside, entry.right, prices);
    assign(node.left, visible, entry.left, prices);
  }

  const Instance& g_;
  PartitionTree tree_;
  std::uint64_t cap_;
  std::uint64_t states_ = 0;
  std::vector<std::map<Triple, Table>> memo_;
};

}  // namespace

Solution smp_special_case_dp(const Instance& inst, std::uint64_t state_cap) {
  if (inst.dimension() != 2) throw PreconditionError("expected a two-dimensional instance");
  if (inst.model() != Model::Smp) throw PreconditionError("expected a single-minded instance");
  if (!budgets_in_one_two(inst)) throw PreconditionError("every budget must be 1 or 2");
  const GridInstance grid = grid_normalize(inst);
  Solution sol = SmpTreeDp(grid, state_cap).solve();
  check_solution(inst, sol);
  return sol;
}

PreprocessedSmp preprocess_smp(const Instance& inst, const Rational& eps) {
  if (!(eps > 0) || !(eps < 1)) throw InputError("preprocessing epsilon must lie in (0, 1)");
  // Consumers considering nothing never pay; they would only inflate B_max.
  std::vector<int> live;
  Rational max_budget = 0;
  for (int c = 0; c < inst.num_consumers(); ++c) {
    if (consideration_set(inst, c).empty()) continue;
    live.push_back(c);
    max_budget = std::max(max_budget, inst.consumer(c).budget);
  }
  const auto m = static_cast<std::int64_t>(live.size());
  const auto n = static_cast<std::int64_t>(inst.num_items());
  if (m == 0 || n == 0 || max_budget == 0) {
    return {inst, all_indices(inst.num_consumers()), Rational(1), true};
  }
  const Rational cutoff = eps * max_budget / Rational(m * n);
  const Rational scale = Rational(m * n) / (eps * max_budget);
  std::vector<Consumer> kept;
  std::vector<int> map;
  for (int c : live) {
    if (inst.consumer(c).budget < cutoff) continue;
    kept.push_back({inst.consumer(c).point, inst.consumer(c).budget * scale});
    map.push_back(c);
  }
  const bool degenerate = kept.empty();
  return {Instance(inst.dimension(), inst.items(), std::move(kept), inst.model()), std::move(map), scale, degenerate};
}

PriceAssignment map_back_prices(const PreprocessedSmp& pre, const PriceAssignment& scaled) {
  std::vector<Price> out;
  out.reserve(scaled.size());
  for (const Price& p : scaled.prices) out.push_back(p.is_excluded() ? p : Price::of(p.value() / pre.scale));
  return PriceAssignment(std::move(out));
}

}  // namespace geopricer
