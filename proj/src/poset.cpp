#include "geopricer/poset.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "geopricer/errors.hpp"
#include "geopricer/exact_pow.hpp"

namespace geopricer {

DominanceOrder::DominanceOrder(std::span<const Point> items) : n_(static_cast<int>(items.size())) {
  rel_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), 0);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      const Point& a = items[static_cast<std::size_t>(i)];
      const Point& b = items[static_cast<std::size_t>(j)];
      bool le = dominates(b, a);
      if (le && i > j && a == b) le = false;
      rel_[static_cast<std::size_t>(i * n_ + j)] = le ? 1 : 0;
    }
  }
}

DominanceOrder DominanceOrder::restricted(std::span<const int> subset) const {
  DominanceOrder out;
  out.n_ = static_cast<int>(subset.size());
  out.rel_.assign(subset.size() * subset.size(), 0);
  for (int a = 0; a < out.n_; ++a) {
    for (int b = 0; b < out.n_; ++b) {
      out.rel_[static_cast<std::size_t>(a * out.n_ + b)] =
          less_equal(subset[static_cast<std::size_t>(a)], subset[static_cast<std::size_t>(b)]) ? 1 : 0;
    }
  }
  return out;
}

DominanceOrder build_dominance_order(std::span<const Point> items) { return DominanceOrder(items); }

namespace {

/// Hopcroft-Karp on the split graph of a strict order.
struct SplitMatching {
  std::vector<int> match_left;   // left i -> right j, or -1
  std::vector<int> match_right;  // right j -> left i, or -1
  int size = 0;
};

SplitMatching hopcroft_karp(const DominanceOrder& order) {
  const int n = order.size();
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (order.less(i, j)) adj[static_cast<std::size_t>(i)].push_back(j);
    }
  }
  SplitMatching m;
  m.match_left.assign(static_cast<std::size_t>(n), -1);
  m.match_right.assign(static_cast<std::size_t>(n), -1);
  std::vector<int> dist(static_cast<std::size_t>(n));
  constexpr int kInf = std::numeric_limits<int>::max();

  auto bfs = [&]() {
    std::queue<int> q;
    bool found = false;
    for (int i = 0; i < n; ++i) {
      if (m.match_left[static_cast<std::size_t>(i)] < 0) {
        dist[static_cast<std::size_t>(i)] = 0;
        q.push(i);
      } else {
        dist[static_cast<std::size_t>(i)] = kInf;
      }
    }
    while (!q.empty()) {
      const int i = q.front();
      q.pop();
      for (int j : adj[static_cast<std::size_t>(i)]) {
        const int next = m.match_right[static_cast<std::size_t>(j)];
        if (next < 0) {
          found = true;
        } else if (dist[static_cast<std::size_t>(next)] == kInf) {
          dist[static_cast<std::size_t>(next)] = dist[static_cast<std::size_t>(i)] + 1;
          q.push(next);
        }
      }
    }
    return found;
  };

  auto dfs = [&](auto&& self, int i) -> bool {
    for (int j : adj[static_cast<std::size_t>(i)]) {
      const int next = m.match_right[static_cast<std::size_t>(j)];
      if (next < 0 || (dist[static_cast<std::size_t>(next)] == dist[static_cast<std::size_t>(i)] + 1 && self(self, next))) {
        m.match_left[static_cast<std::size_t>(i)] = j;
        m.match_right[static_cast<std::size_t>(j)] = i;
        return true;
      }
    }
    dist[static_cast<std::size_t>(i)] = kInf;
    return false;
  };

  while (bfs()) {
    for (int i = 0; i < n; ++i) {
      if (m.match_left[static_cast<std::size_t>(i)] < 0 && dfs(dfs, i)) ++m.size;
    }
  }
  return m;
}

}  // namespace

std::vector<std::vector<int>> min_chain_cover(const DominanceOrder& order) {
  const SplitMatching m = hopcroft_karp(order);
  std::vector<std::vector<int>> chains;
  for (int start = 0; start < order.size(); ++start) {
    if (m.match_right[static_cast<std::size_t>(start)] >= 0) continue;  // has a predecessor
    std::vector<int> chain;
    for (int cur = start; cur >= 0; cur = m.match_left[static_cast<std::size_t>(cur)]) chain.push_back(cur);
    chains.push_back(std::move(chain));
  }
  return chains;
}

std::vector<int> max_antichain(const DominanceOrder& order) {
  const int n = order.size();
  const SplitMatching m = hopcroft_karp(order);
  // Alternating reachability from unmatched left vertices.
  std::vector<char> left_seen(static_cast<std::size_t>(n), 0);
  std::vector<char> right_seen(static_cast<std::size_t>(n), 0);
  std::queue<int> q;
  for (int i = 0; i < n; ++i) {
    if (m.match_left[static_cast<std::size_t>(i)] < 0) {
      left_seen[static_cast<std::size_t>(i)] = 1;
      q.push(i);
    }
  }
  while (!q.empty()) {
    const int i = q.front();
    q.pop();
    for (int j = 0; j < n; ++j) {
      if (!order.less(i, j) || right_seen[static_cast<std::size_t>(j)]) continue;
      if (m.match_left[static_cast<std::size_t>(i)] == j) continue;
      right_seen[static_cast<std::size_t>(j)] = 1;
      const int back = m.match_right[static_cast<std::size_t>(j)];
      if (back >= 0 && !left_seen[static_cast<std::size_t>(back)]) {
        left_seen[static_cast<std::size_t>(back)] = 1;
        q.push(back);
      }
    }
  }
  // Cover = (L \ Z) u (R n Z); the antichain is what the cover misses twice.
  std::vector<int> antichain;
  for (int i = 0; i < n; ++i) {
    if (left_seen[static_cast<std::size_t>(i)] && !right_seen[static_cast<std::size_t>(i)]) antichain.push_back(i);
  }
  return antichain;
}

int antichain_threshold(int n, const Rational& eps) {
  return static_cast<int>(ceil_power(n, Rational(1) - eps / 4));
}

int antichain_count_bound(int n, const Rational& eps) { return static_cast<int>(ceil_power(n, eps / 4)); }

ChainAntichainDecomposition decompose_chains_antichains(std::span<const Point> items, const Rational& eps) {
  if (eps <= 0 || eps > 1) throw InputError("epsilon must lie in (0, 1]");
  const int n = static_cast<int>(items.size());
  const DominanceOrder full(items);
  const int threshold = antichain_threshold(n, eps);

  ChainAntichainDecomposition out;
  std::vector<int> remaining = all_indices(n);
  while (!remaining.empty()) {
    const DominanceOrder sub = full.restricted(remaining);
    std::vector<int> anti = max_antichain(sub);
    if (static_cast<int>(anti.size()) < threshold) break;
    std::vector<int> extracted;
    std::vector<char> take(remaining.size(), 0);
    for (int k : anti) {
      take[static_cast<std::size_t>(k)] = 1;
      extracted.push_back(remaining[static_cast<std::size_t>(k)]);
    }
    std::vector<int> rest;
    for (std::size_t k = 0; k < remaining.size(); ++k) {
      if (!take[k]) rest.push_back(remaining[k]);
    }
    std::sort(extracted.begin(), extracted.end());
    out.antichains.push_back(std::move(extracted));
    remaining = std::move(rest);
  }
  if (!remaining.empty()) {
    for (const auto& chain : min_chain_cover(full.restricted(remaining))) {
      std::vector<int> mapped;
      mapped.reserve(chain.size());
      for (int k : chain) mapped.push_back(remaining[static_cast<std::size_t>(k)]);
      out.chains.push_back(std::move(mapped));
    }
  }
  return out;
}

}  // namespace geopricer
