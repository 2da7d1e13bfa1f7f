#include "geopricer/reductions.hpp"

#include <algorithm>

#include <boost/multiprecision/cpp_int.hpp>

#include "geopricer/errors.hpp"

namespace geopricer {

Reduction highway_to_2smp(const HighwayInstance& h) {
  const std::int64_t n = h.edges;
  if (n < 0) throw InputError("negative edge count");
  std::vector<Point> items;
  for (std::int64_t i = 1; i <= n; ++i) items.push_back(Point{Rational(i), Rational(n + 1 - i)});
  std::vector<Consumer> consumers;
  for (const auto& r : h.consumers) {
    if (r.s < 0 || r.s >= r.t || r.t > n) {
      throw InputError("invalid subpath (" + std::to_string(r.s) + ", " + std::to_string(r.t) + ")");
    }
    consumers.push_back({Point{Rational(r.s + 1), Rational(n + 1 - r.t)}, r.budget});
  }
  Correspondence corr{all_indices(static_cast<int>(n)), all_indices(static_cast<int>(h.consumers.size()))};
  return {Instance(2, std::move(items), std::move(consumers), Model::Smp), std::move(corr)};
}

Reduction bipartite_gvp_to_4smp(const BipartiteGvpInstance& g) {
  if (g.left < 1 || g.right < 1) throw InputError("both sides of the graph must be nonempty");
  const std::int64_t nu = g.left;
  const std::int64_t nw = g.right;
  const Rational k(nu + nw + 2);
  std::vector<Point> items;
  for (std::int64_t i = 1; i <= nu; ++i) items.push_back(Point{Rational(i), Rational(nu + 1 - i), k, k});
  for (std::int64_t j = 1; j <= nw; ++j) items.push_back(Point{k, k, Rational(j), Rational(nw + 1 - j)});
  std::vector<Consumer> consumers;
  for (const auto& e : g.edges) {
    if (e.u < 0 || e.u >= g.left || e.w < 0 || e.w >= g.right) throw InputError("edge endpoint out of range");
    const std::int64_t i = e.u + 1;
    const std::int64_t j = e.w + 1;
    consumers.push_back({Point{Rational(i), Rational(nu + 1 - i), Rational(j), Rational(nw + 1 - j)}, e.budget});
  }
  Correspondence corr{all_indices(g.left + g.right), all_indices(static_cast<int>(g.edges.size()))};
  return {Instance(4, std::move(items), std::move(consumers), Model::Smp), std::move(corr)};
}

SetSystemInstance vertex_cover_to_pricing(const Graph& g) {
  SetSystemInstance s;
  s.items = g.vertices;
  for (const auto& [a, b] : g.edges) {
    if (a < 0 || b < 0 || a >= g.vertices || b >= g.vertices || a == b) throw InputError("graph is not simple");
    s.consumers.push_back({{std::min(a, b), std::max(a, b)}, Rational(1)});
  }
  for (int v = 0; v < g.vertices; ++v) s.consumers.push_back({{v}, Rational(2)});
  return s;
}

namespace {

void check_sets(const SetSystemInstance& s) {
  if (s.items < 0) throw InputError("negative item count");
  for (const auto& r : s.consumers) {
    for (int i : r.set) {
      if (i < 0 || i >= s.items) throw InputError("set member " + std::to_string(i) + " out of range");
    }
  }
}

}  // namespace

Reduction universal_embedding(const SetSystemInstance& s, Model model) {
  check_sets(s);
  const int d = std::max(s.items, 1);
  std::vector<Point> items;
  for (int i = 0; i < s.items; ++i) {
    std::vector<Rational> coords(static_cast<std::size_t>(d), Rational(1));
    coords[static_cast<std::size_t>(i)] = 0;
    items.emplace_back(std::move(coords));
  }
  std::vector<Consumer> consumers;
  for (const auto& r : s.consumers) {
    std::vector<Rational> coords(static_cast<std::size_t>(d), Rational(s.items == 0 ? 0 : 1));
    for (int i : r.set) coords[static_cast<std::size_t>(i)] = 0;
    consumers.push_back({Point(std::move(coords)), r.budget});
  }
  Correspondence corr{all_indices(s.items), all_indices(static_cast<int>(s.consumers.size()))};
  return {Instance(d, std::move(items), std::move(consumers), model), std::move(corr)};
}

int permutation_dimension(int n, int max_set_size) {
  if (n < 2) throw PreconditionError("the permutation embedding needs at least two items");
  if (max_set_size < 0) throw InputError("negative set size bound");
  using boost::multiprecision::cpp_int;
  const cpp_int b = max_set_size;
  const cpp_int rhs_base = b + 1;
  const cpp_int nb = boost::multiprecision::pow(cpp_int(n), static_cast<unsigned>(max_set_size + 2));
  cpp_int lhs = b * nb;
  cpp_int rhs = rhs_base;
  for (int d = 1; d <= 1'000'000; ++d) {
    if (lhs <= rhs) return d;
    lhs *= b;
    rhs *= rhs_base;
  }
  throw SizeError("permutation dimension is out of range");
}

PermutationEmbedding random_permutation_embedding(const SetSystemInstance& s, int max_set_size, Rng& rng,
                                                  Model model) {
  check_sets(s);
  for (std::size_t c = 0; c < s.consumers.size(); ++c) {
    if (static_cast<int>(s.consumers[c].set.size()) > max_set_size) {
      throw PreconditionError("consumer " + std::to_string(c) + " wants more than " + std::to_string(max_set_size) +
                              " items");
    }
  }
  const int n = s.items;
  const int d = permutation_dimension(n, max_set_size);
  std::vector<std::vector<Rational>> item_coords(static_cast<std::size_t>(n));
  std::vector<std::vector<Rational>> consumer_coords(s.consumers.size());
  for (int i = 0; i < d; ++i) {
    const std::vector<int> pi = rng.permutation(n);
    for (int j = 0; j < n; ++j) item_coords[static_cast<std::size_t>(j)].push_back(Rational(pi[static_cast<std::size_t>(j)] + 1));
    for (std::size_t c = 0; c < s.consumers.size(); ++c) {
      std::int64_t low = n + 1;
      for (int j : s.consumers[c].set) low = std::min<std::int64_t>(low, pi[static_cast<std::size_t>(j)] + 1);
      consumer_coords[c].push_back(Rational(low));
    }
  }
  std::vector<Point> items;
  for (auto& coords : item_coords) items.emplace_back(std::move(coords));
  std::vector<Consumer> consumers;
  for (std::size_t c = 0; c < s.consumers.size(); ++c) {
    consumers.push_back({Point(std::move(consumer_coords[c])), s.consumers[c].budget});
  }
  Correspondence corr{all_indices(n), all_indices(static_cast<int>(s.consumers.size()))};
  return {{Instance(d, std::move(items), std::move(consumers), model), std::move(corr)}, d, max_set_size};
}

bool preserves_sets(const SetSystemInstance& s, const Instance& image) {
  if (image.num_items() != s.items || image.num_consumers() != static_cast<int>(s.consumers.size())) return false;
  for (int c = 0; c < image.num_consumers(); ++c) {
    std::vector<int> want = s.consumers[static_cast<std::size_t>(c)].set;
    std::sort(want.begin(), want.end());
    want.erase(std::unique(want.begin(), want.end()), want.end());
    if (consideration_set(image, c) != want) return false;
  }
  return true;
}

int min_vertex_cover_size(const Graph& g) {
  if (g.vertices > 24) throw SizeError("exhaustive vertex cover is limited to 24 vertices");
  int best = g.vertices;
  for (std::uint32_t mask = 0; mask < (1u << g.vertices); ++mask) {
    const int size = __builtin_popcount(mask);
    if (size >= best) continue;
    const bool covers = std::all_of(g.edges.begin(), g.edges.end(), [&](const auto& e) {
      return ((mask >> e.first) & 1u) != 0 || ((mask >> e.second) & 1u) != 0;
    });
    if (covers) best = size;
  }
  return best;
}

namespace {

template <typename F>
auto parse_json(const char* what, F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed ") + what + " JSON: " + e.what());
  }
}

}  // namespace

HighwayInstance highway_from_json(const Json& j) {
  return parse_json("highway", [&] {
    HighwayInstance h;
    h.edges = j.at("edges").get<int>();
    for (const Json& c : j.at("consumers")) {
      h.consumers.push_back({c.at("s").get<int>(), c.at("t").get<int>(), rational_from_json(c.at("budget"))});
    }
    return h;
  });
}

BipartiteGvpInstance bipartite_from_json(const Json& j) {
  return parse_json("bipartite", [&] {
    BipartiteGvpInstance g;
    g.left = j.at("left").get<int>();
    g.right = j.at("right").get<int>();
    for (const Json& e : j.at("edges")) {
      g.edges.push_back({e.at("u").get<int>(), e.at("w").get<int>(), rational_from_json(e.at("budget"))});
    }
    return g;
  });
}

SetSystemInstance set_system_from_json(const Json& j) {
  return parse_json("set-system", [&] {
    SetSystemInstance s;
    s.items = j.at("items").get<int>();
    for (const Json& c : j.at("consumers")) {
      s.consumers.push_back({c.at("set").get<std::vector<int>>(), rational_from_json(c.at("budget"))});
    }
    return s;
  });
}

Graph graph_from_json(const Json& j) {
  return parse_json("graph", [&] {
    Graph g;
    g.vertices = j.at("vertices").get<int>();
    for (const Json& e : j.at("edges")) g.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    return g;
  });
}

Json set_system_to_json(const SetSystemInstance& s) {
  Json consumers = Json::array();
  for (const auto& r : s.consumers) consumers.push_back({{"set", r.set}, {"budget", rational_to_json(r.budget)}});
  return {{"items", s.items}, {"consumers", consumers}};
}

Json correspondence_to_json(const Correspondence& c) {
  return {{"items", c.item_source}, {"consumers", c.consumer_source}};
}

}  // namespace geopricer
