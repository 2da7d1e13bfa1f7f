#ifndef GEOPRICER_REDUCTIONS_HPP
#define GEOPRICER_REDUCTIONS_HPP

#include <utility>
#include <vector>

#include "geopricer/core.hpp"
#include "geopricer/io.hpp"
#include "geopricer/rng.hpp"

namespace geopricer {

/// Path v_0 .. v_n with edges 1..n; a consumer wants edges s+1..t.
struct HighwayInstance {
  struct Request {
    int s = 0;
    int t = 0;
    Rational budget;
  };
  int edges = 0;
  std::vector<Request> consumers;
};

/// Bipartite graph with 0-based vertex indices on each side.
struct BipartiteGvpInstance {
  struct Edge {
    int u = 0;
    int w = 0;
    Rational budget;
  };
  int left = 0;
  int right = 0;
  std::vector<Edge> edges;
};

/// Consumers with explicit consideration sets over items 0..items-1.
struct SetSystemInstance {
  struct Request {
    std::vector<int> set;
    Rational budget;
  };
  int items = 0;
  std::vector<Request> consumers;
};

/// Simple undirected graph on vertices 0..vertices-1.
struct Graph {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;
};

/// Index correspondence of a reduction: image item k stands for source
/// object item_source[k], image consumer c for consumer_source[c].
struct Correspondence {
  std::vector<int> item_source;
  std::vector<int> consumer_source;
};

struct Reduction {
  Instance instance;
  Correspondence correspondence;
};

/// Item i (edge i, 1-based) at (i, n+1-i); consumer (s, t) at (s+1, n+1-t).
Reduction highway_to_2smp(const HighwayInstance& h);

/// u_i at (i, |U|+1-i, K, K), w_j at (K, K, j, |W|+1-j) with K = |U|+|W|+2,
/// and edge (u_i, w_j) at (i, |U|+1-i, j, |W|+1-j). Items list U then W.
Reduction bipartite_gvp_to_4smp(const BipartiteGvpInstance& g);

/// One item per vertex; a budget-1 consumer per edge wanting its endpoints,
/// then a budget-2 consumer per vertex wanting that vertex alone.
SetSystemInstance vertex_cover_to_pricing(const Graph& g);

/// Item i is 0 in coordinate i and 1 elsewhere; a consumer is 0 exactly on
/// the coordinates of her set. Dimension max(items, 1).
Reduction universal_embedding(const SetSystemInstance& s, Model model = Model::UudpMin);

/// Smallest d >= 1 with B^d n^(B+2) <= (B+1)^d, i.e. (1 - 1/(B+1))^d <= n^-(B+2).
int permutation_dimension(int n, int max_set_size);

struct PermutationEmbedding {
  Reduction reduction;
  int dimension = 0;
  int max_set_size = 0;
};

/**
 * d random permutations pi_1..pi_d of the items. Item j gets coordinate
 * pi_i(j) + 1 and a consumer the minimum of that over her set (n + 1 for an
 * empty set). Every member of the set dominates her; an outsider does unless
 * it falls below her minimum in some coordinate, which fails only with small
 * probability.
 */
PermutationEmbedding random_permutation_embedding(const SetSystemInstance& s, int max_set_size, Rng& rng,
                                                  Model model = Model::UudpMin);

/// True iff every consumer's consideration set in the image equals her set.
bool preserves_sets(const SetSystemInstance& s, const Instance& image);

/// Minimum vertex cover size by exhaustive search (small graphs only).
int min_vertex_cover_size(const Graph& g);

// JSON forms used by the command-line tool.
HighwayInstance highway_from_json(const Json& j);
BipartiteGvpInstance bipartite_from_json(const Json& j);
SetSystemInstance set_system_from_json(const Json& j);
Graph graph_from_json(const Json& j);
Json set_system_to_json(const SetSystemInstance& s);
Json correspondence_to_json(const Correspondence& c);

}  // namespace geopricer

#endif  // GEOPRICER_REDUCTIONS_HPP
