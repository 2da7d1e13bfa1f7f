// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>

#include "geopricer/approx.hpp"
#include "geopricer/exact.hpp"
#include "geopricer/harness.hpp"
#include "geopricer/io.hpp"
#include "geopricer/poset.hpp"
#include "geopricer/qptas.hpp"
#include "geopricer/reductions.hpp"
#include "geopricer/subroutines.hpp"
#include "support.hpp"

using namespace geopricer;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects the first few failure messages and a pass flag.
struct Tally {
  int checked = 0;
  int failed = 0;
  std::string first;

  void check(bool ok, const std::string& what) {
    ++checked;
    if (ok) return;
    if (failed == 0) first = what;
    ++failed;
  }
  Outcome outcome(const std::string& summary) const {
    std::string detail = summary;
    if (failed > 0) detail += "; " + std::to_string(failed) + " failures, first: " + first;
    return {failed == 0, detail};
  }
};

std::string str(const Rational& r) { return r.str(); }

int below(Rng& rng, int n) { return static_cast<int>(rng.below(static_cast<std::uint64_t>(n))); }

// Random line instance with distinct item coordinates.
Instance random_line(Rng& rng, int n, int m) {
  std::vector<Point> items;
  for (int p : rng.permutation(2 * n + 2)) {
    if (static_cast<int>(items.size()) < n) items.push_back(Point{Rational(p + 1)});
  }
  std::vector<Consumer> consumers;
  for (int c = 0; c < m; ++c) {
    consumers.push_back({Point{Rational(below(rng, 2 * n + 4))}, Rational(1 + below(rng, 3))});
  }
  return Instance(1, std::move(items), std::move(consumers), Model::UudpMin);
}

// Consideration sets of a geometric instance as a set system.
SetSystemInstance set_system_of(const Instance& inst) {
  SetSystemInstance s{inst.num_items(), {}};
  for (int c = 0; c < inst.num_consumers(); ++c) s.consumers.push_back({consideration_set(inst, c), inst.consumer(c).budget});
  return s;
}

// An index-aligned map from source to image, as an embedding record.
Embedding aligned_embedding(const Instance& source, const Instance& image, EmbeddingKind kind) {
  Embedding e;
  e.source_dim = source.dimension();
  e.target_dim = image.dimension();
  e.item_images = image.items();
  for (const Consumer& c : image.consumers()) e.consumer_images.push_back(c.point);
  e.kind = kind;
  return e;
}

Rational opt_of(const Instance& inst, const std::vector<Rational>& smp_lattice) {
  return inst.model() == Model::UudpMin ? brute_force_uudp(inst).revenue
                                        : brute_force_smp(inst, PriceLattice(smp_lattice)).revenue;
}

// ---------------------------------------------------------------------------

Outcome ac1_one_dim() {
  Rng rng(1001);
  Tally t;
  for (int k = 0; k < 500; ++k) {
    const Instance inst = random_line(rng, 1 + below(rng, 5), below(rng, 7));
    const Rational dp = solve_one_dim_uudp(inst).revenue;
    const Rational bf = brute_force_uudp(inst).revenue;
    t.check(dp == bf, "instance " + std::to_string(k) + ": dp " + str(dp) + " vs oracle " + str(bf));
  }
  return t.outcome(std::to_string(t.checked) + " instances, DP equals brute force");
}

Outcome ac2_dilworth() {
  Rng rng(1002);
  Tally t;
  int exhaustive = 0;
  for (int k = 0; k < 1000; ++k) {
    const int n = below(rng, 13);
    const int d = 1 + below(rng, 4);
    std::vector<Point> pts;
    for (int i = 0; i < n; ++i) {
      std::vector<Rational> c;
      for (int j = 0; j < d; ++j) c.push_back(Rational(below(rng, 6)));
      pts.emplace_back(std::move(c));
    }
    const DominanceOrder order(pts);
    const auto chains = min_chain_cover(order);
    const auto anti = max_antichain(order);
    const std::string tag = "order " + std::to_string(k) + " (n=" + std::to_string(n) + ")";
    t.check(chains.size() == anti.size(), tag + ": chains " + std::to_string(chains.size()) + " vs antichain " +
                                              std::to_string(anti.size()));
    bool incomparable = true;
    for (std::size_t a = 0; a < anti.size(); ++a) {
      for (std::size_t b = a + 1; b < anti.size(); ++b) incomparable = incomparable && !order.comparable(anti[a], anti[b]);
    }
    t.check(incomparable, tag + ": antichain has a comparable pair");
    t.check(check_decomposition(pts, ChainAntichainDecomposition{{}, chains}).empty(), tag + ": invalid chain cover");
    if (n <= 9) {
      ++exhaustive;
      t.check(static_cast<int>(chains.size()) == oracle::exhaustive_min_chain_partition(order),
              tag + ": chain cover differs from exhaustive minimum");
      t.check(static_cast<int>(anti.size()) == oracle::exhaustive_max_antichain(order),
              tag + ": antichain differs from exhaustive maximum");
    }
  }
  return t.outcome("1000 orders, " + std::to_string(exhaustive) + " with exhaustive oracles");
}

// Parts of an instance given as (consumers, items) in original indices.
using Part = std::pair<std::vector<int>, std::vector<int>>;

void check_parts(Tally& t, const Instance& inst, const std::vector<Part>& parts, const std::string& tag) {
  const std::vector<Rational> lattice = default_smp_lattice(inst).values();
  const Rational whole = opt_of(inst, lattice);
  Rational sum = 0;
  for (const auto& [cons, items] : parts) {
    const SubInstance sub = restrict_instance(inst, cons, items);
    const Solution part = inst.model() == Model::UudpMin
                              ? brute_force_uudp(sub.instance)
                              : brute_force_smp(sub.instance, PriceLattice(lattice));
    sum += part.revenue;
    const Rational extended = evaluate_revenue(inst, extend_prices(part.prices, sub, inst, neutral_fill(inst.model()))).total;
    t.check(extended >= part.revenue, tag + ": extended " + str(extended) + " < sub " + str(part.revenue));
  }
  t.check(sum >= whole, tag + ": sum of parts " + str(sum) + " < whole " + str(whole));
}

Outcome ac3_decomposition() {
  Rng rng(1003);
  Tally t;
  int trace_parts = 0;
  for (int k = 0; k < 300; ++k) {
    const Model model = k % 3 == 2 ? Model::Smp : Model::UudpMin;
    const int d = 2 + below(rng, 2);
    const Instance inst = oracle::random_instance(rng, 1 + below(rng, 4), below(rng, 6), d, {1, 2, 3}, 4, model);
    const std::string tag = "instance " + std::to_string(k);

    // Item partition into chains and antichains, every consumer in every part.
    const Rational eps = k % 2 ? Rational(1) : Rational(1, 4);
    const ChainAntichainDecomposition dec = decompose_chains_antichains(inst.items(), eps);
    std::vector<Part> parts;
    for (const auto& group : {dec.antichains, dec.chains}) {
      for (const auto& items : group) parts.emplace_back(all_indices(inst.num_consumers()), items);
    }
    check_parts(t, inst, parts, tag + " item partition");

    // The leaves of the recursion form a covering decomposition as well.
    const ApproxResult r = model == Model::UudpMin ? uudp_min_approx(inst, {.seed = static_cast<std::uint64_t>(k)})
                                                   : smp_approx(inst, {.seed = static_cast<std::uint64_t>(k)});
    t.check(!find_uncovered_pair(inst, r.trace).has_value(), tag + ": recursion leaves miss a pair");
    std::vector<Part> leaves;
    for (const ApproxTrace* leaf : trace_leaves(r.trace)) leaves.emplace_back(leaf->consumers, leaf->items);
    trace_parts += static_cast<int>(leaves.size());
    check_parts(t, inst, leaves, tag + " recursion leaves");
  }
  return t.outcome("300 instances, item partitions and " + std::to_string(trace_parts) + " recursion leaves");
}

Outcome ac4_embeddings() {
  Rng rng(1004);
  Tally t;
  int embeddings = 0;
  auto verify = [&](const Instance& source, const Instance& target, const Embedding& emb, const std::string& tag) {
    ++embeddings;
    const EmbeddingCheck check = verify_embedding(source, target, emb);
    t.check(check.ok, tag + ": " + check.reason);
    if (source.num_items() <= 5) {
      const std::vector<Rational> lattice = default_smp_lattice(source).values();
      t.check(opt_of(source, lattice) == opt_of(target, lattice), tag + ": optimum changed");
    }
  };

  for (int k = 0; k < 150; ++k) {
    const Model model = k % 2 ? Model::Smp : Model::UudpMin;
    const int n = 1 + below(rng, 5);
    const Instance inst = oracle::random_instance(rng, n, 1 + below(rng, 5), 2 + below(rng, 2), {1, 2, 3}, 4, model);
    const std::string tag = "instance " + std::to_string(k);

    for (const auto& chain : min_chain_cover(DominanceOrder(inst.items()))) {
      const EmbeddedInstance e = chain_embedding(inst, chain);
      const Instance source = restrict_instance(inst, all_indices(inst.num_consumers()), e.item_map).instance;
      verify(source, e.instance, e.embedding, tag + " chain");
    }
    if (inst.dimension() == 2) {
      const GridInstance g = grid_normalize(inst);
      verify(inst, g.instance, g.embedding, tag + " grid");
    }
    const Reduction u = universal_embedding(set_system_of(inst), model);
    verify(inst, u.instance, aligned_embedding(inst, u.instance, EmbeddingKind::Universal), tag + " universal");

    // A guarded copy: item 0 becomes the guard for a drop along coordinate j.
    const int j = below(rng, inst.dimension());
    std::vector<Point> items = inst.items();
    std::vector<Rational> guard(static_cast<std::size_t>(inst.dimension()), Rational(5));
    guard[static_cast<std::size_t>(j)] = Rational(0);
    items[0] = Point(guard);
    std::vector<Consumer> consumers;
    for (const Consumer& c : inst.consumers()) {
      std::vector<Rational> p;
      for (int q = 0; q < inst.dimension(); ++q) p.push_back(q == j ? Rational(0) : c.point[q]);
      consumers.push_back({Point(std::move(p)), c.budget});
    }
    const Instance guarded(inst.dimension(), items, consumers, model);
    const EmbeddedInstance dropped = drop_coordinate_embedding(guarded, j, 0);
    verify(guarded, dropped.instance, dropped.embedding, tag + " drop-coordinate");
  }

  for (int k = 0; k < 60; ++k) {
    HighwayInstance h{1 + below(rng, 5), {}};
    for (int c = 0, m = 1 + below(rng, 4); c < m; ++c) {
      const int s = below(rng, h.edges);
      h.consumers.push_back({s, s + 1 + below(rng, h.edges - s), Rational(1 + below(rng, 3))});
    }
    const Reduction r = highway_to_2smp(h);
    const Reduction u = universal_embedding(set_system_of(r.instance), Model::Smp);
    verify(u.instance, r.instance, aligned_embedding(u.instance, r.instance, EmbeddingKind::Reduction),
           "highway " + std::to_string(k));

    BipartiteGvpInstance g{1 + below(rng, 3), 1 + below(rng, 2), {}};
    for (int a = 0; a < g.left; ++a) {
      for (int b = 0; b < g.right; ++b) {
        if (rng.one_in(2)) g.edges.push_back({a, b, Rational(1 + below(rng, 2))});
      }
    }
    const Reduction b4 = bipartite_gvp_to_4smp(g);
    const Reduction ub = universal_embedding(set_system_of(b4.instance), Model::Smp);
    verify(ub.instance, b4.instance, aligned_embedding(ub.instance, b4.instance, EmbeddingKind::Reduction),
           "gvp " + std::to_string(k));
  }
  return t.outcome(std::to_string(embeddings) + " embeddings verified, optima compared where n <= 5");
}

Outcome ac5_approx() {
  Rng rng(1005);
  Tally t;
  Rational worst = 1;
  std::string worst_at = "none";
  for (int k = 0; k < 200; ++k) {
    const int d = 2 + k % 2;
    const Instance inst = oracle::random_instance(rng, 1 + below(rng, 6), below(rng, 9), d, {1, 2, 3}, 5);
    const ApproxResult r = uudp_min_approx(inst, {.seed = static_cast<std::uint64_t>(k), .trace = false});
    const Rational opt = brute_force_uudp(inst).revenue;
    const std::string tag = "instance " + std::to_string(k);
    t.check(r.solution.revenue <= opt, tag + ": approx " + str(r.solution.revenue) + " above oracle " + str(opt));
    t.check(evaluate_revenue(inst, r.solution.prices).total == r.solution.revenue, tag + ": revenue re-evaluation");
    if (r.solution.revenue > 0 && opt / r.solution.revenue > worst) {
      worst = opt / r.solution.revenue;
      worst_at = tag;
    } else if (r.solution.revenue == 0 && opt > 0) {
      t.check(false, tag + ": zero revenue against positive optimum");
    }
  }
  int chains = 0;
  for (int k = 0; k < 100; ++k) {
    const Instance inst = generate({.kind = GeneratorKind::Chain, .n = 1 + k % 5, .m = 8, .d = 2 + k % 2,
                                    .seed = static_cast<std::uint64_t>(k)});
    const Rational got = uudp_min_approx(inst, {.seed = static_cast<std::uint64_t>(k), .trace = false}).solution.revenue;
    const Rational opt = brute_force_uudp(inst).revenue;
    t.check(got == opt, "chain " + std::to_string(k) + ": " + str(got) + " vs " + str(opt));
    ++chains;
  }
  return t.outcome("200 random instances, worst ratio OPT/ALG = " + str(worst) + " (" + worst_at + "); " +
                   std::to_string(chains) + " chain instances exact");
}

Outcome ac6_balcan_blum() {
  Rng rng(1006);
  int met = 0;
  int total = 0;
  std::string first_miss;
  while (total < 200) {
    const Instance inst = oracle::random_instance(rng, 1 + below(rng, 6), 1 + below(rng, 8), 2, {1, 2, 3}, 6);
    const int k = max_consideration_size(inst);
    if (k > 3) continue;
    const Solution sol = balcan_blum_approx(inst, 64, Rng(static_cast<std::uint64_t>(total)));
    const Rational opt = brute_force_uudp(inst).revenue;
    // revenue >= opt / (e k), compared in floating point with a tiny slack.
    const double bound = opt.to_double() / (std::numbers::e * std::max(k, 1));
    if (sol.revenue.to_double() + 1e-12 >= bound) {
      ++met;
    } else if (first_miss.empty()) {
      first_miss = "instance " + std::to_string(total) + ": " + str(sol.revenue) + " vs OPT " + str(opt);
    }
    ++total;
  }
  const bool pass = met * 100 >= 95 * total;
  std::string detail = std::to_string(met) + "/" + std::to_string(total) + " instances meet OPT/(e k)";
  if (!first_miss.empty()) detail += "; first miss " + first_miss;
  return {pass, detail};
}

Outcome ac7_qptas() {
  Rng rng(1007);
  Tally t;
  const std::vector<std::pair<Rational, std::vector<Rational>>> configs{
      {Rational(1), {1, 2}}, {Rational(1), {1, 2, 3, 4}}, {Rational(1, 2), {1, 2}}, {Rational(1, 2), {1, Rational(3, 2)}}};
  for (int k = 0; k < 300; ++k) {
    const auto& [eps, budgets] = configs[static_cast<std::size_t>(k) % configs.size()];
    const Instance inst = oracle::random_instance(rng, 1 + below(rng, 5), below(rng, 7), 2, budgets, 5);
    const PriceLadder ladder = build_ladder(inst, eps);
    const std::string tag = "instance " + std::to_string(k);
    t.check(ladder.q <= 2, tag + ": q = " + std::to_string(ladder.q));
    const Rational got = qptas_uudp2(inst, eps).revenue;
    const Rational want = brute_force_over(inst, ladder.levels).revenue;
    t.check(got == want, tag + ": qptas " + str(got) + " vs ladder oracle " + str(want));
  }
  for (int k = 0; k < 200; ++k) {
    const Instance inst = oracle::random_instance(rng, 1 + below(rng, 5), below(rng, 7), 2, {1, 2}, 5);
    const Rational got = qptas_uudp2(inst, Rational(1)).revenue;
    const Rational opt = brute_force_uudp(inst).revenue;
    t.check(got == opt, "full-ladder instance " + std::to_string(k) + ": " + str(got) + " vs " + str(opt));
  }
  return t.outcome("300 ladder-oracle and 200 true-optimum comparisons");
}

Outcome ac8_smp_dp() {
  Rng rng(1008);
  Tally t;
  const PriceLattice unit = PriceLattice::parse("0,1");
  for (int k = 0; k < 300; ++k) {
    const Instance inst =
        oracle::random_instance(rng, 1 + below(rng, 5), 1 + below(rng, 7), 2, {1, 2}, 5, Model::Smp);
    const Rational got = smp_special_case_dp(inst).revenue;
    const Rational want = brute_force_smp(inst, unit).revenue;
    t.check(got == want, "instance " + std::to_string(k) + ": dp " + str(got) + " vs oracle " + str(want));
  }
  return t.outcome("300 instances, DP equals the {0,1} lattice oracle");
}

Outcome ac9_vertex_cover() {
  Tally t;
  for (int n = 0; n <= 5; ++n) {
    std::vector<std::pair<int, int>> all;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) all.emplace_back(a, b);
    }
    for (unsigned mask = 0; mask < (1u << all.size()); ++mask) {
      Graph g{n, {}};
      for (std::size_t e = 0; e < all.size(); ++e) {
        if (mask >> e & 1u) g.edges.push_back(all[e]);
      }
      const int m = static_cast<int>(g.edges.size());
      const Rational want(2 * n - min_vertex_cover_size(g) + m);
      const Rational got = brute_force_uudp(universal_embedding(vertex_cover_to_pricing(g)).instance).revenue;
      t.check(got == want, "n=" + std::to_string(n) + " mask " + std::to_string(mask) + ": " + str(got) + " vs " +
                               str(want));
    }
  }
  return t.outcome(std::to_string(t.checked) + " graphs on at most 5 vertices");
}

Outcome ac10_permutation() {
  const int n = 6;
  const int bound = 2;
  SetSystemInstance s{n, {}};
  s.consumers.push_back({{}, 1});
  for (int a = 0; a < n; ++a) {
    s.consumers.push_back({{a}, 1});
    for (int b = a + 1; b < n; ++b) s.consumers.push_back({{a, b}, 2});
  }
  int failures = 0;
  int dimension = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Rng rng(seed);
    const PermutationEmbedding e = random_permutation_embedding(s, bound, rng);
    dimension = e.dimension;
    failures += !preserves_sets(s, e.reduction.instance);
  }
  const bool pass = failures * 100 <= 5 * 200;
  return {pass, "d = " + std::to_string(dimension) + ", " + std::to_string(failures) + "/200 seeds fail (" +
                    std::to_string(s.consumers.size()) + " consumers, all sets of size <= 2)"};
}

Outcome ac11_determinism() {
  ExperimentConfig cfg;
  cfg.generator = {.n = 5, .m = 6, .d = 2};
  for (std::uint64_t s = 0; s < 30; ++s) cfg.seeds.push_back(s);
  cfg.algorithms = {"approx", "qptas", "balcan-blum", "oracle"};
  cfg.params.epsilon = Rational(1, 2);
  const ExperimentReport report = run_experiment(cfg);
  Tally t;
  Rng pick(1011);
  for (int k = 0; k < 20; ++k) {
    const ReportRow& row = report.rows[pick.below(report.rows.size())];
    GeneratorSpec spec = cfg.generator;
    spec.seed = row.seed;
    // Round-trip the instance through its JSON text before re-running.
    const Instance inst = instance_from_json(Json::parse(instance_to_json(generate(spec)).dump()));
    const Solution a = run_algorithm(row.algorithm, inst, row.seed, cfg.params);
    const Solution b = run_algorithm(row.algorithm, inst, row.seed, cfg.params);
    const std::string tag = row.algorithm + " seed " + std::to_string(row.seed);
    t.check(row.error.empty() && a.revenue == *row.revenue, tag + ": revenue differs from the report");
    t.check(solution_to_json(a).dump() == solution_to_json(b).dump(), tag + ": reruns differ");
  }
  const ExperimentReport again = run_experiment(cfg);
  bool same = again.rows.size() == report.rows.size();
  for (std::size_t r = 0; same && r < report.rows.size(); ++r) {
    same = report.rows[r].revenue == again.rows[r].revenue && report.rows[r].oracle == again.rows[r].oracle;
  }
  t.check(same, "a second experiment run differs");
  return t.outcome("20 sampled rows reproduced from instance JSON, seed and config");
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"AC1", "1-D exactness", 10, ac1_one_dim},
      {"AC2", "Dilworth duality", 60, ac2_dilworth},
      {"AC3", "decomposition revenue preservation", 60, ac3_decomposition},
      {"AC4", "embedding soundness", 60, ac4_embeddings},
      {"AC5", "recursive approximation soundness", 120, ac5_approx},
      {"AC6", "Balcan-Blum bound", 60, ac6_balcan_blum},
      {"AC7", "QPTAS exact on ladder", 120, ac7_qptas},
      {"AC8", "2-SMP special case", 120, ac8_smp_dp},
      {"AC9", "vertex-cover formula", 60, ac9_vertex_cover},
      {"AC10", "permutation embedding reliability", 30, ac10_permutation},
      {"AC11", "determinism", 120, ac11_determinism},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_s) {
      out.pass = false;
      out.detail += "; over the time limit";
    }
    failed += !out.pass;
    std::printf("[%s] %s %s: %s (%.2f s, limit %.0f s)\n", out.pass ? "PASS" : "FAIL", c.id, c.name,
                out.detail.c_str(), secs, c.limit_s);
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
