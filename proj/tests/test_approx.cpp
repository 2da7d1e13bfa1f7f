#include <gtest/gtest.h>

#include "geopricer/approx.hpp"
#include "geopricer/errors.hpp"
#include "geopricer/exact.hpp"
#include "support.hpp"

using namespace geopricer;

namespace {

// Items on a strictly increasing staircase, consumers anywhere.
Instance chain_instance(Rng& rng, int n, int m, int d, Model model = Model::UudpMin) {
  std::vector<Point> items;
  for (int i = 0; i < n; ++i) {
    std::vector<Rational> c;
    for (int k = 0; k < d; ++k) c.push_back(Rational(2 * (i + 1) + static_cast<std::int64_t>(k % 2)));
    items.emplace_back(std::move(c));
  }
  std::vector<Consumer> consumers;
  for (int c = 0; c < m; ++c) {
    std::vector<Rational> p;
    for (int k = 0; k < d; ++k) p.push_back(Rational(static_cast<std::int64_t>(rng.below(2 * n + 3))));
    consumers.push_back({Point(std::move(p)), Rational(static_cast<std::int64_t>(rng.below(3) + 1))});
  }
  return Instance(d, std::move(items), std::move(consumers), model);
}

void expect_sound_trace(const Instance& inst, const ApproxResult& r) {
  EXPECT_EQ(evaluate_revenue(inst, r.solution.prices).total, r.solution.revenue);
  EXPECT_EQ(find_uncovered_pair(inst, r.trace), std::nullopt);
  Rational best = 0;
  for (const ApproxTrace* leaf : trace_leaves(r.trace)) {
    if (leaf->skipped) continue;
    EXPECT_EQ(evaluate_revenue(inst, leaf->extended_prices).total, leaf->extended_revenue) << leaf->path;
    EXPECT_GE(leaf->extended_revenue, leaf->sub_revenue) << leaf->path;
    best = std::max(best, leaf->extended_revenue);
  }
  EXPECT_EQ(best, r.solution.revenue);
}

}  // namespace

TEST(EpsilonOf, Examples) {
  EXPECT_EQ(epsilon_of(1), Rational(1));
  EXPECT_EQ(epsilon_of(2), Rational(1, 4));
  EXPECT_EQ(epsilon_of(3), Rational(1, 16));
  EXPECT_THROW(epsilon_of(0), InputError);
}

TEST(UudpMinApprox, DegenerateInputs) {
  const Instance empty(2, {}, {}, Model::UudpMin);
  EXPECT_EQ(uudp_min_approx(empty).solution.revenue, 0);
  const Instance no_consumers(2, {Point{1, 2}, Point{2, 1}}, {}, Model::UudpMin);
  EXPECT_EQ(uudp_min_approx(no_consumers).solution.revenue, 0);
  EXPECT_THROW(uudp_min_approx(no_consumers.with_model(Model::Smp)), PreconditionError);
}

TEST(UudpMinApprox, ChainsAreExact) {
  Rng rng(31);
  for (int t = 0; t < 100; ++t) {
    const Instance inst = chain_instance(rng, 1 + static_cast<int>(rng.below(5)), 6, 2 + t % 2);
    const ApproxResult r = uudp_min_approx(inst, ApproxConfig{.seed = static_cast<std::uint64_t>(t)});
    EXPECT_EQ(r.solution.revenue, brute_force_uudp(inst).revenue);
    expect_sound_trace(inst, r);
  }
}

TEST(UudpMinApprox, SingleConsumerIsExact) {
  Rng rng(32);
  for (int t = 0; t < 100; ++t) {
    const Instance inst = oracle::random_instance(rng, 6, 1, 2 + t % 2, {1, 2, 3}, 5);
    const ApproxResult r = uudp_min_approx(inst, ApproxConfig{.seed = static_cast<std::uint64_t>(t)});
    EXPECT_EQ(r.solution.revenue, brute_force_uudp(inst).revenue);
  }
}

TEST(UudpMinApprox, NeverBeatsOracleAndTraceIsSound) {
  Rng rng(33);
  for (int t = 0; t < 100; ++t) {
    const Instance inst = oracle::random_instance(rng, 6, 8, 2 + t % 2, {1, 2, 3}, 5);
    const ApproxResult r = uudp_min_approx(inst, ApproxConfig{.seed = static_cast<std::uint64_t>(t)});
    EXPECT_LE(r.solution.revenue, brute_force_uudp(inst).revenue);
    expect_sound_trace(inst, r);
  }
}

TEST(UudpMinApprox, DeterministicPerSeed) {
  Rng rng(34);
  for (int t = 0; t < 20; ++t) {
    const Instance inst = oracle::random_instance(rng, 10, 12, 3, {1, 2, 3}, 6);
    const ApproxConfig cfg{.seed = 77};
    const ApproxResult a = uudp_min_approx(inst, cfg);
    const ApproxResult b = uudp_min_approx(inst, cfg);
    EXPECT_EQ(a.solution.prices, b.solution.prices);
    EXPECT_EQ(a.solution.method, b.solution.method);
  }
}

TEST(UudpMinApprox, OneDimensionIsExact) {
  Rng rng(35);
  for (int t = 0; t < 50; ++t) {
    const Instance inst = oracle::random_instance(rng, 5, 6, 1, {1, 2, 3}, 6);
    EXPECT_EQ(uudp_min_approx(inst).solution.revenue, brute_force_uudp(inst).revenue);
  }
}

TEST(SmpApprox, Examples) {
  const Instance empty(2, {}, {}, Model::Smp);
  EXPECT_EQ(smp_approx(empty).solution.revenue, 0);
  // Singleton bundles on a chain behave like min-buying.
  const Instance singles(2, {Point{1, 1}, Point{2, 2}}, {{Point{2, 2}, 3}, {Point{2, 2}, 1}}, Model::Smp);
  EXPECT_EQ(smp_approx(singles).solution.revenue, 3);
  EXPECT_THROW(smp_approx(singles.with_model(Model::UudpMin)), PreconditionError);
}

TEST(SmpApprox, NeverBeatsLatticeOracle) {
  Rng rng(36);
  const PriceLattice lattice = PriceLattice::parse("0,1,2");
  for (int t = 0; t < 100; ++t) {
    const Instance inst = oracle::random_instance(rng, 5, 6, 2 + t % 2, {1, 2}, 4, Model::Smp);
    const ApproxResult r = smp_approx(inst, ApproxConfig{.seed = static_cast<std::uint64_t>(t)});
    EXPECT_LE(r.solution.revenue, brute_force_smp(inst, lattice).revenue);
    expect_sound_trace(inst, r);
  }
}

TEST(SmpApprox, ChainsWithSmallBudgetsReachUnitLattice) {
  // On a chain of at least two items the special-case DP sees every consumer,
  // so the result is at least the {0,1} lattice optimum.
  Rng rng(37);
  const PriceLattice unit = PriceLattice::parse("0,1");
  const PriceLattice wide = PriceLattice::parse("0,1,2");
  for (int t = 0; t < 60; ++t) {
    const Instance inst = chain_instance(rng, 2 + static_cast<int>(rng.below(4)), 5, 2, Model::Smp);
    std::vector<Consumer> small;
    for (const Consumer& c : inst.consumers()) small.push_back({c.point, c.budget > 2 ? Rational(2) : c.budget});
    const Instance capped(2, inst.items(), small, Model::Smp);
    const Rational got = smp_approx(capped).solution.revenue;
    EXPECT_GE(got, brute_force_smp(capped, unit).revenue);
    EXPECT_LE(got, brute_force_smp(capped, wide).revenue);
  }
}
