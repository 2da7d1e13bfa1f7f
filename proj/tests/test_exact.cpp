#include <gtest/gtest.h>

#include "geopricer/errors.hpp"
#include "geopricer/exact.hpp"
#include "support.hpp"

using namespace geopricer;

namespace {

Instance line(std::vector<std::int64_t> items, std::vector<std::pair<std::int64_t, std::int64_t>> consumers) {
  std::vector<Point> pts;
  for (auto x : items) pts.push_back(Point{Rational(x)});
  std::vector<Consumer> cs;
  for (auto [x, b] : consumers) cs.push_back({Point{Rational(x)}, Rational(b)});
  return Instance(1, std::move(pts), std::move(cs), Model::UudpMin);
}

}  // namespace

TEST(LevelOf, Examples) {
  const Instance inst = line({10, 20}, {{15, 1}, {5, 1}, {25, 1}});
  EXPECT_EQ(level_of(inst, 0), 1);
  EXPECT_EQ(level_of(inst, 1), 2);
  EXPECT_EQ(level_of(inst, 2), 0);
  EXPECT_THROW(level_of(line({3, 3}, {{1, 1}}), 0), PreconditionError);
}

TEST(OneDim, Examples) {
  EXPECT_EQ(solve_one_dim_uudp(line({10, 20}, {{5, 1}, {5, 2}, {15, 2}})).revenue, 4);
  EXPECT_EQ(solve_one_dim_uudp(line({10}, {{1, 1}, {1, 1}, {1, 3}})).revenue, 3);
  const Solution empty = solve_one_dim_uudp(line({1, 2}, {}));
  EXPECT_EQ(empty.revenue, 0);
  EXPECT_EQ(empty.prices[0], Price::of(0));
  EXPECT_THROW(solve_one_dim_uudp(line({2, 2}, {{1, 1}})), PreconditionError);
}

TEST(OneDim, MatchesNaiveOptimum) {
  Rng rng(2024);
  for (int t = 0; t < 300; ++t) {
    const int n = 1 + static_cast<int>(rng.below(5));
    std::vector<std::int64_t> xs;
    for (const int p : rng.permutation(8)) {
      if (static_cast<int>(xs.size()) < n) xs.push_back(p + 1);
    }
    std::vector<std::pair<std::int64_t, std::int64_t>> cs;
    for (int c = 0, m = static_cast<int>(rng.below(7)); c < m; ++c) {
      cs.emplace_back(static_cast<std::int64_t>(rng.below(10)), static_cast<std::int64_t>(rng.below(3) + 1));
    }
    const Instance inst = line(xs, cs);
    const Solution sol = solve_one_dim_uudp(inst);
    EXPECT_EQ(sol.revenue, oracle::naive_optimum(inst, oracle::budgets_and_zero(inst)));
    EXPECT_EQ(evaluate_revenue(inst, sol.prices).total, sol.revenue);
  }
}

TEST(BruteForce, Examples) {
  const Instance one(2, {Point{2, 2}}, {{Point{1, 1}, 5}}, Model::UudpMin);
  EXPECT_EQ(brute_force_uudp(one).revenue, 5);
  const Instance none(2, {Point{0, 0}}, {{Point{1, 1}, 5}}, Model::UudpMin);
  EXPECT_EQ(brute_force_uudp(none).revenue, 0);

  const PriceLattice lattice = PriceLattice::parse("0,1,2");
  const Instance singles(1, {Point{1}, Point{3}}, {{Point{1}, 2}, {Point{2}, 2}}, Model::Smp);
  // Consumer 0 wants both items, consumer 1 only the second.
  EXPECT_EQ(brute_force_smp(singles, lattice).revenue, 4);
  const Instance bundle(1, {Point{1}, Point{1}}, {{Point{0}, 3}}, Model::Smp);
  EXPECT_EQ(brute_force_smp(bundle, lattice).revenue, 3);
}

TEST(BruteForce, TieBreakIsLexicographic) {
  const Instance inst(1, {Point{1}, Point{1}}, {{Point{0}, 1}}, Model::UudpMin);
  const Solution sol = brute_force_uudp(inst);
  // Any price 0 makes the consumer pay 0, so (1, 1) is the only optimum.
  EXPECT_EQ(sol.prices[0], Price::of(1));
  EXPECT_EQ(sol.prices[1], Price::of(1));
}

TEST(BruteForce, FirstOptimumWins) {
  // Items 0 and 1 are interchangeable; (0, 2) precedes (2, 0).
  const Instance inst(1, {Point{1}, Point{1}}, {{Point{0}, 2}}, Model::Smp);
  const Solution sol = brute_force_smp(inst, PriceLattice::parse("0,2"));
  EXPECT_EQ(sol.prices[0], Price::of(0));
  EXPECT_EQ(sol.prices[1], Price::of(2));
}

TEST(BruteForce, CapAndModelChecks) {
  Rng rng(1);
  const Instance inst = oracle::random_instance(rng, 12, 8, 2, {1, 2, 3, 4, 5, 6, 7}, 9);
  EXPECT_THROW(brute_force_uudp(inst), SizeError);
  EXPECT_THROW(brute_force_smp(inst, PriceLattice::parse("0,1")), PreconditionError);
  EXPECT_THROW(PriceLattice({Rational(1)}), InputError);
}

TEST(BruteForce, MatchesNaiveOptimum) {
  Rng rng(77);
  for (int t = 0; t < 100; ++t) {
    const Model model = t % 2 ? Model::Smp : Model::UudpMin;
    const Instance inst = oracle::random_instance(rng, 3, 4, 2, {1, 2, 3}, 3, model);
    const std::vector<Rational> cands = model == Model::Smp ? default_smp_lattice(inst).values()
                                                            : oracle::budgets_and_zero(inst);
    const Solution sol = brute_force_over(inst, cands);
    EXPECT_EQ(sol.revenue, oracle::naive_optimum(inst, cands));
  }
}

TEST(DefaultLattice, ContainsDifferences) {
  const Instance inst(1, {Point{1}}, {{Point{0}, 5}, {Point{0}, 2}}, Model::Smp);
  EXPECT_EQ(default_smp_lattice(inst).values(), (std::vector<Rational>{0, 2, 3, 5}));
}

TEST(CheckSolution, DetectsMismatch) {
  const Instance inst(1, {Point{1}}, {{Point{0}, 5}}, Model::UudpMin);
  Solution bad{PriceAssignment({Price::of(5)}), Rational(4), "test"};
  EXPECT_THROW(check_solution(inst, bad), std::logic_error);
}
