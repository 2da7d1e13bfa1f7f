#include "geopricer/exact.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "geopricer/errors.hpp"

namespace geopricer {

PriceLattice::PriceLattice(std::vector<Rational> values) : values_(std::move(values)) {
  if (values_.empty() || values_.front() != 0) throw InputError("price lattice must start at 0");
  for (std::size_t i = 1; i < values_.size(); ++i) {
    if (!(values_[i - 1] < values_[i])) throw InputError("price lattice must be strictly increasing");
  }
}

PriceLattice PriceLattice::parse(const std::string& csv) {
  std::vector<Rational> values;
  std::stringstream ss(csv);
  std::string token;
  while (std::getline(ss, token, ',')) values.push_back(Rational::parse(token));
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return PriceLattice(std::move(values));
}

std::vector<Rational> budget_candidates(const Instance& inst) {
  std::vector<Rational> out{Rational(0)};
  for (const Consumer& c : inst.consumers()) out.push_back(c.budget);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PriceLattice default_smp_lattice(const Instance& inst) {
  std::vector<Rational> budgets = budget_candidates(inst);
  std::vector<Rational> out = budgets;
  for (const Rational& a : budgets) {
    for (const Rational& b : budgets) {
      if (b < a) out.push_back(a - b);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return PriceLattice(std::move(out));
}

namespace {

void require_one_dim_uudp(const Instance& inst) {
  if (inst.dimension() != 1) throw PreconditionError("expected a one-dimensional instance");
  if (inst.model() != Model::UudpMin) throw PreconditionError("expected a uudp-min instance");
}

/// Item indices sorted by non-increasing coordinate; rejects duplicates.
std::vector<int> sorted_distinct_items(const Instance& inst) {
  std::vector<int> order = all_indices(inst.num_items());
  std::sort(order.begin(), order.end(), [&](int a, int b) { return inst.item(b)[0] < inst.item(a)[0]; });
  for (std::size_t k = 1; k < order.size(); ++k) {
    if (inst.item(order[k])[0] == inst.item(order[k - 1])[0]) {
      throw PreconditionError("items " + std::to_string(order[k - 1]) + " and " + std::to_string(order[k]) +
                              " share a coordinate; perturb the instance first");
    }
  }
  return order;
}

int level_in(const Instance& inst, int consumer) {
  int level = 0;
  for (const Point& item : inst.items()) {
    if (item[0] >= inst.consumer(consumer).point[0]) ++level;
  }
  return level;
}

std::uint64_t checked_power(std::uint64_t base, std::size_t exponent, std::uint64_t cap) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (base != 0 && total > cap / base) {
      throw SizeError("enumeration of " + std::to_string(base) + "^" + std::to_string(exponent) +
                      " assignments exceeds the cap of " + std::to_string(cap));
    }
    total *= base;
  }
  if (total > cap) throw SizeError("enumeration exceeds the cap of " + std::to_string(cap));
  return total;
}

}  // namespace

int level_of(const Instance& inst, int consumer) {
  require_one_dim_uudp(inst);
  if (consumer < 0 || consumer >= inst.num_consumers()) throw InputError("consumer index out of range");
  sorted_distinct_items(inst);
  return level_in(inst, consumer);
}

Solution solve_one_dim_uudp(const Instance& inst) {
  require_one_dim_uudp(inst);
  const std::vector<int> order = sorted_distinct_items(inst);
  const std::size_t n = order.size();
  const std::vector<Rational> prices = budget_candidates(inst);  // ascending, prices[0] == 0
  const std::size_t k = prices.size();

  // Budgets of the consumers at each level 1..n, sorted descending.
  std::vector<std::vector<Rational>> at_level(n + 1);
  for (int c = 0; c < inst.num_consumers(); ++c) {
    at_level[static_cast<std::size_t>(level_in(inst, c))].push_back(inst.consumer(c).budget);
  }
  for (auto& budgets : at_level) std::sort(budgets.begin(), budgets.end(), std::greater<>());

  // table[j][p]: best revenue from levels 1..j with item j priced prices[p].
  // from[j][p]: the price index of item j-1 realizing it.
  std::vector<std::vector<Rational>> table(n + 1, std::vector<Rational>(k));
  std::vector<std::vector<std::size_t>> from(n + 1, std::vector<std::size_t>(k, 0));
  for (std::size_t j = 1; j <= n; ++j) {
    const auto& budgets = at_level[j];
    std::size_t affordable = 0;  // consumers with budget >= current price
    Rational best_prev;
    std::size_t best_prev_idx = k - 1;
    bool have_prev = false;
    // Descending price order: the running max covers every P' >= P, and the
    // number of consumers able to pay only grows.
    for (std::size_t p = k; p-- > 0;) {
      if (j == 1) {
        best_prev = 0;
        best_prev_idx = p;
      } else if (!have_prev || table[j - 1][p] > best_prev) {
        best_prev = table[j - 1][p];
        best_prev_idx = p;
      }
      have_prev = true;
      while (affordable < budgets.size() && budgets[affordable] >= prices[p]) ++affordable;
      table[j][p] = best_prev + prices[p] * Rational(static_cast<std::int64_t>(affordable));
      from[j][p] = best_prev_idx;
    }
  }

  std::vector<Price> assignment(static_cast<std::size_t>(inst.num_items()), Price::of(0));
  Rational best = 0;
  if (n > 0) {
    std::size_t p = k - 1;
    for (std::size_t q = k; q-- > 0;) {
      if (table[n][q] > table[n][p]) p = q;
    }
    best = table[n][p];
    for (std::size_t j = n; j >= 1; --j) {
      assignment[static_cast<std::size_t>(order[j - 1])] = Price::of(prices[p]);
      p = from[j][p];
    }
  }

  Solution sol{PriceAssignment(std::move(assignment)), best, "one-dim-dp"};
  check_solution(inst, sol);
  return sol;
}

Solution brute_force_over(const Instance& inst, std::span<const Rational> candidates, std::uint64_t cap) {
  if (candidates.empty()) throw InputError("empty candidate price list");
  // The min-buying shortcut below compares digits, so digit order has to
  // agree with price order.
  std::vector<Rational> sorted(candidates.begin(), candidates.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  const std::size_t n = static_cast<std::size_t>(inst.num_items());
  checked_power(sorted.size(), n, cap);

  const auto sets = consideration_sets(inst);
  std::vector<std::size_t> digits(n, 0);
  std::vector<std::size_t> best_digits(n, 0);
  Rational best_revenue = -1;

  auto revenue_of = [&]() {
    Rational total = 0;
    for (std::size_t c = 0; c < sets.size(); ++c) {
      const auto& set = sets[c];
      if (set.empty()) continue;
      const Rational& budget = inst.consumer(static_cast<int>(c)).budget;
      if (inst.model() == Model::UudpMin) {
        std::size_t lowest = digits[static_cast<std::size_t>(set.front())];
        for (int i : set) lowest = std::min(lowest, digits[static_cast<std::size_t>(i)]);
        if (sorted[lowest] <= budget) total += sorted[lowest];
      } else {
        Rational sum = 0;
        for (int i : set) sum += sorted[digits[static_cast<std::size_t>(i)]];
        if (sum <= budget) total += sum;
      }
    }
    return total;
  };

  // Odometer with item 0 most significant: the first maximum found is the
  // lexicographically smallest one.
  for (;;) {
    const Rational r = revenue_of();
    if (r > best_revenue) {
      best_revenue = r;
      best_digits = digits;
    }
    std::size_t pos = n;
    while (pos > 0 && ++digits[pos - 1] == sorted.size()) {
      digits[pos - 1] = 0;
      --pos;
    }
    if (pos == 0) break;
  }

  std::vector<Price> assignment;
  assignment.reserve(n);
  for (std::size_t d : best_digits) assignment.push_back(Price::of(sorted[d]));
  Solution sol{PriceAssignment(std::move(assignment)), best_revenue, "brute-force"};
  check_solution(inst, sol);
  return sol;
}

Solution brute_force_uudp(const Instance& inst, std::uint64_t cap) {
  if (inst.model() != Model::UudpMin) throw PreconditionError("brute_force_uudp expects a uudp-min instance");
  const auto candidates = budget_candidates(inst);
  Solution sol = brute_force_over(inst, candidates, cap);
  sol.method = "brute-force-uudp";
  return sol;
}

Solution brute_force_smp(const Instance& inst, const PriceLattice& lattice, std::uint64_t cap) {
  if (inst.model() != Model::Smp) throw PreconditionError("brute_force_smp expects an smp instance");
  Solution sol = brute_force_over(inst, lattice.values(), cap);
  sol.method = "brute-force-smp-lattice";
  return sol;
}

void check_solution(const Instance& inst, const Solution& sol) {
  const Rational evaluated = evaluate_revenue(inst, sol.prices).total;
  if (evaluated != sol.revenue) {
    throw std::logic_error(sol.method + ": reported revenue " + sol.revenue.str() + " but prices earn " +
                           evaluated.str());
  }
}

}  // namespace geopricer
