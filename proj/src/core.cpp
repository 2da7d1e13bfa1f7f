#include "geopricer/core.hpp"

#include <numeric>

#include "geopricer/errors.hpp"

namespace geopricer {

std::string to_string(Model model) { return model == Model::UudpMin ? "uudp-min" : "smp"; }

Model model_from_string(const std::string& text) {
  if (text == "uudp-min") return Model::UudpMin;
  if (text == "smp") return Model::Smp;
  throw InputError("unknown model '" + text + "' (expected uudp-min or smp)");
}

Instance::Instance(int dimension, std::vector<Point> items, std::vector<Consumer> consumers,
                   Model model)
    : dimension_(dimension), items_(std::move(items)), consumers_(std::move(consumers)), model_(model) {
  if (dimension_ <= 0) throw InputError("instance dimension must be positive");
  auto check = [&](const Point& p, const std::string& what) {
    if (p.size() != static_cast<std::size_t>(dimension_)) {
      throw InputError(what + " has " + std::to_string(p.size()) + " coordinates, expected " +
                       std::to_string(dimension_));
    }
    for (const Rational& x : p.coords) {
      if (x < 0) throw InputError(what + " has a negative coordinate");
    }
  };
  for (std::size_t i = 0; i < items_.size(); ++i) check(items_[i], "item " + std::to_string(i));
  for (std::size_t c = 0; c < consumers_.size(); ++c) {
    check(consumers_[c].point, "consumer " + std::to_string(c));
    if (consumers_[c].budget < 0) throw InputError("consumer " + std::to_string(c) + " has a negative budget");
  }
}

Price Price::of(Rational value) {
  if (value < 0) throw InputError("negative price " + value.str());
  Price p;
  p.value_ = value;
  return p;
}

bool dominates(const Point& a, const Point& b) {
  if (a.size() != b.size()) {
    throw InputError("dimension mismatch: " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
  }
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j] < b[j]) return false;
  }
  return true;
}

std::vector<int> consideration_set(const Instance& inst, int consumer) {
  if (consumer < 0 || consumer >= inst.num_consumers()) {
    throw InputError("consumer index " + std::to_string(consumer) + " out of range");
  }
  const Point& c = inst.consumer(consumer).point;
  std::vector<int> out;
  for (int i = 0; i < inst.num_items(); ++i) {
    if (dominates(inst.item(i), c)) out.push_back(i);
  }
  return out;
}

std::vector<std::vector<int>> consideration_sets(const Instance& inst) {
  std::vector<std::vector<int>> sets;
  sets.reserve(inst.consumers().size());
  for (int c = 0; c < inst.num_consumers(); ++c) sets.push_back(consideration_set(inst, c));
  return sets;
}

RevenueReport evaluate_revenue(const Instance& inst, const PriceAssignment& prices) {
  if (prices.size() != static_cast<std::size_t>(inst.num_items())) {
    throw InputError("price assignment covers " + std::to_string(prices.size()) + " items, instance has " +
                     std::to_string(inst.num_items()));
  }
  RevenueReport report;
  report.per_consumer.resize(inst.consumers().size());
  for (int c = 0; c < inst.num_consumers(); ++c) {
    const auto set = consideration_set(inst, c);
    const Rational& budget = inst.consumer(c).budget;
    Purchase& purchase = report.per_consumer[static_cast<std::size_t>(c)];
    if (inst.model() == Model::UudpMin) {
      int best = -1;
      for (int i : set) {
        const Price& p = prices[static_cast<std::size_t>(i)];
        if (p.is_excluded()) continue;
        if (best < 0 || p.value() < prices[static_cast<std::size_t>(best)].value()) best = i;
      }
      if (best >= 0 && prices[static_cast<std::size_t>(best)].value() <= budget) {
        purchase.paid = prices[static_cast<std::size_t>(best)].value();
        purchase.items = {best};
      }
    } else {
      if (set.empty()) continue;
      Rational sum = 0;
      bool buyable = true;
      for (int i : set) {
        const Price& p = prices[static_cast<std::size_t>(i)];
        if (p.is_excluded()) {
          buyable = false;
          break;
        }
        sum += p.value();
      }
      if (buyable && sum <= budget) {
        purchase.paid = sum;
        purchase.items = set;
      }
    }
    report.total += purchase.paid;
  }
  return report;
}

namespace {

void check_subset(std::span<const int> indices, int bound, const char* what) {
  std::vector<char> seen(static_cast<std::size_t>(bound), 0);
  for (int i : indices) {
    if (i < 0 || i >= bound) throw InputError(std::string(what) + " index " + std::to_string(i) + " out of range");
    if (seen[static_cast<std::size_t>(i)]) throw InputError(std::string("duplicate ") + what + " index " + std::to_string(i));
    seen[static_cast<std::size_t>(i)] = 1;
  }
}

}  // namespace

SubInstance restrict_instance(const Instance& inst, std::span<const int> consumers, std::span<const int> items) {
  check_subset(consumers, inst.num_consumers(), "consumer");
  check_subset(items, inst.num_items(), "item");
  std::vector<Point> sub_items;
  sub_items.reserve(items.size());
  for (int i : items) sub_items.push_back(inst.item(i));
  std::vector<Consumer> sub_consumers;
  sub_consumers.reserve(consumers.size());
  for (int c : consumers) sub_consumers.push_back(inst.consumer(c));
  return SubInstance{Instance(inst.dimension(), std::move(sub_items), std::move(sub_consumers), inst.model()),
                     std::vector<int>(consumers.begin(), consumers.end()),
                     std::vector<int>(items.begin(), items.end())};
}

PriceAssignment extend_prices(const PriceAssignment& sub, std::span<const int> item_map, int parent_num_items,
                              Price fill) {
  if (sub.size() != item_map.size()) throw InputError("sub-assignment and item map differ in length");
  PriceAssignment out = PriceAssignment::uniform(parent_num_items, fill);
  for (std::size_t k = 0; k < item_map.size(); ++k) {
    const int i = item_map[k];
    if (i < 0 || i >= parent_num_items) throw InputError("item map entry out of range");
    out.prices[static_cast<std::size_t>(i)] = sub[k];
  }
  return out;
}

Price neutral_fill(Model model) { return model == Model::UudpMin ? Price::excluded() : Price::of(0); }

std::vector<int> all_indices(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  return v;
}

}  // namespace geopricer
