#ifndef GEOPRICER_CORE_HPP
#define GEOPRICER_CORE_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "geopricer/rational.hpp"

namespace geopricer {

/// Decision model: which items a consumer buys once prices are fixed.
enum class Model {
  UudpMin,  ///< unit demand, buys the cheapest considered item if affordable
  Smp,      ///< single minded, buys the whole consideration set if affordable
};

std::string to_string(Model model);
Model model_from_string(const std::string& text);

/// A point in the non-negative orthant; items and consumers alike.
struct Point {
  std::vector<Rational> coords;

  Point() = default;
  explicit Point(std::vector<Rational> c) : coords(std::move(c)) {}
  Point(std::initializer_list<Rational> c) : coords(c) {}

  std::size_t size() const { return coords.size(); }
  const Rational& operator[](std::size_t i) const { return coords[i]; }
  Rational& operator[](std::size_t i) { return coords[i]; }
  friend bool operator==(const Point&, const Point&) = default;
};

struct Consumer {
  Point point;
  Rational budget;
  friend bool operator==(const Consumer&, const Consumer&) = default;
};

/**
 * A pricing instance: items and consumers in R^d_{>=0} plus the decision
 * model. Indices into items() and consumers() are the stable identifiers
 * used by every other module. Validated on construction and immutable.
 */
class Instance {
 public:
  Instance(int dimension, std::vector<Point> items, std::vector<Consumer> consumers, Model model);

  int dimension() const { return dimension_; }
  Model model() const { return model_; }
  const std::vector<Point>& items() const { return items_; }
  const std::vector<Consumer>& consumers() const { return consumers_; }
  int num_items() const { return static_cast<int>(items_.size()); }
  int num_consumers() const { return static_cast<int>(consumers_.size()); }
  const Point& item(int i) const { return items_.at(static_cast<std::size_t>(i)); }
  const Consumer& consumer(int c) const { return consumers_.at(static_cast<std::size_t>(c)); }

  /// Same points and budgets under a different decision model.
  Instance with_model(Model model) const { return Instance(dimension_, items_, consumers_, model); }

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  int dimension_;
  std::vector<Point> items_;
  std::vector<Consumer> consumers_;
  Model model_;
};

/// A finite non-negative price or the "excluded" marker (never sold).
class Price {
 public:
  static Price excluded() { return Price(); }
  static Price of(Rational value);

  bool is_excluded() const { return !value_.has_value(); }
  const Rational& value() const { return value_.value(); }
  std::string str() const { return is_excluded() ? "excluded" : value_->str(); }

  friend bool operator==(const Price&, const Price&) = default;

 private:
  Price() = default;
  std::optional<Rational> value_;
};

struct PriceAssignment {
  std::vector<Price> prices;

  PriceAssignment() = default;
  explicit PriceAssignment(std::vector<Price> p) : prices(std::move(p)) {}
  static PriceAssignment uniform(int num_items, Price price) {
    return PriceAssignment(std::vector<Price>(static_cast<std::size_t>(num_items), price));
  }
  std::size_t size() const { return prices.size(); }
  const Price& operator[](std::size_t i) const { return prices[i]; }
  friend bool operator==(const PriceAssignment&, const PriceAssignment&) = default;
};

struct Purchase {
  Rational paid;
  std::vector<int> items;  ///< empty when nothing was bought
};

struct RevenueReport {
  Rational total;
  std::vector<Purchase> per_consumer;
};

/// True iff a[j] >= b[j] for every coordinate j.
bool dominates(const Point& a, const Point& b);

/// Indices of the items whose points dominate the consumer's point.
std::vector<int> consideration_set(const Instance& inst, int consumer);

/// consideration_set for every consumer, in consumer order.
std::vector<std::vector<int>> consideration_sets(const Instance& inst);

/**
 * Exact revenue of a price assignment.
 *
 * UudpMin: the cheapest non-excluded considered item is bought if its price
 * is within budget; ties go to the lowest item index. Smp: the whole
 * consideration set is bought if no member is excluded and the sum is within
 * budget. An empty consideration set buys nothing.
 */
RevenueReport evaluate_revenue(const Instance& inst, const PriceAssignment& prices);

/// A sub-instance together with the maps from its indices back to the parent's.
struct SubInstance {
  Instance instance;
  std::vector<int> consumer_map;
  std::vector<int> item_map;
};

/// Keeps the given consumers and items (in the order given). Indices must be
/// valid and distinct; either list may be empty.
SubInstance restrict_instance(const Instance& inst, std::span<const int> consumers,
                              std::span<const int> items);

/// Lifts prices of a sub-instance to its parent: kept items get their
/// sub-price, every other item gets `fill` (excluded by default).
PriceAssignment extend_prices(const PriceAssignment& sub, std::span<const int> item_map,
                              int parent_num_items, Price fill = Price::excluded());

inline PriceAssignment extend_prices(const PriceAssignment& sub, const SubInstance& maps, const Instance& full,
                                     Price fill = Price::excluded()) {
  return extend_prices(sub, maps.item_map, full.num_items(), fill);
}

/// The fill that makes extension revenue-monotone under the given model:
/// excluded for UudpMin, zero for Smp (an excluded member would make every
/// bundle containing it unaffordable).
Price neutral_fill(Model model);

std::vector<int> all_indices(int n);

}  // namespace geopricer

#endif  // GEOPRICER_CORE_HPP
