#ifndef GEOPRICER_RATIONAL_HPP
#define GEOPRICER_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace geopricer {

/**
 * Exact rational number with 64-bit numerator and denominator.
 *
 * Always kept in lowest terms with a positive denominator. Intermediate
 * products are formed in 128 bits; a result that does not fit back into
 * 64 bits raises ArithmeticError instead of wrapping.
 */
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT(implicit)
  Rational(std::int64_t num, std::int64_t den);

  /// Parses "7", "-3", "5/2" or " 10 / 4 ". Throws InputError.
  static Rational parse(std::string_view text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  /// "p" for integers, "p/q" otherwise.
  std::string str() const;
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  /// Largest integer not above the value.
  std::int64_t floor() const;
  /// Smallest integer not below the value.
  std::int64_t ceil() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  static Rational from_wide(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// base^exponent for a non-negative exponent.
Rational pow(Rational base, unsigned exponent);

}  // namespace geopricer

template <>
struct std::hash<geopricer::Rational> {
  std::size_t operator()(const geopricer::Rational& r) const noexcept {
    return std::hash<std::int64_t>{}(r.num()) * 1000003u ^ std::hash<std::int64_t>{}(r.den());
  }
};

#endif  // GEOPRICER_RATIONAL_HPP
