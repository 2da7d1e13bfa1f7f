#include "geopricer/exact_pow.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include "geopricer/errors.hpp"

namespace geopricer {
namespace {

using boost::multiprecision::cpp_int;

cpp_int ipow(std::int64_t base, std::int64_t exponent) {
  return boost::multiprecision::pow(cpp_int(base), static_cast<unsigned>(exponent));
}

void check_args(std::int64_t n, const Rational& e) {
  if (n < 0) throw InputError("fractional power of a negative base");
  if (e < 0) throw InputError("negative exponent in exact power comparison");
  if (e.den() > 4096 || e.num() > 1 << 20) throw SizeError("exponent " + e.str() + " too fine for exact comparison");
}

}  // namespace

bool at_most_power(std::int64_t a, std::int64_t n, const Rational& e) {
  check_args(n, e);
  if (a <= 0) return true;
  // a <= n^(p/q)  <=>  a^q <= n^p
  return ipow(a, e.den()) <= ipow(n, e.num());
}

std::int64_t floor_power(std::int64_t n, const Rational& e) {
  check_args(n, e);
  if (e == 0) return 1;
  if (n <= 1) return n;
  std::int64_t lo = 0;  // lo <= n^e
  std::int64_t hi = 1;
  while (at_most_power(hi, n, e)) {
    lo = hi;
    if (hi > (std::int64_t{1} << 61)) throw ArithmeticError("power exceeds 64 bits");
    hi *= 2;
  }
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (at_most_power(mid, n, e)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

std::int64_t ceil_power(std::int64_t n, const Rational& e) {
  const std::int64_t f = floor_power(n, e);
  // f == n^e exactly iff f^q == n^p.
  if (ipow(f, e.den()) == ipow(n, e.num())) return f;
  return f + 1;
}

}  // namespace geopricer
