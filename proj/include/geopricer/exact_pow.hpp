#ifndef GEOPRICER_EXACT_POW_HPP
#define GEOPRICER_EXACT_POW_HPP

#include <cstdint>

#include "geopricer/rational.hpp"

namespace geopricer {

// Integer comparisons against fractional powers n^e without floating point:
// a <= n^(p/q)  <=>  a^q <= n^p, evaluated in arbitrary precision.

/// a <= n^e for integers a, n >= 0 and rational e >= 0.
bool at_most_power(std::int64_t a, std::int64_t n, const Rational& e);

/// ceil(n^e): the smallest integer a with a >= n^e.
std::int64_t ceil_power(std::int64_t n, const Rational& e);

/// floor(n^e): the largest integer a with a <= n^e.
std::int64_t floor_power(std::int64_t n, const Rational& e);

}  // namespace geopricer

#endif  // GEOPRICER_EXACT_POW_HPP
