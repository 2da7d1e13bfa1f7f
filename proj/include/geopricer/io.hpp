#ifndef GEOPRICER_IO_HPP
#define GEOPRICER_IO_HPP

#include <string>

#include <json.hpp>

#include "geopricer/core.hpp"

namespace geopricer {

using Json = nlohmann::json;

/// Integers are written as JSON numbers, everything else as "p/q".
Json rational_to_json(const Rational& r);
/// Accepts a JSON integer or a string "p", "p/q".
Rational rational_from_json(const Json& j);

Json instance_to_json(const Instance& inst);
Instance instance_from_json(const Json& j);

/// {"prices": [rat | "excluded", ...]}
Json prices_to_json(const PriceAssignment& prices);
PriceAssignment prices_from_json(const Json& j);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace geopricer

#endif  // GEOPRICER_IO_HPP
