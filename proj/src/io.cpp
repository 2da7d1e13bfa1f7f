#include "geopricer/io.hpp"

#include <fstream>

#include "geopricer/errors.hpp"

namespace geopricer {

Json rational_to_json(const Rational& r) {
  if (r.is_integer()) return Json(r.num());
  return Json(r.str());
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw InputError("expected an integer or a \"p/q\" string, got " + j.dump());
}

namespace {

Json point_to_json(const Point& p) {
  Json arr = Json::array();
  for (const Rational& x : p.coords) arr.push_back(rational_to_json(x));
  return arr;
}

Point point_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("point must be an array, got " + j.dump());
  Point p;
  for (const Json& x : j) p.coords.push_back(rational_from_json(x));
  return p;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return j.at(key);
}

}  // namespace

Json instance_to_json(const Instance& inst) {
  Json items = Json::array();
  for (const Point& p : inst.items()) items.push_back(point_to_json(p));
  Json consumers = Json::array();
  for (const Consumer& c : inst.consumers()) {
    consumers.push_back({{"point", point_to_json(c.point)}, {"budget", rational_to_json(c.budget)}});
  }
  return Json{{"dimension", inst.dimension()},
              {"model", to_string(inst.model())},
              {"items", std::move(items)},
              {"consumers", std::move(consumers)}};
}

Instance instance_from_json(const Json& j) {
  try {
    const int dimension = field(j, "dimension").get<int>();
    const Model model = j.contains("model") ? model_from_string(j.at("model").get<std::string>()) : Model::UudpMin;
    std::vector<Point> items;
    for (const Json& p : field(j, "items")) items.push_back(point_from_json(p));
    std::vector<Consumer> consumers;
    for (const Json& c : field(j, "consumers")) {
      consumers.push_back(Consumer{point_from_json(field(c, "point")), rational_from_json(field(c, "budget"))});
    }
    return Instance(dimension, std::move(items), std::move(consumers), model);
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed instance JSON: ") + e.what());
  }
}

Json prices_to_json(const PriceAssignment& prices) {
  Json arr = Json::array();
  for (const Price& p : prices.prices) arr.push_back(p.is_excluded() ? Json("excluded") : rational_to_json(p.value()));
  return Json{{"prices", std::move(arr)}};
}

PriceAssignment prices_from_json(const Json& j) {
  PriceAssignment out;
  for (const Json& p : field(j, "prices")) {
    if (p.is_string() && p.get<std::string>() == "excluded") {
      out.prices.push_back(Price::excluded());
    } else {
      out.prices.push_back(Price::of(rational_from_json(p)));
    }
  }
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError("'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << j.dump(2) << '\n';
}

}  // namespace geopricer
