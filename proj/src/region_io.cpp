// SPDX-License-Identifier: Apache-2.0
#include "spout/region_io.hpp"

#include <fstream>

#include "spout/error.hpp"

namespace spout {

using nlohmann::json;

namespace {

double number(const json& j, const char* key, double fallback, bool required) {
  if (!j.contains(key)) {
    if (required) throw DomainError(std::string("region JSON is missing \"") + key + "\"");
    return fallback;
  }
  if (!j.at(key).is_number()) {
    throw DomainError(std::string("region JSON field \"") + key + "\" must be a number");
  }
  return j.at(key).get<double>();
}

}  // namespace

Region region_from_json(const json& j) {
  if (!j.is_object() || !j.contains("type") || !j.at("type").is_string()) {
    throw DomainError("region JSON must be an object with a string \"type\"");
  }
  const std::string type = j.at("type").get<std::string>();
  if (type == "annulus") {
    return Annulus(number(j, "r_in", 0.0, false), number(j, "r_out", 0.0, true));
  }
  if (type == "polygon") {
    if (!j.contains("L") || !j.at("L").is_number_integer()) {
      throw DomainError("polygon region needs an integer \"L\"");
    }
    return RegularPolygon(j.at("L").get<int>(), number(j, "r_out", 0.0, true),
                          number(j, "r_in", 0.0, false));
  }
  if (type == "multipolygon") {
    if (!j.contains("rings") || !j.at("rings").is_array()) {
      throw DomainError("multipolygon region needs a \"rings\" array");
    }
    std::vector<Ring> rings;
    for (const json& jr : j.at("rings")) {
      if (!jr.is_array()) throw DomainError("each ring must be an array of [x, y] pairs");
      Ring ring;
      for (const json& jp : jr) {
        if (!jp.is_array() || jp.size() != 2 || !jp[0].is_number() || !jp[1].is_number()) {
          throw DomainError("ring vertex must be a [x, y] pair of numbers");
        }
        ring.push_back({jp[0].get<double>(), jp[1].get<double>()});
      }
      // Accept explicitly closed rings.
      if (ring.size() > 1 && ring.front().x == ring.back().x && ring.front().y == ring.back().y) {
        ring.pop_back();
      }
      rings.push_back(std::move(ring));
    }
    return MultiPolygon(std::move(rings));
  }
  throw DomainError("unknown region type \"" + type + "\"");
}

json region_to_json(const Region& region) {
  if (const auto* a = region.get_if<Annulus>()) {
    return {{"type", "annulus"}, {"r_in", a->r_in()}, {"r_out", a->r_out()}};
  }
  if (const auto* p = region.get_if<RegularPolygon>()) {
    return {{"type", "polygon"}, {"L", p->sides()}, {"r_out", p->r_out()}, {"r_in", p->r_in()}};
  }
  const auto& m = *region.get_if<MultiPolygon>();
  json rings = json::array();
  for (const Ring& ring : m.rings()) {
    json jr = json::array();
    for (const Point& v : ring) jr.push_back({v.x, v.y});
    rings.push_back(std::move(jr));
  }
  return {{"type", "multipolygon"}, {"rings", std::move(rings)}};
}

Region load_region(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open region file " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw DomainError("region file " + path.string() + " is not valid JSON: " + e.what());
  }
  return region_from_json(j);
}

void save_region(const Region& region, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write region file " + path.string());
  out << region_to_json(region).dump(2) << '\n';
}

}  // namespace spout
