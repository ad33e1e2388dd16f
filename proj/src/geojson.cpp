// SPDX-License-Identifier: Apache-2.0
#include <string>

#include <json.hpp>

#include "geocentre/io.hpp"
#include "polygon_builder.hpp"

namespace geocentre {

namespace {

using nlohmann::json;
using detail::DegreePart;
using detail::DegreeRing;

DegreeRing read_ring(const json& coords) {
  if (!coords.is_array()) throw InputError("GeoJSON ring must be an array of positions");
  DegreeRing ring;
  ring.reserve(coords.size());
  for (const auto& pos : coords) {
    if (!pos.is_array() || pos.size() < 2 || !pos[0].is_number() || !pos[1].is_number()) {
      throw InputError("GeoJSON position must be an array [lon, lat, ...] of numbers");
    }
    ring.push_back({pos[0].get<double>(), pos[1].get<double>()});
  }
  return ring;
}

DegreePart read_polygon(const json& coords) {
  if (!coords.is_array() || coords.empty()) {
    throw InputError("GeoJSON Polygon coordinates must be a non-empty array of rings");
  }
  DegreePart part;
  for (const auto& ring : coords) part.push_back(read_ring(ring));
  return part;
}

const json& member(const json& obj, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end()) {
    throw InputError(std::string("GeoJSON object is missing \"") + key + "\"");
  }
  return *it;
}

void collect(const json& obj, std::vector<DegreePart>& parts) {
  if (!obj.is_object()) throw InputError("GeoJSON geometry must be an object");
  const json& type_field = member(obj, "type");
  if (!type_field.is_string()) throw InputError("GeoJSON \"type\" must be a string");
  const auto type = type_field.get<std::string>();

  if (type == "Polygon") {
    parts.push_back(read_polygon(member(obj, "coordinates")));
  } else if (type == "MultiPolygon") {
    const json& coords = member(obj, "coordinates");
    if (!coords.is_array()) throw InputError("GeoJSON MultiPolygon coordinates must be an array");
    for (const auto& poly : coords) parts.push_back(read_polygon(poly));
  } else if (type == "Feature") {
    const json& geometry = member(obj, "geometry");
    if (geometry.is_null()) throw InputError("GeoJSON Feature has a null geometry");
    collect(geometry, parts);
  } else if (type == "FeatureCollection") {
    for (const auto& f : member(obj, "features")) collect(f, parts);
  } else if (type == "GeometryCollection") {
    for (const auto& g : member(obj, "geometries")) collect(g, parts);
  } else {
    throw InputError("unsupported GeoJSON geometry type \"" + type +
                     "\"; expected Polygon or MultiPolygon");
  }
}

}  // namespace

EllipsoidalPolygon parse_geojson(std::string_view bytes) {
  json doc;
  try {
    doc = json::parse(bytes.begin(), bytes.end());
  } catch (const json::parse_error& e) {
    const std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
    detail::throw_parse_error(bytes, offset, "malformed GeoJSON");
  }
  std::vector<DegreePart> parts;
  collect(doc, parts);
  return detail::build_polygon(parts);
}

}  // namespace geocentre
