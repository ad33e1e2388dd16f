// SPDX-License-Identifier: Apache-2.0
#include "geocentre/report.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "geocentre/error.hpp"

namespace geocentre {

using nlohmann::json;

double surface_separation(const Ellipsoid& ell, const GeodeticCoord& p,
                          const GeodeticCoord& q) noexcept {
  return (geodetic_to_cartesian(ell, p) - geodetic_to_cartesian(ell, q)).norm();
}

std::string format_number(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return ec == std::errc() ? std::string(buf, ptr) : std::string("nan");
}

std::string format_dms(double degrees, bool is_latitude) {
  const char hemisphere = is_latitude ? (degrees < 0 ? 'S' : 'N') : (degrees < 0 ? 'W' : 'E');
  // Round once, in hundredths of an arc-second, so carries propagate.
  const long long total = std::llround(std::abs(degrees) * 360000.0);
  const long long deg = total / 360000;
  const long long min = (total / 6000) % 60;
  const long long cs = total % 6000;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%lld\xC2\xB0%02lld'%02lld.%02lld\" %c", deg, min, cs / 100,
                cs % 100, hemisphere);
  return buf;
}

double parse_dms(std::string_view text) {
  long long deg = 0;
  long long min = 0;
  double sec = 0.0;
  char hemisphere = 0;
  const std::string s(text);
  if (std::sscanf(s.c_str(), "%lld\xC2\xB0%lld'%lf\" %c", &deg, &min, &sec, &hemisphere) != 4) {
    throw InputError("malformed DMS angle '" + s + "'");
  }
  const double value = static_cast<double>(deg) + static_cast<double>(min) / 60.0 + sec / 3600.0;
  switch (hemisphere) {
    case 'N':
    case 'E':
      return value;
    case 'S':
    case 'W':
      return -value;
    default:
      throw InputError("malformed DMS hemisphere in '" + s + "'");
  }
}

namespace {

json centre_json(const GeodeticCoord& c) {
  const double lat = rad_to_deg(c.lat);
  const double lon = rad_to_deg(c.lon);
  return {{"lat_deg", lat},
          {"lon_deg", lon},
          {"lat_dms", format_dms(lat, true)},
          {"lon_dms", format_dms(lon, false)}};
}

json xyz_json(const Cartesian3& g) { return {{"x", g.x}, {"y", g.y}, {"z", g.z}}; }

json inverse_flattening_json(const Ellipsoid& ell) {
  return ell.is_sphere() ? json(nullptr) : json(ell.inverse_flattening());
}

}  // namespace

json report_to_json(const CentroidReport& r) {
  const auto& d = r.result.diagnostics;
  json out;
  out["ellipsoid"] = {{"name", r.ellipsoid_name},
                      {"a_m", r.ellipsoid.a()},
                      {"b_m", r.ellipsoid.b()},
                      {"inv_f", inverse_flattening_json(r.ellipsoid)},
                      {"e2", r.ellipsoid.e2()}};
  out["area_m2"] = r.result.area;
  out["area_km2"] = r.result.area / 1e6;
  out["centre"] = centre_json(r.result.centre);
  out["centre_of_gravity_m"] = xyz_json(r.result.g_xyz);
  out["diagnostics"] = {{"strip_count", d.strip_count},
                        {"input_vertices", d.input_vertices},
                        {"inserted_vertices", d.inserted_vertices},
                        {"rings_reoriented", d.rings_reoriented},
                        {"lambda0_deg", rad_to_deg(d.lambda0)},
                        {"lambda0_auto", d.lambda0_auto},
                        {"input_orientation_sign", d.input_orientation_sign},
                        {"sum_sign", d.sum_sign},
                        {"max_dphi_deg", rad_to_deg(r.config.max_dphi)},
                        {"max_dlambda_deg", rad_to_deg(r.config.max_dlambda)}};
  if (r.oracle) {
    const auto& o = *r.oracle;
    out["oracle"] = {{"centre", centre_json(o.oracle.centre)},
                     {"centre_of_gravity_m", xyz_json(o.oracle.g_xyz)},
                     {"area_m2", o.oracle.area},
                     {"grid_step_deg", rad_to_deg(o.grid_step)},
                     {"interior_cells", o.oracle.diagnostics.strip_count},
                     {"separation_m", o.separation_m},
                     {"area_delta_m2", o.area_delta_m2},
                     {"area_delta_rel", o.area_delta_rel}};
  }
  return out;
}

std::string render_json(const CentroidReport& report) {
  return report_to_json(report).dump(2) + "\n";
}

namespace {

void line(std::ostream& os, std::string_view key, const std::string& value) {
  os << key;
  for (std::size_t i = key.size(); i < 30; ++i) os << ' ';
  os << value << '\n';
}

void centre_lines(std::ostream& os, std::string_view prefix, const CentroidResult& res) {
  const double lat = rad_to_deg(res.centre.lat);
  const double lon = rad_to_deg(res.centre.lon);
  line(os, std::string(prefix) + "centre",
       format_dms(lat, true) + "  " + format_dms(lon, false));
  line(os, std::string(prefix) + "latitude_deg", format_number(lat));
  line(os, std::string(prefix) + "longitude_deg", format_number(lon));
  line(os, std::string(prefix) + "area_m2", format_number(res.area));
  line(os, std::string(prefix) + "area_km2", format_number(res.area / 1e6));
  line(os, std::string(prefix) + "centre_of_gravity_m",
       format_number(res.g_xyz.x) + " " + format_number(res.g_xyz.y) + " " +
           format_number(res.g_xyz.z));
}

}  // namespace

std::string render_text(const CentroidReport& r) {
  std::ostringstream os;
  const auto& ell = r.ellipsoid;
  line(os, "ellipsoid",
       r.ellipsoid_name + " (a = " + format_number(ell.a()) + " m, 1/f = " +
           (ell.is_sphere() ? std::string("inf") : format_number(ell.inverse_flattening())) +
           ")");
  centre_lines(os, "", r.result);

  const auto& d = r.result.diagnostics;
  line(os, "lambda0_deg",
       format_number(rad_to_deg(d.lambda0)) + (d.lambda0_auto ? " (auto)" : ""));
  line(os, "strip_count", std::to_string(d.strip_count));
  line(os, "input_vertices", std::to_string(d.input_vertices));
  line(os, "inserted_vertices", std::to_string(d.inserted_vertices));
  line(os, "rings_reoriented", std::to_string(d.rings_reoriented));
  line(os, "input_orientation_sign", std::to_string(d.input_orientation_sign));
  line(os, "sum_sign", std::to_string(d.sum_sign));
  line(os, "max_dphi_deg", format_number(rad_to_deg(r.config.max_dphi)));
  line(os, "max_dlambda_deg", format_number(rad_to_deg(r.config.max_dlambda)));

  if (r.oracle) {
    const auto& o = *r.oracle;
    os << "oracle comparison\n";
    centre_lines(os, "  oracle_", o.oracle);
    line(os, "  grid_step_deg", format_number(rad_to_deg(o.grid_step)));
    line(os, "  interior_cells", std::to_string(o.oracle.diagnostics.strip_count));
    line(os, "  separation_m", format_number(o.separation_m));
    line(os, "  area_delta_m2", format_number(o.area_delta_m2));
    line(os, "  area_delta_rel", format_number(o.area_delta_rel));
  }
  return os.str();
}

json centre_feature_collection(const EllipsoidalPolygon& poly, const CentroidReport& report) {
  // Holes follow their outer ring.
  json polygons = json::array();
  for (const auto& ring : poly.rings()) {
    json coords = json::array();
    for (const auto& p : ring.vertices) coords.push_back({rad_to_deg(p.lon), rad_to_deg(p.lat)});
    coords.push_back(coords.front());
    if (ring.role == RingRole::outer) polygons.push_back(json::array());
    polygons.back().push_back(std::move(coords));
  }
  json geometry = polygons.size() == 1
                      ? json{{"type", "Polygon"}, {"coordinates", polygons.front()}}
                      : json{{"type", "MultiPolygon"}, {"coordinates", polygons}};

  const auto& c = report.result.centre;
  json centre = {{"type", "Feature"},
                 {"geometry",
                  {{"type", "Point"},
                   {"coordinates", {rad_to_deg(c.lon), rad_to_deg(c.lat)}}}},
                 {"properties",
                  {{"role", "centre"},
                   {"lat_dms", format_dms(rad_to_deg(c.lat), true)},
                   {"lon_dms", format_dms(rad_to_deg(c.lon), false)}}}};
  json polygon = {{"type", "Feature"},
                  {"geometry", std::move(geometry)},
                  {"properties", {{"role", "polygon"}, {"area_m2", report.result.area}}}};
  return {{"type", "FeatureCollection"}, {"features", {std::move(polygon), std::move(centre)}}};
}

}  // namespace geocentre
