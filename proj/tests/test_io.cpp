// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>

#include "geocentre/centroid.hpp"
#include "geocentre/error.hpp"
#include "geocentre/io.hpp"

using namespace geocentre;

namespace {

std::string slurp(const std::string& name) {
  std::ifstream f(std::string(GEOCENTRE_TEST_DATA) + "/" + name, std::ios::binary);
  REQUIRE(f);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("GeoJSON polygon") {
  const auto poly = parse_geojson(
      R"({"type":"Polygon","coordinates":[[[0,30],[90,30],[90,60],[0,60],[0,30]]]})");
  REQUIRE(poly.rings().size() == 1);
  const auto& ring = poly.rings()[0];
  CHECK(ring.role == RingRole::outer);
  REQUIRE(ring.vertices.size() == 4);
  CHECK(ring.vertices[1].lon == deg_to_rad(90));
  CHECK(ring.vertices[1].lat == deg_to_rad(30));
}

TEST_CASE("GeoJSON and WKT give the same polygon") {
  const auto a = parse_polygon_file(slurp("quad.geojson"));
  const auto b = parse_polygon_file(slurp("quad.wkt"));
  CHECK(a.rings()[0].vertices == b.rings()[0].vertices);

  const auto c = parse_polygon_file(slurp("islands.geojson"), InputFormat::geojson);
  const auto d = parse_polygon_file(slurp("islands.wkt"), InputFormat::wkt);
  REQUIRE(c.rings().size() == 4);
  REQUIRE(d.rings().size() == 4);
  for (std::size_t k = 0; k < 4; ++k) {
    CHECK(c.rings()[k].vertices == d.rings()[k].vertices);
    CHECK(c.rings()[k].role == d.rings()[k].role);
  }
  CHECK(c.rings()[3].role == RingRole::hole);

  // Bit-identical engine results.
  const auto ell = Ellipsoid::hayford();
  const auto rc = polygon_centroid(ell, c);
  const auto rd = polygon_centroid(ell, d);
  CHECK(rc.area == rd.area);
  CHECK(rc.g_xyz == rd.g_xyz);
  CHECK(rc.centre == rd.centre);
}

TEST_CASE("MultiPolygon parts straddling the antimeridian share one chart") {
  const auto poly = parse_polygon_file(slurp("islands.geojson"));
  // The second island (-179..-172) is shifted next to the first (170..179).
  CHECK(poly.rings()[1].vertices[0].lon == doctest::Approx(deg_to_rad(181)));
}

TEST_CASE("WKT variants") {
  CHECK(parse_wkt("polygon ((0 30, 90 30, 90 60, 0 60))").rings()[0].vertices.size() == 4);
  CHECK(parse_wkt("POLYGON Z ((0 30 5, 90 30 5, 90 60 5, 0 60 5, 0 30 5))")
            .rings()[0]
            .vertices.size() == 4);
  CHECK(parse_wkt("  POLYGON((0 30,90 30,90 60,0 60,0 30));\n").rings().size() == 1);
  CHECK(parse_wkt("POLYGON((+1.5e1 30, 90 30, 90 -6e1))").rings()[0].vertices[0].lon ==
        deg_to_rad(15));
}

TEST_CASE("parse errors carry a position") {
  try {
    parse_polygon_file(slurp("broken.geojson"));
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() > 1);
  }
  try {
    parse_wkt("POLYGON((0 30, 90 30, 90 x60))");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 25);
    CHECK(e.line() == 1);
  }
  CHECK_THROWS_AS(parse_wkt("POLYGON((0 30, 90 30, 90 60)"), ParseError);
  CHECK_THROWS_AS(parse_wkt("POLYGON((0 30, 90 30, 90 60)) extra"), ParseError);
  CHECK_THROWS_AS(parse_wkt(""), ParseError);
}

TEST_CASE("input errors") {
  CHECK_THROWS_AS(parse_polygon_file(slurp("linestring.geojson")), InputError);
  CHECK_THROWS_AS(parse_wkt("LINESTRING(0 0, 1 1)"), InputError);
  CHECK_THROWS_AS(parse_polygon_file(slurp("degenerate_ring.geojson")), InputError);
  CHECK_THROWS_AS(parse_geojson(R"({"type":"Polygon","coordinates":[[[0,0],[1,91],[2,0]]]})"),
                  InputError);
  CHECK_THROWS_AS(parse_geojson(R"({"type":"Polygon"})"), InputError);
  CHECK_THROWS_AS(parse_geojson(R"({"type":"Polygon","coordinates":[[[0,"a"],[1,1],[2,0]]]})"),
                  InputError);
  CHECK_THROWS_AS(parse_geojson(R"({"type":"Feature","geometry":null})"), InputError);
  CHECK_THROWS_AS(parse_wkt("POLYGON EMPTY"), InputError);
  // Ring around the pole without pole vertices.
  CHECK_THROWS_AS(
      parse_wkt("POLYGON((0 80, 90 80, 180 80, -90 80, 0 80))"), InputError);
}

TEST_CASE("format_from_path") {
  CHECK(format_from_path("a/b.GeoJSON") == InputFormat::geojson);
  CHECK(format_from_path("x.json") == InputFormat::geojson);
  CHECK(format_from_path("x.wkt") == InputFormat::wkt);
  CHECK(format_from_path("x") == InputFormat::automatic);
}
