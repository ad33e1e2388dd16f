// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <random>
#include <string>

#include <json.hpp>

#include "geocentre/centroid.hpp"
#include "geocentre/error.hpp"
#include "geocentre/report.hpp"
#include "support/reference.hpp"

using namespace geocentre;

TEST_CASE("format_dms") {
  CHECK(format_dms(54.0 + 50.0 / 60 + 45.0 / 3600, true) == "54\xC2\xB0" "50'45.00\" N");
  CHECK(format_dms(25.0 + 18.0 / 60 + 23.0 / 3600, false) == "25\xC2\xB0" "18'23.00\" E");
  CHECK(format_dms(-0.5, true) == "0\xC2\xB0" "30'00.00\" S");
  CHECK(format_dms(-120.25, false) == "120\xC2\xB0" "15'00.00\" W");
  // 59.9999" rounds up through the minutes and degrees.
  CHECK(format_dms(10.0 + 59.0 / 60 + 59.9999 / 3600, true) == "11\xC2\xB0" "00'00.00\" N");
  CHECK_THROWS_AS(parse_dms("garbage"), InputError);

  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-180, 180);
  for (int i = 0; i < 2000; ++i) {
    const double deg = u(rng);
    CHECK(std::abs(parse_dms(format_dms(deg, false)) - deg) * 3600 <= 0.005 + 1e-9);
    CHECK(std::abs(parse_dms(format_dms(deg / 2, true)) - deg / 2) * 3600 <= 0.005 + 1e-9);
  }
}

TEST_CASE("format_number reads back exactly") {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-1e7, 1e7);
  for (int i = 0; i < 1000; ++i) {
    const double v = u(rng);
    CHECK(std::stod(format_number(v)) == v);
  }
  CHECK(format_number(0.5) == "0.5");
}

TEST_CASE("surface_separation") {
  const auto s = Ellipsoid::unit_sphere();
  CHECK(surface_separation(s, {0, 0}, {kPi / 2, 0}) == doctest::Approx(std::sqrt(2.0)));
  CHECK(surface_separation(s, {0.3, 0.2}, {0.3, 0.2}) == 0.0);
}

TEST_CASE("report JSON and centre feature collection") {
  const auto ell = Ellipsoid::hayford();
  const auto poly = geocentre::testing::test_quadrilateral();
  CentroidReport report{"hayford", ell, {}, polygon_centroid(ell, poly), std::nullopt};
  const auto doc = report_to_json(report);
  CHECK(doc["ellipsoid"]["inv_f"].get<double>() == 297.0);
  CHECK(doc["area_km2"].get<double>() == doc["area_m2"].get<double>() / 1e6);
  CHECK_FALSE(doc.contains("oracle"));
  CHECK(nlohmann::json::parse(render_json(report)) == doc);

  CentroidReport sphere{"unit-sphere", Ellipsoid::unit_sphere(), {}, report.result, std::nullopt};
  CHECK(report_to_json(sphere)["ellipsoid"]["inv_f"].is_null());

  const auto fc = centre_feature_collection(poly, report);
  const auto& ring = fc["features"][0]["geometry"]["coordinates"][0];
  CHECK(fc["features"][0]["geometry"]["type"] == "Polygon");
  CHECK(ring.size() == 5);
  CHECK(ring.front() == ring.back());
  const auto& pt = fc["features"][1]["geometry"]["coordinates"];
  CHECK(pt[0].get<double>() == doctest::Approx(rad_to_deg(report.result.centre.lon)));
  CHECK(pt[1].get<double>() == doctest::Approx(rad_to_deg(report.result.centre.lat)));
}
