// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "geocentre/centroid.hpp"
#include "geocentre/geodesy.hpp"
#include "geocentre/polygon.hpp"

namespace geocentre {

struct OracleComparison {
  CentroidResult oracle;
  double grid_step = 0.0;      ///< requested step [rad]
  double separation_m = 0.0;   ///< chord between the two surface centres
  double area_delta_m2 = 0.0;  ///< engine - oracle
  double area_delta_rel = 0.0;
};

struct CentroidReport {
  std::string ellipsoid_name;
  Ellipsoid ellipsoid;
  CentroidConfig config;
  CentroidResult result;
  std::optional<OracleComparison> oracle;
};

/// Straight-line distance between the surface points at p and q [m].
double surface_separation(const Ellipsoid& ell, const GeodeticCoord& p,
                          const GeodeticCoord& q) noexcept;

/// Degrees-minutes-seconds with hundredths of a second and a hemisphere
/// letter, e.g. 54°50'45.00" N. Rounding error is at most 0.005".
std::string format_dms(double degrees, bool is_latitude);

/// Inverse of format_dms. Throws InputError on malformed text.
double parse_dms(std::string_view text);

/// Shortest decimal text that reads back as the same double.
std::string format_number(double v);

nlohmann::json report_to_json(const CentroidReport& report);
std::string render_json(const CentroidReport& report);
std::string render_text(const CentroidReport& report);

/// FeatureCollection with the polygon (degrees, rings closed, longitudes as
/// stored, i.e. unwrapped) and the surface centre as a Point.
nlohmann::json centre_feature_collection(const EllipsoidalPolygon& poly,
                                         const CentroidReport& report);

}  // namespace geocentre
