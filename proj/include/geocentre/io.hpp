// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string_view>

#include "geocentre/polygon.hpp"

namespace geocentre {

enum class InputFormat { automatic, geojson, wkt };

/// Guess the format from a file name: .json/.geojson -> geojson,
/// .wkt/.txt -> wkt, anything else -> automatic.
InputFormat format_from_path(std::string_view path);

/// Parse polygon data in decimal degrees, longitude first.
///
/// GeoJSON: a Polygon or MultiPolygon geometry, or a Feature /
/// FeatureCollection / GeometryCollection whose members are all polygonal;
/// the first ring of each polygon is its outer ring, the others are holes.
/// WKT: POLYGON or MULTIPOLYGON, optionally prefixed with "SRID=n;".
/// `automatic` picks GeoJSON when the first non-blank byte is '{'.
///
/// Every part is merged into one EllipsoidalPolygon. A repeated closing
/// vertex is dropped, longitudes are unwrapped and coordinates converted to
/// radians.
///
/// Throws ParseError (with position) on malformed syntax and InputError on
/// non-polygonal geometry, latitudes outside [-90, 90], rings with fewer than
/// three vertices or rings the polygon model rejects.
EllipsoidalPolygon parse_polygon_file(std::string_view bytes,
                                      InputFormat hint = InputFormat::automatic);

EllipsoidalPolygon parse_geojson(std::string_view bytes);
EllipsoidalPolygon parse_wkt(std::string_view text);

}  // namespace geocentre
