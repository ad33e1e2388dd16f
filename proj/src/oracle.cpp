// SPDX-License-Identifier: Apache-2.0
#include "geocentre/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "geocentre/compensated_sum.hpp"
#include "geocentre/error.hpp"

namespace geocentre {

namespace {

constexpr std::size_t kMinInteriorCells = 100;

// λ where the edge a-b crosses the parallel φ; caller guarantees a crossing.
double crossing_lon(const GeodeticCoord& a, const GeodeticCoord& b, double phi) noexcept {
  return a.lon + (phi - a.lat) * (b.lon - a.lon) / (b.lat - a.lat);
}

bool straddles(const GeodeticCoord& a, const GeodeticCoord& b, double phi) noexcept {
  return (a.lat > phi) != (b.lat > phi);
}

}  // namespace

std::size_t GridSpec::columns() const noexcept {
  return static_cast<std::size_t>(std::llround((lon_max - lon_min) / d_lambda));
}

std::size_t GridSpec::rows() const noexcept {
  return static_cast<std::size_t>(std::llround((lat_max - lat_min) / d_phi));
}

GridSpec GridSpec::covering(const EllipsoidalPolygon& poly, double step) {
  if (!std::isfinite(step) || !(step > 0.0)) {
    throw InvalidArgument("oracle grid step must be positive and finite");
  }
  double lon_lo = std::numeric_limits<double>::infinity();
  double lon_hi = -lon_lo;
  double lat_lo = lon_lo;
  double lat_hi = -lon_lo;
  for (const auto& ring : poly.rings()) {
    for (const auto& p : ring.vertices) {
      lon_lo = std::min(lon_lo, p.lon);
      lon_hi = std::max(lon_hi, p.lon);
      lat_lo = std::min(lat_lo, p.lat);
      lat_hi = std::max(lat_hi, p.lat);
    }
  }
  const auto fitted = [step](double extent) {
    if (extent <= 0.0) return step;
    return extent / std::ceil(extent / step);
  };
  GridSpec g;
  g.d_lambda = fitted(lon_hi - lon_lo);
  g.d_phi = fitted(lat_hi - lat_lo);
  g.lon_min = lon_lo - g.d_lambda;
  g.lon_max = lon_hi + g.d_lambda;
  g.lat_min = lat_lo - g.d_phi;
  g.lat_max = lat_hi + g.d_phi;
  return g;
}

bool point_in_polygon(const EllipsoidalPolygon& poly, const GeodeticCoord& q) noexcept {
  bool inside = false;
  for (const auto& ring : poly.rings()) {
    const auto& v = ring.vertices;
    for (std::size_t i = 0, j = v.size() - 1; i < v.size(); j = i++) {
      if (straddles(v[j], v[i], q.lat) && q.lon < crossing_lon(v[j], v[i], q.lat)) {
        inside = !inside;
      }
    }
  }
  return inside;
}

CentroidResult oracle_centroid(const Ellipsoid& ell, const EllipsoidalPolygon& poly,
                               const GridSpec& grid) {
  const auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
  if (!positive(grid.d_lambda) || !positive(grid.d_phi) || !(grid.lon_max > grid.lon_min) ||
      !(grid.lat_max > grid.lat_min)) {
    throw InvalidArgument("oracle grid must have positive steps and a non-empty box");
  }

  const std::size_t n_cols = grid.columns();
  const std::size_t n_rows = grid.rows();
  CompensatedSum area, wx, wy, wz;
  std::size_t interior = 0;
  std::vector<double> crossings;

  // Row by row: a cell centre is inside when an odd number of edge
  // crossings of its parallel lie at or west of it, which is the same
  // even-odd test point_in_polygon applies with its ray cast eastwards.
  for (std::size_t j = 0; j < n_rows; ++j) {
    const double phi = grid.lat_min + (static_cast<double>(j) + 0.5) * grid.d_phi;
    crossings.clear();
    for (const auto& ring : poly.rings()) {
      const auto& v = ring.vertices;
      for (std::size_t i = 0, k = v.size() - 1; i < v.size(); k = i++) {
        if (straddles(v[k], v[i], phi)) crossings.push_back(crossing_lon(v[k], v[i], phi));
      }
    }
    if (crossings.empty()) continue;
    std::sort(crossings.begin(), crossings.end());

    const double cell_area = prime_vertical_radius(ell, phi) * meridional_radius(ell, phi) *
                             std::cos(phi) * grid.d_lambda * grid.d_phi;
    for (std::size_t m = 0; m + 1 < crossings.size(); m += 2) {
      const double west = crossings[m];
      const double east = crossings[m + 1];
      const double first = std::floor((west - grid.lon_min) / grid.d_lambda - 0.5);
      for (auto i = static_cast<std::size_t>(std::max(0.0, first)); i < n_cols; ++i) {
        const double lon = grid.lon_min + (static_cast<double>(i) + 0.5) * grid.d_lambda;
        if (lon >= east) break;
        if (lon < west) continue;
        const Cartesian3 c = geodetic_to_cartesian(ell, {lon, phi});
        area += cell_area;
        wx += cell_area * c.x;
        wy += cell_area * c.y;
        wz += cell_area * c.z;
        ++interior;
      }
    }
  }

  if (interior < kMinInteriorCells) {
    throw ComputationError("oracle grid resolves only " + std::to_string(interior) +
                           " interior cells (need at least 100); use a finer grid step");
  }

  CentroidResult result;
  result.area = area.value();
  result.g_xyz = {wx.value() / result.area, wy.value() / result.area, wz.value() / result.area};
  result.centre = project_to_ellipsoid(ell, result.g_xyz);
  result.diagnostics.strip_count = interior;
  return result;
}

}  // namespace geocentre
