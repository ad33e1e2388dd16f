// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "geocentre/centroid.hpp"
#include "geocentre/geodesy.hpp"
#include "geocentre/polygon.hpp"

namespace geocentre {

// Brute-force reference for polygon_centroid: midpoint quadrature of the
// ellipsoidal area element N ρ cos φ dλ dφ over a regular (λ, φ) grid,
// keeping the cells whose centre passes an even-odd point-in-polygon test.
// Nothing here uses the strip formulae.

/// Regular (λ, φ) grid. Cell (i, j) spans
/// [lon_min + i·d_lambda, lon_min + (i+1)·d_lambda] and likewise in φ.
struct GridSpec {
  double d_lambda = 0.0;  ///< [rad]
  double d_phi = 0.0;     ///< [rad]
  double lon_min = 0.0;
  double lon_max = 0.0;
  double lat_min = 0.0;
  double lat_max = 0.0;

  std::size_t columns() const noexcept;
  std::size_t rows() const noexcept;

  /// Grid over the polygon's vertex bounding box padded by one cell on each
  /// side. The steps are the largest values not exceeding `step` that divide
  /// the box extents exactly, so box edges fall on cell boundaries.
  static GridSpec covering(const EllipsoidalPolygon& poly, double step);
};

/// Even-odd ray casting in the unwrapped (λ, φ) plane, all rings together.
/// Points within about 1e-12 rad of an edge may land on either side.
bool point_in_polygon(const EllipsoidalPolygon& poly, const GeodeticCoord& q) noexcept;

/// Area and centre of gravity by grid quadrature. The returned
/// diagnostics.strip_count is the number of interior cells; orientation
/// fields are zero.
///
/// Throws InvalidArgument for a malformed grid, ComputationError when fewer
/// than 100 cell centres fall inside the polygon.
CentroidResult oracle_centroid(const Ellipsoid& ell, const EllipsoidalPolygon& poly,
                               const GridSpec& grid);

}  // namespace geocentre
