// SPDX-License-Identifier: Apache-2.0
//
// Test-only reference values and oracles. Nothing here calls the strip
// engine; closed forms are written out from the surface integrals.
#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "geocentre/geodesy.hpp"
#include "geocentre/polygon.hpp"

namespace geocentre::testing {

// Frozen from a 40-digit mpmath evaluation.
inline constexpr double kQuadAreaUnitSphere = 0.5749513597782150783;  // (π/2)(sin60° - sin30°)
inline constexpr double kQuadGzUnitSphere = 0.6830127018922193234;   // (sin30° + sin60°)/2
inline constexpr double kHayfordE2 = 593.0 / 88209.0;
inline constexpr double kHayfordPolarN = 6399936.608108108108;       // a/sqrt(1 - e²)
// Hayford quadrilateral λ ∈ [0°, 90°], φ ∈ [30°, 60°], mpmath quadrature.
inline constexpr double kQuadAreaHayford = 23383981536847.5553676;
inline constexpr double kQuadGxHayford = 2907998.35545052541;
inline constexpr double kQuadGzHayford = 4335835.00108206531;

/// Latitude/longitude rectangle as a ring (counter-clockwise in (λ, φ)).
inline std::vector<GeodeticCoord> rectangle(double lon0, double lon1, double lat0, double lat1) {
  return {{lon0, lat0}, {lon1, lat0}, {lon1, lat1}, {lon0, lat1}};
}

inline EllipsoidalPolygon test_quadrilateral() {
  return EllipsoidalPolygon::single(
      rectangle(0.0, deg_to_rad(90.0), deg_to_rad(30.0), deg_to_rad(60.0)));
}

/// Exact area of a latitude/longitude rectangle on the ellipsoid, from the
/// antiderivative of N ρ cos φ.
inline double rectangle_area(const Ellipsoid& ell, double lon0, double lon1, double lat0,
                             double lat1) {
  const double b = ell.b();
  const double e2 = ell.e2();
  const auto primitive = [&](double phi) {
    const double s = std::sin(phi);
    if (e2 == 0.0) return b * b * s;
    const double e = std::sqrt(e2);
    return b * b / 2 * (s / (1 - e2 * s * s) + std::atanh(e * s) / e);
  };
  return (lon1 - lon0) * (primitive(lat1) - primitive(lat0));
}

/// Centre of gravity of a latitude/longitude rectangle on a sphere of
/// radius r.
inline Cartesian3 sphere_rectangle_centroid(double r, double lon0, double lon1, double lat0,
                                            double lat1) {
  const double area = (lon1 - lon0) * (std::sin(lat1) - std::sin(lat0));
  // ∫cos²φ dφ and ∫sinφ cosφ dφ
  const double c2 = (lat1 - lat0) / 2 + (std::sin(2 * lat1) - std::sin(2 * lat0)) / 4;
  const double sc = (std::sin(lat1) * std::sin(lat1) - std::sin(lat0) * std::sin(lat0)) / 2;
  return {r * (std::sin(lon1) - std::sin(lon0)) * c2 / area,
          r * (std::cos(lon0) - std::cos(lon1)) * c2 / area, r * (lon1 - lon0) * sc / area};
}

/// Surface point nearest to g, by successively refined grid search over
/// (λ, φ). Independent of project_to_ellipsoid.
inline GeodeticCoord brute_force_nearest(const Ellipsoid& ell, const Cartesian3& g) {
  const auto dist2 = [&](double lon, double lat) {
    const double sl = std::sin(lat);
    const double cl = std::cos(lat);
    const double n = ell.a() / std::sqrt(1 - ell.e2() * sl * sl);
    const double dx = n * cl * std::cos(lon) - g.x;
    const double dy = n * cl * std::sin(lon) - g.y;
    const double dz = n * (1 - ell.e2()) * sl - g.z;
    return dx * dx + dy * dy + dz * dz;
  };
  double best_lon = 0;
  double best_lat = 0;
  double best = INFINITY;
  // Global scan at 1°.
  for (int i = -180; i < 180; ++i) {
    for (int j = -90; j <= 90; ++j) {
      const double lon = deg_to_rad(i);
      const double lat = deg_to_rad(j);
      const double d = dist2(lon, lat);
      if (d < best) best = d, best_lon = lon, best_lat = lat;
    }
  }
  double half = deg_to_rad(2.0);
  constexpr int kSteps = 20;
  while (half > 1e-11) {
    const double c_lon = best_lon;
    const double c_lat = best_lat;
    for (int i = -kSteps; i <= kSteps; ++i) {
      for (int j = -kSteps; j <= kSteps; ++j) {
        const double lon = c_lon + half * i / kSteps;
        const double lat = std::clamp(c_lat + half * j / kSteps, -kPi / 2, kPi / 2);
        const double d = dist2(lon, lat);
        if (d < best) best = d, best_lon = lon, best_lat = lat;
      }
    }
    half /= 5;
  }
  return {normalize_longitude(best_lon), best_lat};
}

/// Star-shaped polygon in the (λ, φ) chart around a random centre: n
/// vertices at increasing angles, radii in [0.5, 1]·R with R in [10°, 15°],
/// so the extent is at most 30° in both coordinates. Longitudes are wrapped
/// into (-180°, 180°], so rings near the antimeridian arrive split.
inline std::vector<GeodeticCoord> random_star(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  std::uniform_int_distribution<int> count(8, 64);
  const double lon_c = deg_to_rad(-180.0 + 360.0 * u01(rng));
  const double lat_c = deg_to_rad(-55.0 + 110.0 * u01(rng));
  const double radius = deg_to_rad(10.0 + 5.0 * u01(rng));
  const int n = count(rng);
  std::vector<GeodeticCoord> ring;
  for (int k = 0; k < n; ++k) {
    const double theta = 2 * kPi * (k + 0.8 * u01(rng)) / n;
    const double r = radius * (0.5 + 0.5 * u01(rng));
    ring.push_back(
        {normalize_longitude(lon_c + r * std::cos(theta)), lat_c + r * std::sin(theta)});
  }
  return ring;
}

}  // namespace geocentre::testing
