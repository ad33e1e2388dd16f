// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <numbers>
#include <string_view>

namespace geocentre {

inline constexpr double kPi = std::numbers::pi;

constexpr double deg_to_rad(double deg) noexcept { return deg * (kPi / 180.0); }
constexpr double rad_to_deg(double rad) noexcept { return rad * (180.0 / kPi); }

/// A point on the surface, longitude and (geodetic) latitude in radians.
///
/// Longitude is deliberately not range-restricted: polygon rings are stored
/// unwrapped so that consecutive vertices are less than half a turn apart.
struct GeodeticCoord {
  double lon{};  ///< λ [rad], positive east
  double lat{};  ///< φ [rad], in [-π/2, π/2]

  friend bool operator==(const GeodeticCoord&, const GeodeticCoord&) = default;
};

/// Earth-centred Cartesian position [m], z along the rotation axis.
struct Cartesian3 {
  double x{};
  double y{};
  double z{};

  friend bool operator==(const Cartesian3&, const Cartesian3&) = default;

  Cartesian3 operator*(double s) const noexcept { return {x * s, y * s, z * s}; }
  Cartesian3 operator+(const Cartesian3& o) const noexcept {
    return {x + o.x, y + o.y, z + o.z};
  }
  Cartesian3 operator-(const Cartesian3& o) const noexcept {
    return {x - o.x, y - o.y, z - o.z};
  }
  double norm() const noexcept;
};

/// Oblate spheroid (ellipsoid of revolution).
///
/// Build with make_ellipsoid() or one of the presets; the factory enforces
/// a > 0 and 0 <= f < 1, so a valid Ellipsoid always has e2 < 1.
class Ellipsoid {
 public:
  double a() const noexcept { return a_; }    ///< equatorial semi-axis [m]
  double b() const noexcept { return b_; }    ///< polar semi-axis [m]
  double f() const noexcept { return f_; }    ///< flattening
  double e2() const noexcept { return e2_; }  ///< first eccentricity squared
  bool is_sphere() const noexcept { return f_ == 0.0; }

  /// Inverse flattening; +inf for a sphere.
  double inverse_flattening() const noexcept;

  /// The international (1924) ellipsoid: a = 6378388 m, 1/f = 297.
  static Ellipsoid hayford();
  static Ellipsoid wgs84();
  static Ellipsoid unit_sphere();

  /// Look up a preset by name: "hayford" (alias "international"), "wgs84",
  /// "unit-sphere". Throws InvalidArgument for unknown names.
  static Ellipsoid preset(std::string_view name);

  friend Ellipsoid make_ellipsoid(double a, double inv_f);

 private:
  Ellipsoid(double a, double f);

  double a_;
  double b_;
  double f_;
  double e2_;
};

/// Ellipsoid from equatorial radius and inverse flattening. An inverse
/// flattening of 0 or +inf selects a sphere. Throws InvalidArgument unless
/// a > 0 is finite and inv_f > 1.
Ellipsoid make_ellipsoid(double a, double inv_f);

/// Radius of curvature in the prime vertical, N = a / sqrt(1 - e² sin²φ).
double prime_vertical_radius(const Ellipsoid& ell, double phi) noexcept;

/// Radius of curvature in the meridian, ρ = a(1 - e²) / (1 - e² sin²φ)^{3/2}.
double meridional_radius(const Ellipsoid& ell, double phi) noexcept;

/// Surface point at p (zero ellipsoidal height).
Cartesian3 geodetic_to_cartesian(const Ellipsoid& ell, const GeodeticCoord& p) noexcept;

/// Surface point at p displaced by `height` metres along the outward normal.
Cartesian3 geodetic_to_cartesian(const Ellipsoid& ell, const GeodeticCoord& p,
                                 double height) noexcept;

/// Orthogonal projection onto the spheroid: geodetic coordinates of the
/// surface point whose normal passes through g (height discarded).
///
/// Longitude is returned in (-π, π]. Latitude is found by Newton iteration
/// from Bowring's closed-form estimate; iteration stops when successive
/// latitudes agree to 1e-13 rad.
///
/// Throws ComputationError if g lies within 1e-9·a of the rotation axis
/// (longitude undefined) or the iteration fails to converge in 20 steps.
GeodeticCoord project_to_ellipsoid(const Ellipsoid& ell, const Cartesian3& g);

/// Wrap a longitude into (-π, π].
double normalize_longitude(double lon) noexcept;

}  // namespace geocentre
