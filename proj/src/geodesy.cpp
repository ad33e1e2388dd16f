// SPDX-License-Identifier: Apache-2.0
#include "geocentre/geodesy.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "geocentre/error.hpp"

namespace geocentre {

double Cartesian3::norm() const noexcept { return std::hypot(x, y, z); }

Ellipsoid::Ellipsoid(double a, double f)
    : a_(a), b_(a * (1.0 - f)), f_(f), e2_(f * (2.0 - f)) {}

double Ellipsoid::inverse_flattening() const noexcept {
  return f_ == 0.0 ? std::numeric_limits<double>::infinity() : 1.0 / f_;
}

Ellipsoid make_ellipsoid(double a, double inv_f) {
  if (!std::isfinite(a) || !(a > 0.0)) {
    throw InvalidArgument("equatorial radius must be positive and finite, got " +
                          std::to_string(a));
  }
  if (inv_f == 0.0 || inv_f == std::numeric_limits<double>::infinity()) {
    return Ellipsoid(a, 0.0);
  }
  if (!(inv_f > 1.0)) {
    throw InvalidArgument("inverse flattening must exceed 1 (or be 0/inf for a sphere), got " +
                          std::to_string(inv_f));
  }
  return Ellipsoid(a, 1.0 / inv_f);
}

Ellipsoid Ellipsoid::hayford() { return make_ellipsoid(6378388.0, 297.0); }
Ellipsoid Ellipsoid::wgs84() { return make_ellipsoid(6378137.0, 298.257223563); }
Ellipsoid Ellipsoid::unit_sphere() { return make_ellipsoid(1.0, 0.0); }

Ellipsoid Ellipsoid::preset(std::string_view name) {
  if (name == "hayford" || name == "international") return hayford();
  if (name == "wgs84") return wgs84();
  if (name == "unit-sphere") return unit_sphere();
  throw InvalidArgument("unknown ellipsoid preset '" + std::string(name) +
                        "' (expected hayford, wgs84 or unit-sphere)");
}

namespace {

// 1 - e² sin²φ
double w2(const Ellipsoid& ell, double sin_phi) noexcept {
  return 1.0 - ell.e2() * sin_phi * sin_phi;
}

}  // namespace

double prime_vertical_radius(const Ellipsoid& ell, double phi) noexcept {
  return ell.a() / std::sqrt(w2(ell, std::sin(phi)));
}

double meridional_radius(const Ellipsoid& ell, double phi) noexcept {
  const double w = w2(ell, std::sin(phi));
  return ell.a() * (1.0 - ell.e2()) / (w * std::sqrt(w));
}

Cartesian3 geodetic_to_cartesian(const Ellipsoid& ell, const GeodeticCoord& p) noexcept {
  return geodetic_to_cartesian(ell, p, 0.0);
}

Cartesian3 geodetic_to_cartesian(const Ellipsoid& ell, const GeodeticCoord& p,
                                 double height) noexcept {
  const double sin_phi = std::sin(p.lat);
  const double cos_phi = std::cos(p.lat);
  const double n = ell.a() / std::sqrt(w2(ell, sin_phi));
  const double r = (n + height) * cos_phi;
  return {r * std::cos(p.lon), r * std::sin(p.lon),
          (n * (1.0 - ell.e2()) + height) * sin_phi};
}

double normalize_longitude(double lon) noexcept {
  double r = std::remainder(lon, 2.0 * kPi);
  if (r <= -kPi) r += 2.0 * kPi;
  return r;
}

GeodeticCoord project_to_ellipsoid(const Ellipsoid& ell, const Cartesian3& g) {
  const double a = ell.a();
  const double b = ell.b();
  const double e2 = ell.e2();
  const double p = std::hypot(g.x, g.y);
  if (!std::isfinite(p) || !std::isfinite(g.z)) {
    throw ComputationError("cannot project a non-finite point onto the ellipsoid");
  }
  if (p < 1e-9 * a) {
    throw ComputationError(
        "point lies on the rotation axis; its longitude is undefined");
  }

  double lon = std::atan2(g.y, g.x);
  if (lon <= -kPi) lon = kPi;

  // Bowring's estimate, exact for a sphere.
  const double ep2 = e2 / (1.0 - e2);
  const double theta = std::atan2(g.z * a, p * b);
  const double st = std::sin(theta);
  const double ct = std::cos(theta);
  double phi = std::atan2(g.z + ep2 * b * st * st * st, p - e2 * a * ct * ct * ct);

  // Newton on the normal-line condition
  //   p sinφ - z cosφ - e² N(φ) sinφ cosφ = 0.
  constexpr int kMaxIterations = 20;
  constexpr double kTolerance = 1e-13;
  for (int it = 0; it < kMaxIterations; ++it) {
    const double s = std::sin(phi);
    const double c = std::cos(phi);
    const double w = w2(ell, s);
    const double n = a / std::sqrt(w);
    const double dn = n * e2 * s * c / w;
    const double f = p * s - g.z * c - e2 * n * s * c;
    const double df = p * c + g.z * s - e2 * (dn * s * c + n * (c * c - s * s));
    if (df == 0.0) break;
    const double step = f / df;
    phi -= step;
    if (std::abs(step) < kTolerance) {
      if (phi > kPi / 2) phi = kPi / 2;
      if (phi < -kPi / 2) phi = -kPi / 2;
      return {lon, phi};
    }
  }
  throw ComputationError("latitude iteration did not converge in 20 steps");
}

}  // namespace geocentre
