// SPDX-License-Identifier: Apache-2.0
#include "geocentre/centroid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "geocentre/error.hpp"

namespace geocentre {

void CentroidConfig::validate() const {
  const auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
  if (!positive(max_dphi) || !positive(max_dlambda)) {
    throw InvalidArgument("densification bounds must be positive and finite");
  }
  if (!positive(degeneracy_floor)) {
    throw InvalidArgument("degeneracy floor must be positive and finite");
  }
  if (lambda0 && !std::isfinite(*lambda0)) {
    throw InvalidArgument("reference longitude must be finite");
  }
}

GeodeticCoord midpoint(const GeodeticCoord& p, const GeodeticCoord& q) noexcept {
  return {(p.lon + q.lon) / 2, (p.lat + q.lat) / 2};
}

double sinc_like(double theta) noexcept {
  constexpr double kSeriesThreshold = 1e-6;
  if (std::abs(theta) < kSeriesThreshold) {
    const double t2 = theta * theta;
    return 1.0 - t2 / 6.0 + t2 * t2 / 120.0;
  }
  // Extended precision keeps the quotient correctly rounded, so the two
  // branches agree to half an ulp at the switch.
  const long double t = theta;
  return static_cast<double>(std::sin(t) / t);
}

double arc_centroid_distance(double r, double alpha) noexcept {
  return r * sinc_like(alpha);
}

StripContribution strip_contribution(const Ellipsoid& ell, const GeodeticCoord& p,
                                     const GeodeticCoord& q, double lambda0) noexcept {
  const GeodeticCoord m = midpoint(p, q);
  const double n = prime_vertical_radius(ell, m.lat);
  const double rho = meridional_radius(ell, m.lat);
  const double radius = n * std::cos(m.lat);  // of the parallel through M
  const double span = m.lon - lambda0;
  const double d = arc_centroid_distance(radius, span / 2);
  const double mid_lon = (m.lon + lambda0) / 2;

  StripContribution strip;
  strip.s = radius * span * rho * (q.lat - p.lat);
  strip.x = d * std::cos(mid_lon);
  strip.y = d * std::sin(mid_lon);
  strip.z = n * (1.0 - ell.e2()) * std::sin(m.lat);
  return strip;
}

namespace {

std::size_t piece_count(double delta, double bound) {
  const double ratio = std::abs(delta) / bound;
  if (ratio <= 1.0) return 1;
  auto n = static_cast<std::size_t>(std::ceil(ratio));
  // ceil() of a ratio rounded up past an integer would overshoot by one.
  if (n > 1 && std::abs(delta) / static_cast<double>(n - 1) <= bound) --n;
  return n;
}

}  // namespace

std::vector<GeodeticCoord> densify_ring(std::span<const GeodeticCoord> ring,
                                        const CentroidConfig& cfg) {
  std::vector<GeodeticCoord> out;
  out.reserve(ring.size());
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const GeodeticCoord& p = ring[i];
    const GeodeticCoord& q = ring[(i + 1) % ring.size()];
    out.push_back(p);
    const double dlon = q.lon - p.lon;
    const double dlat = q.lat - p.lat;
    const std::size_t n =
        std::max(piece_count(dlat, cfg.max_dphi), piece_count(dlon, cfg.max_dlambda));
    // Interpolate from the nearer endpoint so that densifying q -> p yields
    // exactly the same points in reverse order.
    const double nd = static_cast<double>(n);
    for (std::size_t k = 1; k < n; ++k) {
      if (2 * k == n) {
        out.push_back(midpoint(p, q));
      } else if (2 * k < n) {
        const double t = static_cast<double>(k) / nd;
        out.push_back({p.lon + t * dlon, p.lat + t * dlat});
      } else {
        const double t = static_cast<double>(n - k) / nd;
        out.push_back({q.lon - t * dlon, q.lat - t * dlat});
      }
    }
  }
  return out;
}

void StripAccumulator::add(const StripContribution& strip) noexcept {
  s_ += strip.s;
  sx_ += strip.s * strip.x;
  sy_ += strip.s * strip.y;
  sz_ += strip.s * strip.z;
  ++count_;
}

Cartesian3 StripAccumulator::centre(double degeneracy_floor) const {
  const double s = s_.value();
  if (!(std::abs(s) >= degeneracy_floor)) {
    throw DegeneratePolygon("polygon area |sum S_i| = " + std::to_string(std::abs(s)) +
                            " m^2 is below the degeneracy floor");
  }
  return {sx_.value() / s, sy_.value() / s, sz_.value() / s};
}

Accumulation accumulate(std::span<const StripContribution> strips, double degeneracy_floor) {
  StripAccumulator acc;
  for (const auto& s : strips) acc.add(s);
  const Cartesian3 g = acc.centre(degeneracy_floor);
  return {acc.sum_s(), g};
}

namespace {

double auto_lambda0(const EllipsoidalPolygon& poly) {
  CompensatedSum sum;
  std::size_t n = 0;
  for (const auto& ring : poly.rings()) {
    if (ring.role != RingRole::outer) continue;
    for (const auto& p : ring.vertices) sum += p.lon;
    n += ring.vertices.size();
  }
  return sum.value() / static_cast<double>(n);
}

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

}  // namespace

CentroidResult polygon_centroid(const Ellipsoid& ell, const EllipsoidalPolygon& poly,
                                const CentroidConfig& cfg) {
  cfg.validate();

  CentroidResult result;
  auto& diag = result.diagnostics;
  diag.lambda0_auto = !cfg.lambda0.has_value();
  diag.lambda0 = cfg.lambda0 ? *cfg.lambda0 : auto_lambda0(poly);
  diag.input_vertices = poly.vertex_count();

  StripAccumulator total;
  CompensatedSum as_given;
  std::vector<StripContribution> strips;
  for (std::size_t k = 0; k < poly.rings().size(); ++k) {
    const Ring& ring = poly.rings()[k];
    const auto dense = densify_ring(ring.vertices, cfg);
    diag.inserted_vertices += dense.size() - ring.vertices.size();

    strips.clear();
    strips.reserve(dense.size());
    StripAccumulator ring_acc;
    for (std::size_t i = 0; i < dense.size(); ++i) {
      strips.push_back(
          strip_contribution(ell, dense[i], dense[(i + 1) % dense.size()], diag.lambda0));
      ring_acc.add(strips.back());
    }
    const double ring_sum = ring_acc.sum_s();
    as_given += ring_sum;
    if (!(std::abs(ring_sum) >= cfg.degeneracy_floor)) {
      throw DegeneratePolygon("ring " + std::to_string(k) + " has zero signed area");
    }

    // Reversing a ring negates every S_i and leaves every strip centre as is.
    const double wanted = ring.role == RingRole::outer ? 1.0 : -1.0;
    const bool flip = sign_of(ring_sum) != sign_of(wanted);
    if (flip) ++diag.rings_reoriented;
    for (StripContribution s : strips) {
      if (flip) s.s = -s.s;
      total.add(s);
    }
  }

  result.g_xyz = total.centre(cfg.degeneracy_floor);
  result.area = std::abs(total.sum_s());
  diag.strip_count = total.count();
  diag.input_orientation_sign = sign_of(as_given.value());
  diag.sum_sign = sign_of(total.sum_s());
  result.centre = project_to_ellipsoid(ell, result.g_xyz);
  return result;
}

}  // namespace geocentre
