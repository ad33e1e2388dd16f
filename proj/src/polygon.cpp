// SPDX-License-Identifier: Apache-2.0
#include "geocentre/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "geocentre/compensated_sum.hpp"
#include "geocentre/error.hpp"

namespace geocentre {

namespace {

constexpr double kTwoPi = 2.0 * kPi;

std::size_t distinct_count(std::span<const GeodeticCoord> ring) {
  std::vector<GeodeticCoord> v(ring.begin(), ring.end());
  const auto less = [](const GeodeticCoord& l, const GeodeticCoord& r) {
    return l.lon < r.lon || (l.lon == r.lon && l.lat < r.lat);
  };
  std::sort(v.begin(), v.end(), less);
  return static_cast<std::size_t>(std::unique(v.begin(), v.end()) - v.begin());
}

double mean_longitude(std::span<const GeodeticCoord> ring) {
  CompensatedSum sum;
  for (const auto& p : ring) sum += p.lon;
  return sum.value() / static_cast<double>(ring.size());
}

}  // namespace

std::vector<GeodeticCoord> unwrap_ring(std::span<const GeodeticCoord> ring) {
  std::vector<GeodeticCoord> out(ring.begin(), ring.end());
  for (std::size_t i = 1; i < out.size(); ++i) {
    const double prev = out[i - 1].lon;
    double& lon = out[i].lon;
    if (std::abs(lon - prev) < kPi) continue;
    const double turns = std::round((prev - lon) / kTwoPi);
    lon += turns * kTwoPi;
    if (std::abs(lon - prev) >= kPi) {
      throw InvalidArgument("ring segment " + std::to_string(i - 1) + "-" +
                            std::to_string(i) +
                            " spans exactly 180 degrees of longitude; insert an "
                            "intermediate vertex");
    }
  }
  if (out.size() > 1 && std::abs(out.front().lon - out.back().lon) >= kPi) {
    throw InvalidArgument(
        "ring encircles a pole without vertices at the pole; such rings are "
        "not supported");
  }
  const auto [lo, hi] = std::minmax_element(
      out.begin(), out.end(),
      [](const GeodeticCoord& l, const GeodeticCoord& r) { return l.lon < r.lon; });
  if (!out.empty() && hi->lon - lo->lon > kTwoPi) {
    throw InvalidArgument("ring spans more than a full turn of longitude");
  }
  return out;
}

EllipsoidalPolygon::EllipsoidalPolygon(std::vector<Ring> rings) : rings_(std::move(rings)) {
  if (rings_.empty()) throw InvalidArgument("polygon has no rings");
  if (rings_.front().role != RingRole::outer) {
    throw InvalidArgument("the first ring of a polygon must be an outer ring");
  }
  double reference = 0.0;
  for (std::size_t k = 0; k < rings_.size(); ++k) {
    auto& ring = rings_[k].vertices;
    for (const auto& p : ring) {
      if (!std::isfinite(p.lon) || !std::isfinite(p.lat)) {
        throw InvalidArgument("ring " + std::to_string(k) + " has a non-finite coordinate");
      }
      if (std::abs(p.lat) > kPi / 2) {
        throw InvalidArgument("ring " + std::to_string(k) +
                              " has a latitude outside [-90, 90] degrees");
      }
    }
    if (distinct_count(ring) < 3) {
      throw InvalidArgument("ring " + std::to_string(k) +
                            " has fewer than 3 distinct vertices");
    }
    ring = unwrap_ring(ring);

    const double mean = mean_longitude(ring);
    if (k == 0) {
      reference = mean;
      continue;
    }
    const double turns = std::round((reference - mean) / kTwoPi);
    if (turns != 0.0) {
      for (auto& p : ring) p.lon += turns * kTwoPi;
    }
  }
}

EllipsoidalPolygon EllipsoidalPolygon::single(std::vector<GeodeticCoord> outer) {
  return EllipsoidalPolygon({Ring{std::move(outer), RingRole::outer}});
}

std::size_t EllipsoidalPolygon::vertex_count() const noexcept {
  std::size_t n = 0;
  for (const auto& r : rings_) n += r.vertices.size();
  return n;
}

EllipsoidalPolygon EllipsoidalPolygon::reversed() const {
  EllipsoidalPolygon copy = *this;
  for (auto& r : copy.rings_) std::reverse(r.vertices.begin(), r.vertices.end());
  return copy;
}

}  // namespace geocentre
