// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <vector>

#include "geocentre/geodesy.hpp"

namespace geocentre {

enum class RingRole { outer, hole };

/// A closed ring of vertices; the last vertex connects back to the first.
struct Ring {
  std::vector<GeodeticCoord> vertices;
  RingRole role = RingRole::outer;
};

/// Unwrap ring longitudes so that every pair of consecutive vertices,
/// including the closing pair, is less than π apart in longitude.
///
/// The first longitude is kept as given; later vertices are shifted by
/// whole turns only when needed, so an already-unwrapped ring comes back
/// bit-identical.
///
/// Throws InvalidArgument if a segment spans exactly π (ambiguous side), if
/// the ring winds around a pole (closing segment would need a full turn), or
/// if the unwrapped ring spans more than 2π.
std::vector<GeodeticCoord> unwrap_ring(std::span<const GeodeticCoord> ring);

/// One or more rings on the spheroid: outer rings, each followed by its
/// holes.
///
/// Construction validates and normalizes the rings: at least three distinct
/// vertices per ring, finite coordinates with latitudes in [-π/2, π/2],
/// unwrapped longitudes, and every ring shifted by whole turns so its mean
/// longitude is within π of the first ring's. A ring enclosing a pole must
/// carry explicit pole vertices; otherwise it is rejected.
///
/// Ring orientation is not constrained here; the centroid engine normalizes
/// it.
class EllipsoidalPolygon {
 public:
  /// Throws InvalidArgument on any violated invariant.
  explicit EllipsoidalPolygon(std::vector<Ring> rings);

  /// Convenience: a single outer ring.
  static EllipsoidalPolygon single(std::vector<GeodeticCoord> outer);

  const std::vector<Ring>& rings() const noexcept { return rings_; }
  std::size_t vertex_count() const noexcept;

  /// Same polygon with every ring traversed in the opposite direction.
  EllipsoidalPolygon reversed() const;

 private:
  std::vector<Ring> rings_;
};

}  // namespace geocentre
