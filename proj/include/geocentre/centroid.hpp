// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "geocentre/compensated_sum.hpp"
#include "geocentre/geodesy.hpp"
#include "geocentre/polygon.hpp"

namespace geocentre {

// Strip decomposition of an ellipsoidal polygon.
//
// Every boundary segment P_i -> P_{i+1} defines a thin strip of the spheroid
// bounded by the parallel through the segment midpoint M, the reference
// meridian λ0 and the meridian λ_M. Its signed area is
//
//   S_i = N_M cos φ_M (λ_M - λ0) · ρ_M (φ_{i+1} - φ_i)
//
// and its centre of gravity lies on the parallel through M at distance
// N_M cos φ_M · sin α / α from the axis (α = (λ_M - λ0)/2), in the direction
// of the mid-longitude (λ_M + λ0)/2, at height Z = N_M (1 - e²) sin φ_M.
// Summing S_i over a closed ring cancels everything outside the ring; the
// centre of the polygon is the S_i-weighted mean of the strip centres.

/// Signed area and centre of gravity of one strip.
struct StripContribution {
  double s{};  ///< signed area [m²]
  double x{};
  double y{};
  double z{};
};

struct CentroidConfig {
  /// Reference meridian [rad]. Empty selects the mean longitude of the
  /// outer-ring vertices.
  std::optional<double> lambda0;
  /// Largest latitude step of a processed segment [rad].
  double max_dphi = 1e-3;
  /// Largest longitude step of a processed segment [rad].
  double max_dlambda = 1e-3;
  /// |Σ S_i| below this [m²] is treated as a zero-area polygon.
  double degeneracy_floor = 1e-6;

  /// Throws InvalidArgument unless both bounds and the floor are positive
  /// and finite and lambda0, if set, is finite.
  void validate() const;
};

struct CentroidDiagnostics {
  std::size_t strip_count = 0;       ///< strips summed (oracle: interior cells)
  std::size_t input_vertices = 0;
  std::size_t inserted_vertices = 0;  ///< added by densification
  std::size_t rings_reoriented = 0;
  double lambda0 = 0.0;               ///< reference meridian used [rad]
  bool lambda0_auto = false;
  int input_orientation_sign = 0;     ///< sign of Σ S_i before normalization
  int sum_sign = 0;                   ///< sign of Σ S_i after normalization
};

struct CentroidResult {
  double area = 0.0;           ///< |Σ S_i| [m²]
  Cartesian3 g_xyz;            ///< centre of gravity in space
  GeodeticCoord centre;        ///< g_xyz projected onto the spheroid
  CentroidDiagnostics diagnostics;
};

/// Component-wise arithmetic mean of two consecutive (unwrapped) vertices.
GeodeticCoord midpoint(const GeodeticCoord& p, const GeodeticCoord& q) noexcept;

/// sin(θ)/θ, with the limit 1 at θ = 0. Below |θ| = 1e-6 the Taylor
/// polynomial 1 - θ²/6 + θ⁴/120 is used.
double sinc_like(double theta) noexcept;

/// Distance from the centre of a circle of radius r to the centre of
/// gravity of an arc subtending 2α: r · sin α / α.
double arc_centroid_distance(double r, double alpha) noexcept;

/// Strip for the segment p -> q with reference meridian lambda0.
StripContribution strip_contribution(const Ellipsoid& ell, const GeodeticCoord& p,
                                     const GeodeticCoord& q, double lambda0) noexcept;

/// Subdivide every segment of the closed ring (including last -> first) into
/// the fewest equal pieces in (λ, φ) that respect both bounds. Original
/// vertices are kept exactly; the closing vertex is not repeated.
std::vector<GeodeticCoord> densify_ring(std::span<const GeodeticCoord> ring,
                                        const CentroidConfig& cfg);

/// Running, order-dependent compensated accumulation of strips.
class StripAccumulator {
 public:
  void add(const StripContribution& strip) noexcept;
  double sum_s() const noexcept { return s_.value(); }
  std::size_t count() const noexcept { return count_; }

  /// Weighted centre Σ S_i G_i / Σ S_i. Throws DegeneratePolygon when
  /// |Σ S_i| < floor.
  Cartesian3 centre(double degeneracy_floor) const;

 private:
  CompensatedSum s_, sx_, sy_, sz_;
  std::size_t count_ = 0;
};

struct Accumulation {
  double sum_s = 0.0;  ///< signed total area [m²]
  Cartesian3 g;
};

/// Σ S_i and the S_i-weighted mean of the strip centres, summed in input
/// order. Throws DegeneratePolygon when |Σ S_i| < degeneracy_floor.
Accumulation accumulate(std::span<const StripContribution> strips,
                        double degeneracy_floor = 1e-6);

/// Area and centre of gravity of the polygon, and its projection onto the
/// spheroid.
///
/// Outer rings are reoriented to a positive signed area and holes to a
/// negative one, so input winding does not matter. Throws DegeneratePolygon
/// for a zero-area ring or polygon, ComputationError when the centre of
/// gravity lies on the rotation axis.
CentroidResult polygon_centroid(const Ellipsoid& ell, const EllipsoidalPolygon& poly,
                                const CentroidConfig& cfg = {});

}  // namespace geocentre
