// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "geocentre/error.hpp"
#include "geocentre/polygon.hpp"

namespace geocentre::detail {

struct DegreePoint {
  double lon;
  double lat;
};

using DegreeRing = std::vector<DegreePoint>;
/// Outer ring first, then holes.
using DegreePart = std::vector<DegreeRing>;

/// Converts parsed parts (degrees, possibly closed rings) to a polygon.
EllipsoidalPolygon build_polygon(const std::vector<DegreePart>& parts);

/// 1-based line and column of a byte offset.
struct TextPosition {
  std::size_t line;
  std::size_t column;
};
TextPosition position_of(std::string_view text, std::size_t offset) noexcept;

[[noreturn]] void throw_parse_error(std::string_view text, std::size_t offset,
                                    const std::string& message);

}  // namespace geocentre::detail
