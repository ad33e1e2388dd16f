// SPDX-License-Identifier: Apache-2.0
#include "polygon_builder.hpp"

#include <cmath>

#include "geocentre/geodesy.hpp"

namespace geocentre::detail {

EllipsoidalPolygon build_polygon(const std::vector<DegreePart>& parts) {
  std::vector<Ring> rings;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    for (std::size_t r = 0; r < parts[p].size(); ++r) {
      DegreeRing ring = parts[p][r];
      const std::string where =
          "polygon " + std::to_string(p) + ", ring " + std::to_string(r);
      if (ring.size() > 1 && ring.front().lon == ring.back().lon &&
          ring.front().lat == ring.back().lat) {
        ring.pop_back();
      }
      if (ring.size() < 3) {
        throw InputError(where + " has fewer than 3 vertices");
      }
      Ring out;
      out.role = r == 0 ? RingRole::outer : RingRole::hole;
      out.vertices.reserve(ring.size());
      for (const auto& v : ring) {
        if (!std::isfinite(v.lon) || !std::isfinite(v.lat)) {
          throw InputError(where + " has a non-finite coordinate");
        }
        if (v.lat < -90.0 || v.lat > 90.0) {
          throw InputError(where + " has latitude " + std::to_string(v.lat) +
                           " outside [-90, 90]; coordinates must be longitude first");
        }
        out.vertices.push_back({deg_to_rad(v.lon), deg_to_rad(v.lat)});
      }
      rings.push_back(std::move(out));
    }
  }
  if (rings.empty()) throw InputError("input contains no polygon");
  try {
    return EllipsoidalPolygon(std::move(rings));
  } catch (const InvalidArgument& e) {
    throw InputError(e.what());
  }
}

TextPosition position_of(std::string_view text, std::size_t offset) noexcept {
  TextPosition pos{1, 1};
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++pos.line;
      pos.column = 1;
    } else {
      ++pos.column;
    }
  }
  return pos;
}

void throw_parse_error(std::string_view text, std::size_t offset, const std::string& message) {
  const auto pos = position_of(text, offset);
  throw ParseError(message + " (line " + std::to_string(pos.line) + ", column " +
                       std::to_string(pos.column) + ")",
                   offset, pos.line, pos.column);
}

}  // namespace geocentre::detail
