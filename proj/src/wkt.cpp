// SPDX-License-Identifier: Apache-2.0
#include <cctype>
#include <charconv>
#include <string>

#include "geocentre/io.hpp"
#include "polygon_builder.hpp"

namespace geocentre {

namespace {

using detail::DegreePart;
using detail::DegreeRing;

// Recursive-descent reader for the POLYGON / MULTIPOLYGON subset of WKT.
class WktReader {
 public:
  explicit WktReader(std::string_view text) : text_(text) {}

  std::vector<DegreePart> read() {
    skip_space();
    if (starts_with_ci("SRID=")) {
      const auto semi = text_.find(';', pos_);
      if (semi == std::string_view::npos) fail("expected ';' after SRID");
      pos_ = semi + 1;
    }
    const std::string keyword = read_word();
    std::vector<DegreePart> parts;
    if (keyword == "POLYGON") {
      skip_dimension();
      if (!read_empty()) parts.push_back(read_polygon());
    } else if (keyword == "MULTIPOLYGON") {
      skip_dimension();
      if (!read_empty()) {
        expect('(');
        do {
          parts.push_back(read_polygon());
        } while (accept(','));
        expect(')');
      }
    } else if (keyword.empty()) {
      fail("expected a WKT geometry keyword");
    } else {
      throw InputError("unsupported WKT geometry type " + keyword +
                       "; expected POLYGON or MULTIPOLYGON");
    }
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == ';') ++pos_, skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing characters");
    return parts;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    detail::throw_parse_error(text_, pos_, "malformed WKT: " + message);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool starts_with_ci(std::string_view prefix) const {
    if (text_.size() - pos_ < prefix.size()) return false;
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      if (std::toupper(static_cast<unsigned char>(text_[pos_ + i])) != prefix[i]) return false;
    }
    return true;
  }

  std::string read_word() {
    skip_space();
    std::string word;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      word.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(text_[pos_]))));
      ++pos_;
    }
    return word;
  }

  // Optional Z / M / ZM tag; extra ordinates are read and ignored.
  void skip_dimension() {
    skip_space();
    const std::size_t save = pos_;
    const std::string tag = read_word();
    if (tag == "Z" || tag == "M" || tag == "ZM") return;
    if (tag == "EMPTY") {
      pos_ = save;
      return;
    }
    if (!tag.empty()) fail("unexpected token " + tag);
  }

  bool read_empty() {
    skip_space();
    const std::size_t save = pos_;
    if (read_word() == "EMPTY") return true;
    pos_ = save;
    return false;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool at_number() {
    skip_space();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '.';
  }

  double read_number() {
    skip_space();
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    if (first != last && *first == '+') ++first, ++pos_;
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc()) fail("expected a number");
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }

  DegreeRing read_ring() {
    expect('(');
    DegreeRing ring;
    do {
      const double lon = read_number();
      const double lat = read_number();
      while (at_number()) read_number();
      ring.push_back({lon, lat});
    } while (accept(','));
    expect(')');
    return ring;
  }

  DegreePart read_polygon() {
    expect('(');
    DegreePart part;
    do {
      part.push_back(read_ring());
    } while (accept(','));
    expect(')');
    return part;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

EllipsoidalPolygon parse_wkt(std::string_view text) {
  return detail::build_polygon(WktReader(text).read());
}

InputFormat format_from_path(std::string_view path) {
  const auto dot = path.rfind('.');
  if (dot == std::string_view::npos) return InputFormat::automatic;
  std::string ext;
  for (char c : path.substr(dot + 1)) {
    ext.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  if (ext == "json" || ext == "geojson") return InputFormat::geojson;
  if (ext == "wkt" || ext == "txt") return InputFormat::wkt;
  return InputFormat::automatic;
}

EllipsoidalPolygon parse_polygon_file(std::string_view bytes, InputFormat hint) {
  if (hint == InputFormat::automatic) {
    std::size_t i = 0;
    if (bytes.substr(0, 3) == "\xEF\xBB\xBF") i = 3;
    while (i < bytes.size() && std::isspace(static_cast<unsigned char>(bytes[i]))) ++i;
    hint = (i < bytes.size() && bytes[i] == '{') ? InputFormat::geojson : InputFormat::wkt;
  }
  return hint == InputFormat::geojson ? parse_geojson(bytes) : parse_wkt(bytes);
}

}  // namespace geocentre
