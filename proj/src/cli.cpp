// SPDX-License-Identifier: Apache-2.0
#include "geocentre/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "geocentre/centroid.hpp"
#include "geocentre/error.hpp"
#include "geocentre/io.hpp"
#include "geocentre/oracle.hpp"
#include "geocentre/report.hpp"

namespace geocentre {

namespace {

constexpr double kDefaultSegmentBound = 1e-3;  // rad
constexpr double kDefaultGridStep = 5e-4;      // rad

struct RunConfig {
  std::string ellipsoid = "hayford";
  std::optional<double> a;
  std::optional<double> inv_f;
  std::string lambda0 = "auto";
  std::optional<double> max_dphi_deg;
  std::optional<double> max_dlambda_deg;
  bool oracle = false;
  std::optional<double> grid_step_deg;
  std::string format = "text";
  std::string input_format = "auto";
  std::string emit_geojson;
  std::string input = "-";
};

std::string read_input(const RunConfig& rc, std::istream& in) {
  if (rc.input == "-") {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }
  std::ifstream file(rc.input, std::ios::binary);
  if (!file) throw InputError("cannot open input file '" + rc.input + "'");
  std::ostringstream buf;
  buf << file.rdbuf();
  if (file.bad()) throw InputError("error reading input file '" + rc.input + "'");
  return buf.str();
}

InputFormat input_format(const RunConfig& rc) {
  if (rc.input_format == "geojson") return InputFormat::geojson;
  if (rc.input_format == "wkt") return InputFormat::wkt;
  return rc.input == "-" ? InputFormat::automatic : format_from_path(rc.input);
}

std::optional<double> parse_lambda0(const std::string& text) {
  if (text == "auto") return std::nullopt;
  double deg = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), deg);
  if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(deg)) {
    throw InvalidArgument("--lambda0 must be a number of degrees or 'auto', got '" + text + "'");
  }
  return deg_to_rad(deg);
}

double positive_degrees(const std::optional<double>& deg, double fallback_rad,
                        const char* flag) {
  if (!deg) return fallback_rad;
  if (!std::isfinite(*deg) || !(*deg > 0.0)) {
    throw InvalidArgument(std::string(flag) + " must be a positive number of degrees");
  }
  return deg_to_rad(*deg);
}

int run(const RunConfig& rc, std::istream& in, std::ostream& out) {
  std::string name = rc.ellipsoid;
  const Ellipsoid ell = [&] {
    if (rc.a || rc.inv_f) {
      name = "custom";
      return make_ellipsoid(rc.a.value(), rc.inv_f.value());
    }
    return Ellipsoid::preset(rc.ellipsoid);
  }();

  CentroidConfig cfg;
  cfg.lambda0 = parse_lambda0(rc.lambda0);
  cfg.max_dphi = positive_degrees(rc.max_dphi_deg, kDefaultSegmentBound, "--max-dphi");
  cfg.max_dlambda = positive_degrees(rc.max_dlambda_deg, kDefaultSegmentBound, "--max-dlambda");
  const double grid_step = positive_degrees(rc.grid_step_deg, kDefaultGridStep, "--grid-step");

  const std::string bytes = read_input(rc, in);
  const EllipsoidalPolygon poly = parse_polygon_file(bytes, input_format(rc));

  CentroidReport report{name, ell, cfg, polygon_centroid(ell, poly, cfg), std::nullopt};
  if (rc.oracle) {
    OracleComparison cmp;
    cmp.grid_step = grid_step;
    cmp.oracle = oracle_centroid(ell, poly, GridSpec::covering(poly, grid_step));
    cmp.separation_m = surface_separation(ell, report.result.centre, cmp.oracle.centre);
    cmp.area_delta_m2 = report.result.area - cmp.oracle.area;
    cmp.area_delta_rel = cmp.area_delta_m2 / cmp.oracle.area;
    report.oracle = cmp;
  }

  if (!rc.emit_geojson.empty()) {
    std::ofstream file(rc.emit_geojson, std::ios::binary);
    if (!file) throw InputError("cannot write GeoJSON output '" + rc.emit_geojson + "'");
    file << centre_feature_collection(poly, report).dump(2) << '\n';
    if (!file) throw InputError("error writing GeoJSON output '" + rc.emit_geojson + "'");
  }

  out << (rc.format == "json" ? render_json(report) : render_text(report));
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Area and centre of gravity of polygons on an oblate spheroid", "centroid"};
  RunConfig rc;
  auto* ellipsoid = app.add_option("--ellipsoid", rc.ellipsoid,
                                   "Reference ellipsoid preset: hayford, wgs84, unit-sphere")
                        ->capture_default_str();
  auto* a = app.add_option("--a", rc.a, "Custom equatorial radius [m]");
  auto* inv_f = app.add_option("--inv-f", rc.inv_f, "Custom inverse flattening (0 for a sphere)");
  a->needs(inv_f);
  inv_f->needs(a);
  a->excludes(ellipsoid);
  inv_f->excludes(ellipsoid);
  app.add_option("--lambda0", rc.lambda0, "Reference longitude [deg] or 'auto'")
      ->capture_default_str();
  app.add_option("--max-dphi", rc.max_dphi_deg,
                 "Largest latitude step per processed segment [deg] (default 1e-3 rad)");
  app.add_option("--max-dlambda", rc.max_dlambda_deg,
                 "Largest longitude step per processed segment [deg] (default 1e-3 rad)");
  app.add_flag("--oracle", rc.oracle, "Also run the grid-quadrature cross-check");
  app.add_option("--grid-step", rc.grid_step_deg, "Oracle grid step [deg] (default 5e-4 rad)");
  app.add_option("--format", rc.format, "Report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--input-format", rc.input_format, "Input format")
      ->check(CLI::IsMember({"auto", "geojson", "wkt"}))
      ->capture_default_str();
  app.add_option("--emit-geojson", rc.emit_geojson,
                 "Write a FeatureCollection of the polygon and its centre to this path");
  app.add_option("input", rc.input, "GeoJSON or WKT file; '-' or absent reads standard input");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "centroid: " << e.what() << "\n" << "Run with --help for usage.\n";
    return kExitInput;
  }

  try {
    return run(rc, in, out);
  } catch (const InputError& e) {
    err << "centroid: " << e.what() << "\n";
    return kExitInput;
  } catch (const InvalidArgument& e) {
    err << "centroid: " << e.what() << "\n";
    return kExitInput;
  } catch (const DegeneratePolygon& e) {
    err << "centroid: degenerate polygon: " << e.what() << "\n";
    return kExitDegenerate;
  } catch (const ComputationError& e) {
    err << "centroid: " << e.what() << "\n";
    return kExitDegenerate;
  }
}

}  // namespace geocentre
