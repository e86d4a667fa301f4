#pragma once

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "dplab/geometry.hpp"
#include "dplab/moebius.hpp"
#include "dplab/solver2d.hpp"

namespace dplab::cli {

// Config problems exit with code 2 and name the offending field.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

struct CurveConfig {
  enum class Kind { kInterval, kMonotone, kArc } kind = Kind::kInterval;
  double length = 1.0;  // interval
  Point2 origin = Point2::Zero();
  double extent = 1.0;
  geometry::PhiProfile phi = geometry::ConstantPhi{0.0};  // monotone
  double radius = 1.0;  // arc
  double eps = 1.5707963267948966;
  int samples = 2001;

  geometry::MonotoneCurve monotone_curve() const;  // interval/monotone only
  geometry::PolylineCurve arc_polyline() const;    // arc only
};

struct LftSpec {
  std::complex<double> a{1, 0}, b{0, 0}, c{0, 0}, d{1, 0};
  moebius::Moebius map() const { return {a, b, c, d}; }
};

struct ThresholdConfig {
  CurveConfig curve;
  std::optional<LftSpec> lft;  // defaults to z -> 1/z for arcs
  std::optional<double> omega;
  int samples = 64;
};

struct Loop1dConfig {
  double d = 1.0;
  double omega = 0.0;
  int fe_cells = 2048;
  int k = 2;
};

struct LftConfig {
  CurveConfig curve;  // the physical curve Lambda
  LftSpec lft;
  std::optional<double> omega;
};

struct Solve2dConfig {
  solver2d::Box box{-3, 4, -3, 3};
  double h = 1.0 / 32;
  CurveConfig curve;  // interval => direct crack; arc => LFT transport
  std::optional<LftSpec> lft;
  double omega = 0.0;
  int k = 1;
  double eig_tol = 1e-8;
  double verdict_tol = 1e-6;
};

struct CriticalConfig {
  double length = 1.0;
  solver2d::Box box{-3, 4, -3, 3};
  double h = 1.0 / 32;
  double tol_omega = 0.05;
};

nlohmann::ordered_json load_config_file(const std::string& path);

ThresholdConfig parse_threshold_config(const nlohmann::ordered_json& j);
Loop1dConfig parse_loop1d_config(const nlohmann::ordered_json& j);
LftConfig parse_lft_config(const nlohmann::ordered_json& j);
Solve2dConfig parse_solve2d_config(const nlohmann::ordered_json& j);
CriticalConfig parse_critical_config(const nlohmann::ordered_json& j);

}  // namespace dplab::cli
