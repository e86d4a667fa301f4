#include "dplab/cli/config.hpp"

#include <cmath>
#include <fstream>

namespace dplab::cli {

namespace {

using nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ConfigError("config field '" + path + "': " + what);
}

const ordered_json& member(const ordered_json& j, const std::string& key,
                           const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path + "." + key, "missing");
  return *it;
}

double number(const ordered_json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  double v = j.get<double>();
  if (!std::isfinite(v)) fail(path, "must be finite");
  return v;
}

double positive(const ordered_json& j, const std::string& path) {
  double v = number(j, path);
  if (!(v > 0.0)) fail(path, "must be positive");
  return v;
}

int count(const ordered_json& j, const std::string& path, int lo, int hi) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  long long v = j.get<long long>();
  if (v < lo || v > hi)
    fail(path, "must be in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return static_cast<int>(v);
}

std::vector<double> number_list(const ordered_json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of numbers");
  std::vector<double> out;
  for (const auto& e : j) out.push_back(number(e, path + "[]"));
  return out;
}

std::complex<double> complex_pair(const ordered_json& j, const std::string& path) {
  std::vector<double> v = number_list(j, path);
  if (v.size() != 2) fail(path, "expected [re, im]");
  return {v[0], v[1]};
}

CurveConfig parse_curve(const ordered_json& j, const std::string& path) {
  CurveConfig c;
  std::string kind = member(j, "kind", path).get<std::string>();
  if (kind == "interval") {
    c.kind = CurveConfig::Kind::kInterval;
    c.length = positive(member(j, "length", path), path + ".length");
    c.extent = c.length;
  } else if (kind == "monotone") {
    c.kind = CurveConfig::Kind::kMonotone;
    if (j.contains("origin")) {
      auto o = number_list(j["origin"], path + ".origin");
      if (o.size() != 2) fail(path + ".origin", "expected [x, y]");
      c.origin = Point2(o[0], o[1]);
    }
    c.extent = positive(member(j, "extent", path), path + ".extent");
    const ordered_json& phi = member(j, "phi", path);
    std::string type = member(phi, "type", path + ".phi").get<std::string>();
    if (type == "constant") {
      c.phi = geometry::ConstantPhi{number(member(phi, "value", path + ".phi"),
                                           path + ".phi.value")};
    } else if (type == "linear") {
      geometry::LinearPhi lin;
      lin.slope = number(member(phi, "slope", path + ".phi"), path + ".phi.slope");
      if (phi.contains("offset"))
        lin.offset = number(phi["offset"], path + ".phi.offset");
      c.phi = lin;
    } else if (type == "tabulated") {
      geometry::TabulatedPhi tab;
      tab.r = number_list(member(phi, "r", path + ".phi"), path + ".phi.r");
      tab.phi = number_list(member(phi, "phi", path + ".phi"), path + ".phi.phi");
      tab.dphi = number_list(member(phi, "dphi", path + ".phi"), path + ".phi.dphi");
      c.phi = std::move(tab);
    } else {
      fail(path + ".phi.type", "expected constant | linear | tabulated");
    }
  } else if (kind == "arc") {
    c.kind = CurveConfig::Kind::kArc;
    c.radius = positive(member(j, "radius", path), path + ".radius");
    c.eps = number(member(j, "epsilon", path), path + ".epsilon");
    if (!(c.eps > 0.0) || !(c.eps < 3.14159265358979323846))
      fail(path + ".epsilon", "must lie in (0, pi)");
    if (j.contains("samples"))
      c.samples = count(j["samples"], path + ".samples", 16, 2000000);
  } else {
    fail(path + ".kind", "expected interval | monotone | arc");
  }
  return c;
}

LftSpec parse_lft(const ordered_json& j, const std::string& path) {
  LftSpec spec;
  spec.a = complex_pair(member(j, "a", path), path + ".a");
  spec.b = complex_pair(member(j, "b", path), path + ".b");
  spec.c = complex_pair(member(j, "c", path), path + ".c");
  spec.d = complex_pair(member(j, "d", path), path + ".d");
  try {
    (void)spec.map();
  } catch (const std::invalid_argument& e) {
    fail(path, e.what());
  }
  return spec;
}

solver2d::Box parse_box(const ordered_json& j, const std::string& path) {
  std::vector<double> v = number_list(j, path);
  if (v.size() != 4) fail(path, "expected [x_min, x_max, y_min, y_max]");
  if (!(v[0] < v[1]) || !(v[2] < v[3])) fail(path, "box sides must be ordered");
  return {v[0], v[1], v[2], v[3]};
}

}  // namespace

geometry::MonotoneCurve CurveConfig::monotone_curve() const {
  if (kind == Kind::kInterval) return geometry::MonotoneCurve::interval(length);
  if (kind == Kind::kMonotone)
    return geometry::MonotoneCurve(origin, extent, phi);
  throw ConfigError("curve: arcs have no direct monotone parametrization here");
}

geometry::PolylineCurve CurveConfig::arc_polyline() const {
  if (kind != Kind::kArc) throw ConfigError("curve: not an arc");
  constexpr double kPi = 3.14159265358979323846;
  std::vector<Point2> v;
  v.reserve(samples + 1);
  for (int i = 0; i <= samples; ++i) {
    double phi = eps + (2.0 * kPi - 2.0 * eps) * i / samples;
    v.emplace_back(radius * std::sin(phi), radius * (1.0 - std::cos(phi)));
  }
  return geometry::PolylineCurve::from_vertices(std::move(v));
}

nlohmann::ordered_json load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  try {
    return nlohmann::ordered_json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("config parse error: ") + e.what());
  }
}

ThresholdConfig parse_threshold_config(const ordered_json& j) {
  ThresholdConfig c;
  c.curve = parse_curve(member(j, "curve", "$"), "$.curve");
  if (j.contains("lft")) c.lft = parse_lft(j["lft"], "$.lft");
  if (j.contains("omega")) c.omega = number(j["omega"], "$.omega");
  if (j.contains("samples")) c.samples = count(j["samples"], "$.samples", 2, 100000);
  return c;
}

Loop1dConfig parse_loop1d_config(const ordered_json& j) {
  Loop1dConfig c;
  c.d = positive(member(j, "d", "$"), "$.d");
  c.omega = number(member(j, "omega", "$"), "$.omega");
  if (j.contains("fe_cells")) c.fe_cells = count(j["fe_cells"], "$.fe_cells", 16, 1000000);
  if (j.contains("k")) c.k = count(j["k"], "$.k", 1, 10);
  return c;
}

LftConfig parse_lft_config(const ordered_json& j) {
  LftConfig c;
  c.curve = parse_curve(member(j, "curve", "$"), "$.curve");
  if (j.contains("lft"))
    c.lft = parse_lft(j["lft"], "$.lft");
  else if (c.curve.kind == CurveConfig::Kind::kArc)
    c.lft = LftSpec{{0, 0}, {1, 0}, {1, 0}, {0, 0}};  // z -> 1/z
  else
    fail("$.lft", "missing (required unless the curve is an arc)");
  if (j.contains("omega")) c.omega = number(j["omega"], "$.omega");
  return c;
}

Solve2dConfig parse_solve2d_config(const ordered_json& j) {
  Solve2dConfig c;
  c.box = parse_box(member(j, "box", "$"), "$.box");
  c.h = positive(member(j, "h", "$"), "$.h");
  c.curve = parse_curve(member(j, "curve", "$"), "$.curve");
  if (j.contains("lft")) c.lft = parse_lft(j["lft"], "$.lft");
  c.omega = number(member(j, "omega", "$"), "$.omega");
  if (j.contains("k")) c.k = count(j["k"], "$.k", 1, 10);
  if (j.contains("eig_tol")) c.eig_tol = positive(j["eig_tol"], "$.eig_tol");
  if (j.contains("verdict_tol"))
    c.verdict_tol = positive(j["verdict_tol"], "$.verdict_tol");
  if (c.curve.kind == CurveConfig::Kind::kMonotone)
    fail("$.curve.kind", "solve2d supports interval or arc curves");
  return c;
}

CriticalConfig parse_critical_config(const ordered_json& j) {
  CriticalConfig c;
  c.length = positive(member(j, "length", "$"), "$.length");
  c.box = parse_box(member(j, "box", "$"), "$.box");
  c.h = positive(member(j, "h", "$"), "$.h");
  if (j.contains("tol_omega")) c.tol_omega = positive(j["tol_omega"], "$.tol_omega");
  return c;
}

}  // namespace dplab::cli
