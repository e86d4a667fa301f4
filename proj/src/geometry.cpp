#include "dplab/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace dplab::geometry {

namespace {

void require(bool cond, const char* what) {
  if (!cond) throw std::invalid_argument(what);
}

// Index of the segment [r_i, r_{i+1}) containing r; clamped at the ends so
// evaluation extrapolates from the nearest segment. At a breakpoint the right
// segment is chosen (right-limit convention).
std::size_t segment_index(const std::vector<double>& r, double x) {
  if (x < r.front()) return 0;
  auto it = std::upper_bound(r.begin(), r.end(), x);
  std::size_t i = static_cast<std::size_t>(it - r.begin());
  if (i == 0) return 0;
  if (i >= r.size()) return r.size() - 2;
  return i - 1;
}

double interp(const std::vector<double>& r, const std::vector<double>& v, double x) {
  if (r.size() == 1) return v.front();
  std::size_t i = segment_index(r, x);
  double t = (x - r[i]) / (r[i + 1] - r[i]);
  return v[i] + t * (v[i + 1] - v[i]);
}

}  // namespace

MonotoneCurve::MonotoneCurve(Point2 origin, double extent, PhiProfile phi)
    : origin_(std::move(origin)), extent_(extent), phi_(std::move(phi)) {
  require(origin_.allFinite(), "MonotoneCurve: origin must be finite");
  require(extent_ > 0.0, "MonotoneCurve: extent must be positive");
  if (const auto* tab = std::get_if<TabulatedPhi>(&phi_)) {
    require(tab->r.size() >= 2, "TabulatedPhi: need at least two breakpoints");
    require(tab->r.size() == tab->phi.size() && tab->r.size() == tab->dphi.size(),
            "TabulatedPhi: column lengths differ");
    require(tab->r.front() > 0.0 && tab->r.back() < extent_,
            "TabulatedPhi: breakpoints must lie inside (0, extent)");
    for (std::size_t i = 0; i + 1 < tab->r.size(); ++i)
      require(tab->r[i] < tab->r[i + 1], "TabulatedPhi: breakpoints must increase");
    for (double v : tab->phi)
      require(std::isfinite(v), "TabulatedPhi: phi values must be finite");
    for (double v : tab->dphi)
      require(std::isfinite(v), "TabulatedPhi: phi' values must be finite");
  }
}

bool MonotoneCurve::has_finite_extent() const { return std::isfinite(extent_); }

double MonotoneCurve::phi(double r) const {
  return std::visit(
      [r](const auto& p) -> double {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, ConstantPhi>) {
          return p.value;
        } else if constexpr (std::is_same_v<T, LinearPhi>) {
          return p.slope * r + p.offset;
        } else {
          return interp(p.r, p.phi, r);
        }
      },
      phi_);
}

double MonotoneCurve::phi_derivative(double r) const {
  return std::visit(
      [r](const auto& p) -> double {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, ConstantPhi>) {
          (void)r;
          return 0.0;
        } else if constexpr (std::is_same_v<T, LinearPhi>) {
          return p.slope;
        } else {
          return interp(p.r, p.dphi, r);
        }
      },
      phi_);
}

MonotoneCurve MonotoneCurve::interval(double length, Point2 origin) {
  return MonotoneCurve(std::move(origin), length, ConstantPhi{0.0});
}

MonotoneCurve MonotoneCurve::spiral(double slope, double extent, Point2 origin) {
  return MonotoneCurve(std::move(origin), extent, LinearPhi{slope, 0.0});
}

PolylineCurve PolylineCurve::from_vertices(std::vector<Point2> vertices) {
  if (vertices.size() < 2)
    throw std::invalid_argument("PolylineCurve: need at least two vertices");
  PolylineCurve poly;
  poly.cumulative_.resize(vertices.size());
  poly.cumulative_[0] = 0.0;
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
    double seg = (vertices[i + 1] - vertices[i]).norm();
    if (!(seg > 0.0))
      throw std::invalid_argument("PolylineCurve: consecutive vertices coincide");
    poly.cumulative_[i + 1] = poly.cumulative_[i] + seg;
  }
  poly.vertices_ = std::move(vertices);
  return poly;
}

namespace {

// Segment-segment proximity: returns the minimum distance between closed
// segments ab and cd.
double segment_distance(const Point2& a, const Point2& b, const Point2& c,
                        const Point2& d) {
  auto point_to_segment = [](const Point2& p, const Point2& u, const Point2& v) {
    Point2 uv = v - u;
    double len2 = uv.squaredNorm();
    double t = len2 > 0 ? std::clamp((p - u).dot(uv) / len2, 0.0, 1.0) : 0.0;
    return (p - (u + t * uv)).norm();
  };
  Point2 r = b - a, s = d - c;
  double denom = r.x() * s.y() - r.y() * s.x();
  Point2 ca = c - a;
  if (std::abs(denom) > 0) {
    double t = (ca.x() * s.y() - ca.y() * s.x()) / denom;
    double u = (ca.x() * r.y() - ca.y() * r.x()) / denom;
    if (t >= 0 && t <= 1 && u >= 0 && u <= 1) return 0.0;  // proper crossing
  }
  return std::min(std::min(point_to_segment(a, c, d), point_to_segment(b, c, d)),
                  std::min(point_to_segment(c, a, b), point_to_segment(d, a, b)));
}

}  // namespace

bool PolylineCurve::is_simple(double tol) const {
  const std::size_t nseg = vertices_.size() - 1;
  for (std::size_t i = 0; i < nseg; ++i) {
    for (std::size_t j = i + 2; j < nseg; ++j) {
      double dist = segment_distance(vertices_[i], vertices_[i + 1], vertices_[j],
                                     vertices_[j + 1]);
      if (dist <= tol) return false;
    }
  }
  return true;
}

Point2 monotone_point(const MonotoneCurve& curve, double r) {
  if (!(r > 0.0) || !(r < curve.extent()))
    throw std::domain_error("monotone_point: r outside (0, extent)");
  double a = curve.phi(r);
  return curve.origin() + Point2(r * std::cos(a), r * std::sin(a));
}

double arc_element(const MonotoneCurve& curve, double r) {
  if (!(r > 0.0) || !(r < curve.extent()))
    throw std::domain_error("arc_element: r outside (0, extent)");
  double rp = r * curve.phi_derivative(r);
  return std::sqrt(1.0 + rp * rp);
}

PolylineCurve sample_polyline(const MonotoneCurve& curve, int n,
                              std::optional<double> truncation) {
  if (n < 2) throw std::invalid_argument("sample_polyline: need n >= 2");
  double radius = curve.extent();
  if (!curve.has_finite_extent()) {
    if (!truncation)
      throw std::invalid_argument(
          "sample_polyline: infinite curve requires a truncation radius");
    radius = *truncation;
  } else if (truncation) {
    radius = std::min(radius, *truncation);
  }
  if (!(radius > 0.0) || !std::isfinite(radius))
    throw std::invalid_argument("sample_polyline: invalid truncation radius");

  std::vector<Point2> verts;
  verts.reserve(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    double r = radius * static_cast<double>(k) / (n + 1);
    verts.push_back(monotone_point(curve, r));
  }
  return PolylineCurve::from_vertices(std::move(verts));
}

bool is_monotone_from(const PolylineCurve& poly, const Point2& x0) {
  double prev = -std::numeric_limits<double>::infinity();
  for (const Point2& v : poly.vertices()) {
    double r = (v - x0).norm();
    if (!(r > prev)) return false;
    prev = r;
  }
  return true;
}

}  // namespace dplab::geometry
