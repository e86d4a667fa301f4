#pragma once

#include <Eigen/Core>

#include <optional>
#include <variant>
#include <vector>

namespace dplab {

using Point2 = Eigen::Vector2d;

namespace geometry {

// Angular profile phi(r) of a monotone curve, stored piecewise so that
// thresholds can use exact derivatives for the built-in shapes.
struct ConstantPhi {
  double value = 0.0;
};

struct LinearPhi {
  double slope = 0.0;   // radians per length
  double offset = 0.0;  // radians
};

// Piecewise-linear interpolation of both phi and phi'. Outside the breakpoint
// range the nearest segment is extended linearly.
struct TabulatedPhi {
  std::vector<double> r;     // strictly increasing
  std::vector<double> phi;
  std::vector<double> dphi;
};

using PhiProfile = std::variant<ConstantPhi, LinearPhi, TabulatedPhi>;

// Non-closed curve r -> origin + (r cos phi(r), r sin phi(r)), r in (0, R).
// Immutable after construction; R may be +infinity.
class MonotoneCurve {
 public:
  MonotoneCurve(Point2 origin, double extent, PhiProfile phi);

  const Point2& origin() const { return origin_; }
  double extent() const { return extent_; }
  bool has_finite_extent() const;
  const PhiProfile& profile() const { return phi_; }

  double phi(double r) const;
  // Right-limit convention at tabulated breakpoints.
  double phi_derivative(double r) const;

  static MonotoneCurve interval(double length, Point2 origin = Point2::Zero());
  static MonotoneCurve spiral(double slope, double extent,
                              Point2 origin = Point2::Zero());

 private:
  Point2 origin_;
  double extent_;
  PhiProfile phi_;
};

// Ordered vertex chain with a cumulative arc-length table.
class PolylineCurve {
 public:
  static PolylineCurve from_vertices(std::vector<Point2> vertices);

  const std::vector<Point2>& vertices() const { return vertices_; }
  const std::vector<double>& cumulative_length() const { return cumulative_; }
  double length() const { return cumulative_.back(); }
  std::size_t size() const { return vertices_.size(); }

  // Pairwise test that no two non-adjacent segments intersect. O(n^2); meant
  // for input validation and tests, not hot loops.
  bool is_simple(double tol = 1e-12) const;

 private:
  PolylineCurve() = default;
  std::vector<Point2> vertices_;
  std::vector<double> cumulative_;
};

Point2 monotone_point(const MonotoneCurve& curve, double r);

// Arc-length element j(r) = sqrt(1 + (r phi'(r))^2) >= 1.
double arc_element(const MonotoneCurve& curve, double r);

// n vertices at radii r_k = R k/(n+1), k = 1..n. Infinite curves need an
// explicit truncation radius.
PolylineCurve sample_polyline(const MonotoneCurve& curve, int n,
                              std::optional<double> truncation = std::nullopt);

// Discrete monotonicity proxy: |v_k - x0| strictly increasing.
bool is_monotone_from(const PolylineCurve& poly, const Point2& x0);

}  // namespace geometry
}  // namespace dplab
