#include "dplab/moebius.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dplab::moebius {

namespace {

Complex to_complex(const Point2& p) { return Complex(p.x(), p.y()); }
Point2 to_point(Complex z) { return Point2(z.real(), z.imag()); }

}  // namespace

Complex ExtComplex::value() const {
  if (infinite_) throw std::domain_error("ExtComplex: value() of infinity");
  return value_;
}

Moebius::Moebius(Complex a, Complex b, Complex c, Complex d)
    : a_(a), b_(b), c_(c), d_(d) {
  double scale = std::max(std::max(std::abs(a_), std::abs(b_)),
                          std::max(std::abs(c_), std::abs(d_)));
  if (!(scale > 0.0) || !std::isfinite(scale))
    throw std::invalid_argument("Moebius: coefficients must be finite, not all zero");
  a_ /= scale;
  b_ /= scale;
  c_ /= scale;
  d_ /= scale;
  if (std::abs(a_ * d_ - b_ * c_) <= 1e-14)
    throw std::invalid_argument("Moebius: degenerate map (ad - bc = 0)");
}

Complex Moebius::pole() const {
  if (!has_pole()) throw std::domain_error("Moebius: affine map has no finite pole");
  return -d_ / c_;
}

ExtComplex apply(const Moebius& m, const ExtComplex& z) {
  if (!m.has_pole()) {
    if (z.is_infinity()) return ExtComplex::infinity();
    return (m.a() / m.d()) * z.value() + m.b() / m.d();
  }
  if (z.is_infinity()) return m.a() / m.c();
  Complex w = z.value();
  Complex denom = m.c() * w + m.d();
  if (denom == Complex(0.0, 0.0)) return ExtComplex::infinity();
  return (m.a() * w + m.b()) / denom;
}

Moebius inverse(const Moebius& m) {
  return Moebius(m.d(), -m.b(), -m.c(), m.a());
}

Moebius compose(const Moebius& m1, const Moebius& m2) {
  return Moebius(m1.a() * m2.a() + m1.b() * m2.c(),
                 m1.a() * m2.b() + m1.b() * m2.d(),
                 m1.c() * m2.a() + m1.d() * m2.c(),
                 m1.c() * m2.b() + m1.d() * m2.d());
}

double jacobian(const Moebius& m, Complex z) {
  Complex denom = m.c() * z + m.d();
  double det = std::abs(m.a() * m.d() - m.b() * m.c());
  double dn = std::abs(denom);
  if (dn <= 1e-14 * det)
    throw std::domain_error("jacobian: evaluation at the pole of M");
  double ratio = det / (dn * dn);
  return ratio * ratio;
}

namespace {

void check_pole_distance(const Moebius& m, const geometry::PolylineCurve& poly,
                         double pole_tol, const char* who) {
  if (!m.has_pole()) return;
  Point2 pole = to_point(m.pole());
  for (const Point2& v : poly.vertices()) {
    if ((v - pole).norm() < pole_tol)
      throw std::domain_error(std::string(who) + ": polyline vertex at the pole of M");
  }
}

}  // namespace

geometry::PolylineCurve map_polyline(const Moebius& m,
                                     const geometry::PolylineCurve& poly,
                                     double pole_tol) {
  check_pole_distance(m, poly, pole_tol, "map_polyline");
  std::vector<Point2> image;
  image.reserve(poly.size());
  for (const Point2& v : poly.vertices()) {
    ExtComplex w = apply(m, ExtComplex(to_complex(v)));
    image.push_back(to_point(w.value()));
  }
  return geometry::PolylineCurve::from_vertices(std::move(image));
}

std::vector<double> pullback_strength(
    const Moebius& m, const geometry::PolylineCurve& gamma,
    const std::function<double(const Point2&)>& omega_on_lambda, double pole_tol) {
  check_pole_distance(m, gamma, pole_tol, "pullback_strength");
  std::vector<double> w;
  w.reserve(gamma.size());
  for (const Point2& g : gamma.vertices()) {
    Complex gz = to_complex(g);
    Point2 lambda = to_point(apply(m, ExtComplex(gz)).value());
    w.push_back(omega_on_lambda(lambda) * std::sqrt(jacobian(m, gz)));
  }
  return w;
}

double gradient_identity_residual(const Moebius& m,
                                  const std::function<double(const Point2&)>& u,
                                  Complex z, double h) {
  auto v = [&](const Point2& p) {
    return u(to_point(apply(m, ExtComplex(to_complex(p))).value()));
  };
  auto grad_sq = [h](auto&& f, const Point2& p) {
    double gx = (f(Point2(p.x() + h, p.y())) - f(Point2(p.x() - h, p.y()))) / (2 * h);
    double gy = (f(Point2(p.x(), p.y() + h)) - f(Point2(p.x(), p.y() - h))) / (2 * h);
    return gx * gx + gy * gy;
  };
  Point2 x = to_point(z);
  Point2 mx = to_point(apply(m, ExtComplex(z)).value());
  double lhs = grad_sq(v, x);
  double rhs = grad_sq(u, mx) * jacobian(m, z);
  return std::abs(lhs - rhs);
}

}  // namespace dplab::moebius
