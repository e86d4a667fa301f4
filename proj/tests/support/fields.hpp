#pragma once

// Seeded jump test fields in curve-adapted polar coordinates, shared between
// the unit and acceptance suites. The wrap line psi = 0 (== 2 pi) lies on the
// curve, so the jump is a(r) with smooth amplitude a vanishing at the origin.

#include <cmath>
#include <functional>
#include <numbers>

#include "dplab/geometry.hpp"
#include "dplab/solver2d.hpp"
#include "dplab/util/rng.hpp"

namespace dplab::testsupport {

struct SeededJumpField {
  solver2d::JumpTestField field;
  // Side-aware Cartesian evaluation for mesh interpolation; side > 0 forces
  // the upper face (psi = 0), side < 0 the lower face (psi = 2 pi).
  std::function<double(const Point2&, int)> value_at;
};

// confined = true keeps the jump amplitude compactly supported inside the
// curve (vanishing C^1 at the far endpoint) and tightens the background, so
// the field is representable on a crack mesh whose slit is exactly the curve.
inline SeededJumpField make_seeded_field(const geometry::MonotoneCurve& curve,
                                         std::uint64_t seed,
                                         double amplitude = 1.0,
                                         bool confined = false) {
  constexpr double kPi = std::numbers::pi;
  const double extent = curve.extent();
  CounterRng rng(seed);

  const double c0 = 1.0 + rng.uniform(-0.5, 0.5);
  const double c1 = rng.uniform(-0.5, 0.5);
  const double c2 = rng.uniform(-0.5, 0.5);
  const double b1 = rng.uniform(-0.15, 0.15);
  const double b2 = rng.uniform(-0.15, 0.15);
  const double beta = rng.uniform(-0.5, 0.5);
  const double spread = confined ? 0.2 : 0.4;
  const double cx = rng.uniform(-spread, spread) * extent;
  const double cy = rng.uniform(-spread, spread) * extent;
  const double sigma =
      (confined ? rng.uniform(0.35, 0.5) : rng.uniform(0.4, 0.8)) * extent;

  auto amp = [=](double r) {
    double rho = r / extent;
    if (confined) {
      if (rho >= 1.0) return 0.0;
      double cut = (1.0 - rho) * (1.0 - rho);
      return amplitude * rho * cut * (c0 + c1 * rho + c2 * rho * rho);
    }
    return amplitude * rho * (c0 + c1 * rho + c2 * rho * rho);
  };
  auto amp_d = [=](double r) {
    double rho = r / extent;
    if (confined) {
      if (rho >= 1.0) return 0.0;
      double poly = rho * (c0 + c1 * rho + c2 * rho * rho);
      double poly_d = c0 + 2.0 * c1 * rho + 3.0 * c2 * rho * rho;
      double cut = (1.0 - rho) * (1.0 - rho);
      double cut_d = -2.0 * (1.0 - rho);
      return amplitude / extent * (poly_d * cut + poly * cut_d);
    }
    return amplitude / extent * (c0 + 2.0 * c1 * rho + 3.0 * c2 * rho * rho);
  };
  auto w = [=](double psi) {
    return psi / (2.0 * kPi) + b1 * std::sin(psi) + b2 * std::sin(2.0 * psi);
  };
  auto w_d = [=](double psi) {
    return 1.0 / (2.0 * kPi) + b1 * std::cos(psi) + 2.0 * b2 * std::cos(2.0 * psi);
  };
  auto bg = [=](double x, double y) {
    double q = ((x - cx) * (x - cx) + (y - cy) * (y - cy)) / (sigma * sigma);
    return beta * std::exp(-q);
  };
  auto bg_grad = [=](double x, double y) {
    double q = ((x - cx) * (x - cx) + (y - cy) * (y - cy)) / (sigma * sigma);
    double e = beta * std::exp(-q);
    return Point2(-2.0 * (x - cx) / (sigma * sigma) * e,
                  -2.0 * (y - cy) / (sigma * sigma) * e);
  };

  // theta = psi + phi(r); the curve sits on the wrap line psi = 0.
  auto phi_of = [&curve](double r) { return curve.phi(r); };
  auto dphi_of = [&curve](double r) { return curve.phi_derivative(r); };

  SeededJumpField out;
  out.field.du_dr = [=](double r, double psi) {
    double theta = psi + phi_of(r);
    double ct = std::cos(theta), st = std::sin(theta);
    double dp = dphi_of(r);
    Point2 gb = bg_grad(r * ct, r * st);
    double bterm = gb.x() * (ct - r * st * dp) + gb.y() * (st + r * ct * dp);
    return bterm + amp_d(r) * w(psi);
  };
  out.field.du_dpsi = [=](double r, double psi) {
    double theta = psi + phi_of(r);
    double ct = std::cos(theta), st = std::sin(theta);
    Point2 gb = bg_grad(r * ct, r * st);
    double bterm = -gb.x() * r * st + gb.y() * r * ct;
    return bterm + amp(r) * w_d(psi);
  };
  out.field.jump = [=](double r) { return amp(r); };
  out.field.value = [=](double r, double psi) {
    double theta = psi + phi_of(r);
    return bg(r * std::cos(theta), r * std::sin(theta)) + amp(r) * w(psi);
  };

  out.value_at = [=](const Point2& p, int side) {
    double r = p.norm();
    if (r == 0.0) return bg(0.0, 0.0);
    double psi;
    if (side > 0) {
      psi = 0.0;
    } else if (side < 0) {
      psi = 2.0 * kPi;
    } else {
      psi = std::atan2(p.y(), p.x()) - phi_of(r);
      psi = std::fmod(psi, 2.0 * kPi);
      if (psi < 0.0) psi += 2.0 * kPi;
    }
    return bg(p.x(), p.y()) + amp(r) * w(psi);
  };
  return out;
}

}  // namespace dplab::testsupport
