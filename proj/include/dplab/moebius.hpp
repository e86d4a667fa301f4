#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "dplab/geometry.hpp"

namespace dplab::moebius {

using Complex = std::complex<double>;

// Point of the extended complex plane (Riemann sphere).
class ExtComplex {
 public:
  ExtComplex(Complex value) : value_(value), infinite_(false) {}  // NOLINT(implicit)
  ExtComplex(double re, double im) : ExtComplex(Complex(re, im)) {}
  static ExtComplex infinity() { return ExtComplex(); }

  bool is_infinity() const { return infinite_; }
  Complex value() const;

 private:
  ExtComplex() : value_(0.0, 0.0), infinite_(true) {}
  Complex value_;
  bool infinite_;
};

// Linear fractional transformation z -> (az + b)/(cz + d), ad - bc != 0.
// Coefficients are normalized so max(|a|,|b|,|c|,|d|) = 1.
class Moebius {
 public:
  Moebius(Complex a, Complex b, Complex c, Complex d);

  Complex a() const { return a_; }
  Complex b() const { return b_; }
  Complex c() const { return c_; }
  Complex d() const { return d_; }

  bool has_pole() const { return c_ != Complex(0.0, 0.0); }
  Complex pole() const;  // M(pole) = infinity

  static Moebius identity() { return Moebius(1, 0, 0, 1); }
  static Moebius inversion() { return Moebius(0, 1, 1, 0); }  // z -> 1/z

 private:
  Complex a_, b_, c_, d_;
};

// Total on the extended plane, including both special points.
ExtComplex apply(const Moebius& m, const ExtComplex& z);

Moebius inverse(const Moebius& m);

// compose(m1, m2)(z) = m1(m2(z)).
Moebius compose(const Moebius& m1, const Moebius& m2);

// Area-distortion factor |M'(z)|^2 = |ad-bc|^2 / |cz+d|^4 at a finite z away
// from the pole.
double jacobian(const Moebius& m, Complex z);

// Vertex-wise image with a recomputed arc-length table. Every vertex must be
// farther than pole_tol from the pole of m.
geometry::PolylineCurve map_polyline(const Moebius& m,
                                     const geometry::PolylineCurve& poly,
                                     double pole_tol = 1e-9);

// Strength transport onto the preimage curve Gamma (vertices gamma_i):
// w_i = omega(M(gamma_i)) * sqrt(J_M(gamma_i)), tabulated along gamma's arc
// length (one value per vertex).
std::vector<double> pullback_strength(
    const Moebius& m, const geometry::PolylineCurve& gamma,
    const std::function<double(const Point2&)>& omega_on_lambda,
    double pole_tol = 1e-9);

// Residual of |grad(u o M)(z)|^2 = |grad u (M(z))|^2 J_M(z) with both
// gradients taken by central differences of step h. O(h^2) for smooth u.
double gradient_identity_residual(const Moebius& m,
                                  const std::function<double(const Point2&)>& u,
                                  Complex z, double h);

}  // namespace dplab::moebius
