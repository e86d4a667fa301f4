#include "dplab/thresholds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dplab::thresholds {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kGolden = 0.6180339887498949;  // (sqrt(5)-1)/2

// Golden-section maximization of f on [a, b] to relative width tol.
template <typename F>
double golden_max(F&& f, double a, double b, double rel_tol) {
  double x1 = b - kGolden * (b - a);
  double x2 = a + kGolden * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > rel_tol * std::max(1.0, std::abs(a) + std::abs(b))) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kGolden * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kGolden * (b - a);
      f1 = f(x1);
    }
  }
  return std::max(f(0.5 * (a + b)), std::max(f1, f2));
}

}  // namespace

double pointwise_bound(const geometry::MonotoneCurve& curve, double r) {
  if (!(r > 0.0) || !(r < curve.extent()))
    throw std::domain_error("pointwise_bound: r outside (0, extent)");
  return 1.0 / (2.0 * kPi * r * geometry::arc_element(curve, r));
}

double omega_star(const geometry::MonotoneCurve& curve) {
  if (!curve.has_finite_extent())
    throw std::invalid_argument("omega_star: curve must be bounded");
  const double R = curve.extent();

  // g(r) = r * j(r); the infimum of the bound is 1 / (2 pi sup g).
  auto g = [&](double r) {
    double rp = r * curve.phi_derivative(r);
    return r * std::sqrt(1.0 + rp * rp);
  };

  // For constant and linear profiles r * j(r) is strictly increasing, so the
  // infimum sits at r = R.
  if (!std::holds_alternative<geometry::TabulatedPhi>(curve.profile())) {
    double rp = R * curve.phi_derivative(R);
    return 1.0 / (2.0 * kPi * R * std::sqrt(1.0 + rp * rp));
  }

  // Grid search: log-uniform near zero plus uniform coverage, then local
  // golden-section refinement around every local maximum of g.
  const int n_log = 2000, n_uni = 8000;
  std::vector<double> grid;
  grid.reserve(n_log + n_uni + 1);
  for (int i = 0; i < n_log; ++i)
    grid.push_back(R * std::pow(10.0, -9.0 + 9.0 * i / (n_log - 1.0)));
  for (int i = 1; i <= n_uni; ++i) grid.push_back(R * i / (n_uni + 1.0));
  grid.push_back(R * (1.0 - 1e-12));
  std::sort(grid.begin(), grid.end());

  std::vector<double> vals(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) vals[i] = g(grid[i]);

  double best = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    bool local_max = (i == 0 || vals[i] >= vals[i - 1]) &&
                     (i + 1 == grid.size() || vals[i] >= vals[i + 1]);
    if (!local_max) continue;
    double lo = i > 0 ? grid[i - 1] : grid[i];
    double hi = i + 1 < grid.size() ? grid[i + 1] : grid[i];
    best = std::max(best, lo < hi ? golden_max(g, lo, hi, 1e-10) : vals[i]);
  }
  return 1.0 / (2.0 * kPi * best);
}

double sup_sqrt_jacobian(const moebius::Moebius& m,
                         const geometry::PolylineCurve& poly) {
  const auto& verts = poly.vertices();
  auto sqrt_j_at = [&](const Point2& p) {
    return std::sqrt(moebius::jacobian(m, {p.x(), p.y()}));
  };

  std::size_t best_idx = 0;
  double best = 0.0;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    double v = sqrt_j_at(verts[i]);
    if (v > best) {
      best = v;
      best_idx = i;
    }
  }
  // Refine along the two segments adjacent to the best vertex.
  std::size_t lo_idx = best_idx > 0 ? best_idx - 1 : best_idx;
  std::size_t hi_idx = best_idx + 1 < verts.size() ? best_idx + 1 : best_idx;
  if (lo_idx == hi_idx) return best;
  Point2 a = verts[lo_idx], b = verts[hi_idx];
  auto along = [&](double t) { return sqrt_j_at(a + t * (b - a)); };
  return std::max(best, golden_max(along, 0.0, 1.0, 1e-12));
}

double lft_threshold(double gamma_star, const moebius::Moebius& m,
                     const geometry::PolylineCurve& gamma) {
  if (m.has_pole()) {
    Point2 pole(m.pole().real(), m.pole().imag());
    for (const Point2& v : gamma.vertices())
      if ((v - pole).norm() < 1e-9)
        throw std::domain_error("lft_threshold: curve touches the pole of M");
  }
  return gamma_star / sup_sqrt_jacobian(m, gamma);
}

double interval_bound_state_threshold(double length) {
  if (!(length > 0.0))
    throw std::invalid_argument("interval_bound_state_threshold: L must be positive");
  return kPi / (2.0 * length);
}

double strip_ground_state(double length, double omega) {
  if (!(length > 0.0))
    throw std::invalid_argument("strip_ground_state: L must be positive");
  return kPi * kPi / (length * length) - 4.0 * omega * omega;
}

namespace {

double nonnegativity_threshold(const CurveDescriptor& curve) {
  if (const auto* interval = std::get_if<IntervalCurve>(&curve))
    return 1.0 / (2.0 * kPi * interval->length);
  if (const auto* mono = std::get_if<MonotoneDescriptor>(&curve))
    return omega_star(mono->curve);
  const auto& lft = std::get<LftDescriptor>(curve);
  return lft_threshold(omega_star(lft.gamma_curve), lft.map, lft.gamma_poly);
}

}  // namespace

Verdict classify(const CurveDescriptor& curve, double omega) {
  const double star = nonnegativity_threshold(curve);
  if (omega <= star) return {VerdictTag::kProvablyNonnegative, star};
  if (const auto* interval = std::get_if<IntervalCurve>(&curve)) {
    double existence = interval_bound_state_threshold(interval->length);
    if (omega > existence) return {VerdictTag::kBoundStateExists, existence};
  }
  return {VerdictTag::kUnknown, star};
}

ThresholdReport threshold_report(const CurveDescriptor& curve, int samples) {
  ThresholdReport report;
  report.omega_star = nonnegativity_threshold(curve);

  auto tabulate = [&](const geometry::MonotoneCurve& c) {
    for (int i = 1; i <= samples; ++i) {
      double r = c.extent() * i / (samples + 1.0);
      report.pointwise_bound.emplace_back(r, pointwise_bound(c, r));
    }
  };

  if (const auto* interval = std::get_if<IntervalCurve>(&curve)) {
    tabulate(geometry::MonotoneCurve::interval(interval->length));
    report.provenance = Provenance::kDirect;
  } else if (const auto* mono = std::get_if<MonotoneDescriptor>(&curve)) {
    tabulate(mono->curve);
    report.provenance = Provenance::kDirect;
  } else {
    const auto& lft = std::get<LftDescriptor>(curve);
    tabulate(lft.gamma_curve);
    report.provenance = Provenance::kViaLft;
    report.sup_sqrt_jacobian = sup_sqrt_jacobian(lft.map, lft.gamma_poly);
  }
  return report;
}

}  // namespace dplab::thresholds
