#pragma once

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "dplab/geometry.hpp"
#include "dplab/moebius.hpp"

namespace dplab::thresholds {

enum class Provenance { kDirect, kViaLft };

struct ThresholdReport {
  std::vector<std::pair<double, double>> pointwise_bound;  // (r, bound) samples
  double omega_star = 0.0;
  Provenance provenance = Provenance::kDirect;
  double sup_sqrt_jacobian = 1.0;  // ViaLft only
};

enum class VerdictTag { kProvablyNonnegative, kBoundStateExists, kUnknown };

struct Verdict {
  VerdictTag tag = VerdictTag::kUnknown;
  std::optional<double> witness;  // the threshold that decided
};

// Pointwise non-negativity bound 1 / (2 pi r sqrt(1 + (r phi'(r))^2)).
double pointwise_bound(const geometry::MonotoneCurve& curve, double r);

// Infimum of the pointwise bound over (0, R): closed form for constant and
// linear profiles, grid search with golden-section refinement for tabulated.
double omega_star(const geometry::MonotoneCurve& curve);

// Largest sqrt(J_M) over a sampled curve, refined near the maximizer.
double sup_sqrt_jacobian(const moebius::Moebius& m, const geometry::PolylineCurve& poly);

// Threshold transported through an LFT: omega_star(Gamma) / sup sqrt(J_M).
double lft_threshold(double gamma_star, const moebius::Moebius& m,
                     const geometry::PolylineCurve& gamma);

// Strengths above pi/(2L) produce a bound state for the interval.
double interval_bound_state_threshold(double length);

// Ground state pi^2/L^2 - 4 omega^2 of the Dirichlet strip comparison model.
double strip_ground_state(double length, double omega);

struct IntervalCurve {
  double length = 1.0;
};
struct MonotoneDescriptor {
  geometry::MonotoneCurve curve;
};
struct LftDescriptor {
  moebius::Moebius map;                 // Lambda = map(Gamma)
  geometry::MonotoneCurve gamma_curve;  // monotone preimage
  geometry::PolylineCurve gamma_poly;   // sampled preimage, for sup sqrt(J)
};
using CurveDescriptor = std::variant<IntervalCurve, MonotoneDescriptor, LftDescriptor>;

// Three-valued classification for a constant strength; the gap between the
// non-negativity threshold and the interval bound-state threshold stays
// Unknown on purpose.
Verdict classify(const CurveDescriptor& curve, double omega);

ThresholdReport threshold_report(const CurveDescriptor& curve, int samples = 64);

}  // namespace dplab::thresholds
