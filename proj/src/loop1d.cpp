#include "dplab/loop1d.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>

#include "dplab/sparse.hpp"

namespace dplab::loop1d {

namespace {

std::atomic<double> g_theta_mutation{0.0};

void validate(const LoopSpec& spec) {
  if (!(spec.d > 0.0) || !std::isfinite(spec.d))
    throw std::invalid_argument("LoopSpec: d must be positive and finite");
  if (!std::isfinite(spec.omega))
    throw std::invalid_argument("LoopSpec: omega must be finite");
}

}  // namespace

void set_theta_mutation(double relative) { g_theta_mutation.store(relative); }

double theta(const LoopSpec& spec, double kappa) {
  validate(spec);
  if (!(kappa > 0.0)) throw std::domain_error("theta: kappa must be positive");
  const double e = std::exp(-kappa * spec.d);
  const double value = (2.0 * spec.omega / kappa) * (1.0 - e) / (1.0 + e);
  return value * (1.0 + g_theta_mutation.load());
}

Spectrum1D loop_negative_eigenvalues(const LoopSpec& spec) {
  validate(spec);
  Spectrum1D result;
  result.method = SpectrumMethod::kTranscendental;
  if (spec.d * spec.omega <= 1.0) return result;  // includes the marginal case

  // Theta decreases from d*omega > 1 at 0+ to f(2 omega d) < 1 at 2 omega.
  double lo = 1e-14 * spec.omega;
  double hi = 2.0 * spec.omega;
  double mid = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    mid = 0.5 * (lo + hi);
    const double t = theta(spec, mid);
    if (std::abs(t - 1.0) <= 1e-12) break;
    if (t > 1.0)
      lo = mid;
    else
      hi = mid;
    if (hi - lo <= 1e-16 * hi) break;
  }
  result.eigenvalues.push_back(-mid * mid);
  return result;
}

Spectrum1D loop_fe_spectrum(const LoopSpec& spec, int n_cells, int k) {
  validate(spec);
  if (n_cells < 16) throw std::invalid_argument("loop_fe_spectrum: need n >= 16");
  if (k < 1) throw std::invalid_argument("loop_fe_spectrum: need k >= 1");

  const int n = n_cells + 1;  // P1 nodes on [0, d]
  const double h = spec.d / n_cells;
  const double w = spec.omega;

  std::vector<sparse::Triplet> kt, mt, st;
  for (int e = 0; e < n_cells; ++e) {
    const double kd = 1.0 / h;
    kt.push_back({e, e, kd});
    kt.push_back({e + 1, e + 1, kd});
    kt.push_back({e, e + 1, -kd});
    kt.push_back({e + 1, e, -kd});
    mt.push_back({e, e, h / 3.0});
    mt.push_back({e + 1, e + 1, h / 3.0});
    mt.push_back({e, e + 1, h / 6.0});
    mt.push_back({e + 1, e, h / 6.0});
  }
  st = kt;  // pure stiffness, used for preconditioning
  // Endpoint coupling -omega (psi(d) - psi(0)) (phi(d) - phi(0)).
  kt.push_back({0, 0, -w});
  kt.push_back({n - 1, n - 1, -w});
  kt.push_back({0, n - 1, w});
  kt.push_back({n - 1, 0, w});

  sparse::CsrMatrix a = sparse::CsrMatrix::from_triplets(n, kt);
  sparse::CsrMatrix m = sparse::CsrMatrix::from_triplets(n, mt);
  sparse::CsrMatrix shifted =
      sparse::add(1.0, sparse::CsrMatrix::from_triplets(n, st), 1.0, m);

  sparse::EigOptions opts;
  opts.tol = std::max(1e-12, 1e-11 * a.norm_inf());
  opts.preconditioner = sparse::ic0_preconditioner(shifted);
  sparse::EigResult eig = sparse::smallest_eigenpairs(a, m, k, opts);

  Spectrum1D result;
  result.method = SpectrumMethod::kFiniteElement;
  result.fe_cells = n_cells;
  result.eigenvalues.assign(eig.eigenvalues.data(),
                            eig.eigenvalues.data() + eig.eigenvalues.size());
  return result;
}

std::optional<double> line_delta_prime_eigenvalue(double omega) {
  if (!(omega > 0.0)) return std::nullopt;
  return -4.0 * omega * omega;
}

}  // namespace dplab::loop1d
