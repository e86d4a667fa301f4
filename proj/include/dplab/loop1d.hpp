#pragma once

#include <optional>
#include <vector>

namespace dplab::loop1d {

// Point interaction of strength omega on a loop of length d: the operator
// -psi'' on (0, d) with psi'(0+) = psi'(d-) = omega * (psi(d-) - psi(0+)).
struct LoopSpec {
  double d = 1.0;      // loop length, > 0
  double omega = 0.0;  // strength, inverse length
};

enum class SpectrumMethod { kTranscendental, kFiniteElement };

struct Spectrum1D {
  std::vector<double> eigenvalues;  // ascending
  SpectrumMethod method = SpectrumMethod::kTranscendental;
  int fe_cells = 0;  // FiniteElement only
};

// Secular function Theta(kappa) = (2 omega / kappa) (1 - e^{-kappa d}) /
// (1 + e^{-kappa d}); a negative eigenvalue -kappa^2 exists iff Theta = 1.
double theta(const LoopSpec& spec, double kappa);

// Empty iff d*omega <= 1; otherwise the single root of Theta = 1, bracketed
// in (0, 2 omega] and bisected to |Theta - 1| <= 1e-12.
Spectrum1D loop_negative_eigenvalues(const LoopSpec& spec);

// P1 finite elements on n uniform cells for the form
// (psi', phi') - omega [psi][phi]; returns the k smallest eigenvalues.
Spectrum1D loop_fe_spectrum(const LoopSpec& spec, int n_cells, int k);

// Lowest eigenvalue -4 omega^2 of the full-line model; empty when omega <= 0.
std::optional<double> line_delta_prime_eigenvalue(double omega);

// Test hook: scales Theta by (1 + relative). Used by the verification suite
// to confirm its own sensitivity; leave at 0 otherwise.
void set_theta_mutation(double relative);

}  // namespace dplab::loop1d
