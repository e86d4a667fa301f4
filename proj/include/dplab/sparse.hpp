#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <functional>
#include <vector>

#include "dplab/util/rng.hpp"

namespace dplab::sparse {

struct Triplet {
  int row;
  int col;
  double value;
};

// Compressed sparse row storage of a structurally symmetric matrix (full
// pattern stored). Immutable once built.
class CsrMatrix {
 public:
  CsrMatrix() = default;
  static CsrMatrix from_triplets(int n, const std::vector<Triplet>& entries);

  int size() const { return n_; }
  std::int64_t nonzeros() const { return static_cast<std::int64_t>(values_.size()); }
  const std::vector<int>& row_ptr() const { return row_ptr_; }
  const std::vector<int>& col_idx() const { return col_idx_; }
  const std::vector<double>& values() const { return values_; }

  Eigen::VectorXd diagonal() const;
  bool is_structurally_symmetric() const;
  // max_{ij} |a_ij - a_ji| relative to the largest entry magnitude.
  double symmetry_error() const;
  double norm_inf() const;

 private:
  int n_ = 0;
  std::vector<int> row_ptr_;
  std::vector<int> col_idx_;
  std::vector<double> values_;
};

Eigen::VectorXd matvec(const CsrMatrix& a, const Eigen::Ref<const Eigen::VectorXd>& x);
void matvec_block(const CsrMatrix& a, const Eigen::Ref<const Eigen::MatrixXd>& x,
                  Eigen::MatrixXd& y);

// alpha*A + beta*B with merged sparsity patterns.
CsrMatrix add(double alpha, const CsrMatrix& a, double beta, const CsrMatrix& b);

Eigen::MatrixXd to_dense(const CsrMatrix& a);

// Conjugate gradients for SPD systems; throws on breakdown (indefinite A) or
// non-convergence, reporting the last residual.
Eigen::VectorXd cg_solve(const CsrMatrix& a, const Eigen::Ref<const Eigen::VectorXd>& b,
                         double tol, int max_iter = 10000);

// Block preconditioner application: z = T(r), column by column.
using PreconditionerFn =
    std::function<void(const Eigen::Ref<const Eigen::MatrixXd>&, Eigen::MatrixXd&)>;

PreconditionerFn jacobi_preconditioner(const CsrMatrix& a);

// Incomplete Cholesky with zero fill of an SPD matrix; the diagonal is boosted
// and the factorization retried if a pivot turns non-positive.
PreconditionerFn ic0_preconditioner(const CsrMatrix& a_spd);

// Approximate inverse of an SPD matrix: a fixed number of IC(0)-preconditioned
// CG steps from a zero start. Deterministic; stronger than ic0 alone for the
// larger 2D meshes.
PreconditionerFn pcg_preconditioner(const CsrMatrix& a_spd, int inner_iters = 12);

struct EigOptions {
  double tol = 1e-8;       // residual ||Kx - lambda Mx|| / ||x||
  int max_iter = 4000;
  std::uint64_t seed = kDefaultSeed;
  PreconditionerFn preconditioner;  // default: Jacobi on K
};

struct EigResult {
  Eigen::VectorXd eigenvalues;   // ascending, k entries
  Eigen::MatrixXd eigenvectors;  // n x k
  Eigen::VectorXd residual_norms;
  int iterations = 0;
};

// k smallest eigenpairs of K x = lambda M x (K symmetric, M SPD, k <= 10) by
// blocked locally optimal preconditioned iteration. The starting block is
// filled from a counter-based generator, so runs are bit-reproducible.
EigResult smallest_eigenpairs(const CsrMatrix& k_mat, const CsrMatrix& m_mat, int k,
                              const EigOptions& options = {});

// Full generalized spectrum of a dense symmetric pencil (B SPD, n <= 2000):
// Cholesky reduction to standard form, tridiagonalization, implicit shifts.
// Test oracle for the sparse path.
Eigen::VectorXd dense_eig_oracle(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

}  // namespace dplab::sparse
