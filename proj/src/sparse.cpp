#include "dplab/sparse.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace dplab::sparse {

CsrMatrix CsrMatrix::from_triplets(int n, const std::vector<Triplet>& entries) {
  if (n <= 0) throw std::invalid_argument("CsrMatrix: dimension must be positive");
  std::vector<Triplet> sorted;
  sorted.reserve(entries.size());
  for (const Triplet& t : entries) {
    if (t.row < 0 || t.row >= n || t.col < 0 || t.col >= n)
      throw std::invalid_argument("CsrMatrix: triplet index out of range");
    if (t.value != 0.0) sorted.push_back(t);
  }
  std::sort(sorted.begin(), sorted.end(), [](const Triplet& a, const Triplet& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });

  CsrMatrix m;
  m.n_ = n;
  m.row_ptr_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    double sum = 0.0;
    while (j < sorted.size() && sorted[j].row == sorted[i].row &&
           sorted[j].col == sorted[i].col) {
      sum += sorted[j].value;
      ++j;
    }
    m.col_idx_.push_back(sorted[i].col);
    m.values_.push_back(sum);
    ++m.row_ptr_[static_cast<std::size_t>(sorted[i].row) + 1];
    i = j;
  }
  for (int i = 0; i < n; ++i) m.row_ptr_[i + 1] += m.row_ptr_[i];
  return m;
}

Eigen::VectorXd CsrMatrix::diagonal() const {
  Eigen::VectorXd d = Eigen::VectorXd::Zero(n_);
  for (int i = 0; i < n_; ++i)
    for (int p = row_ptr_[i]; p < row_ptr_[i + 1]; ++p)
      if (col_idx_[p] == i) d[i] = values_[p];
  return d;
}

namespace {

double entry_at(const CsrMatrix& m, int i, int j) {
  const auto& rp = m.row_ptr();
  const auto& ci = m.col_idx();
  auto begin = ci.begin() + rp[i], end = ci.begin() + rp[i + 1];
  auto it = std::lower_bound(begin, end, j);
  if (it == end || *it != j) return 0.0;
  return m.values()[static_cast<std::size_t>(it - ci.begin())];
}

}  // namespace

bool CsrMatrix::is_structurally_symmetric() const {
  for (int i = 0; i < n_; ++i)
    for (int p = row_ptr_[i]; p < row_ptr_[i + 1]; ++p) {
      int j = col_idx_[p];
      const auto begin = col_idx_.begin() + row_ptr_[j];
      const auto end = col_idx_.begin() + row_ptr_[j + 1];
      if (!std::binary_search(begin, end, i)) return false;
    }
  return true;
}

double CsrMatrix::symmetry_error() const {
  double scale = 0.0;
  for (double v : values_) scale = std::max(scale, std::abs(v));
  if (scale == 0.0) return 0.0;
  double worst = 0.0;
  for (int i = 0; i < n_; ++i)
    for (int p = row_ptr_[i]; p < row_ptr_[i + 1]; ++p)
      worst = std::max(worst, std::abs(values_[p] - entry_at(*this, col_idx_[p], i)));
  return worst / scale;
}

double CsrMatrix::norm_inf() const {
  double worst = 0.0;
  for (int i = 0; i < n_; ++i) {
    double row = 0.0;
    for (int p = row_ptr_[i]; p < row_ptr_[i + 1]; ++p) row += std::abs(values_[p]);
    worst = std::max(worst, row);
  }
  return worst;
}

Eigen::VectorXd matvec(const CsrMatrix& a, const Eigen::Ref<const Eigen::VectorXd>& x) {
  if (x.size() != a.size()) throw std::invalid_argument("matvec: dimension mismatch");
  Eigen::VectorXd y(a.size());
  const auto& rp = a.row_ptr();
  const auto& ci = a.col_idx();
  const auto& v = a.values();
  for (int i = 0; i < a.size(); ++i) {
    double sum = 0.0;
    for (int p = rp[i]; p < rp[i + 1]; ++p) sum += v[p] * x[ci[p]];
    y[i] = sum;
  }
  return y;
}

void matvec_block(const CsrMatrix& a, const Eigen::Ref<const Eigen::MatrixXd>& x,
                  Eigen::MatrixXd& y) {
  if (x.rows() != a.size())
    throw std::invalid_argument("matvec_block: dimension mismatch");
  y.resize(x.rows(), x.cols());
  for (Eigen::Index c = 0; c < x.cols(); ++c) y.col(c) = matvec(a, x.col(c));
}

CsrMatrix add(double alpha, const CsrMatrix& a, double beta, const CsrMatrix& b) {
  if (a.size() != b.size()) throw std::invalid_argument("add: dimension mismatch");
  std::vector<Triplet> t;
  t.reserve(static_cast<std::size_t>(a.nonzeros() + b.nonzeros()));
  for (int i = 0; i < a.size(); ++i)
    for (int p = a.row_ptr()[i]; p < a.row_ptr()[i + 1]; ++p)
      t.push_back({i, a.col_idx()[p], alpha * a.values()[p]});
  for (int i = 0; i < b.size(); ++i)
    for (int p = b.row_ptr()[i]; p < b.row_ptr()[i + 1]; ++p)
      t.push_back({i, b.col_idx()[p], beta * b.values()[p]});
  return CsrMatrix::from_triplets(a.size(), t);
}

Eigen::MatrixXd to_dense(const CsrMatrix& a) {
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(a.size(), a.size());
  for (int i = 0; i < a.size(); ++i)
    for (int p = a.row_ptr()[i]; p < a.row_ptr()[i + 1]; ++p)
      d(i, a.col_idx()[p]) = a.values()[p];
  return d;
}

Eigen::VectorXd cg_solve(const CsrMatrix& a, const Eigen::Ref<const Eigen::VectorXd>& b,
                         double tol, int max_iter) {
  if (b.size() != a.size()) throw std::invalid_argument("cg_solve: dimension mismatch");
  const double bnorm = b.norm();
  Eigen::VectorXd x = Eigen::VectorXd::Zero(a.size());
  if (bnorm == 0.0) return x;
  Eigen::VectorXd r = b;
  Eigen::VectorXd p = r;
  double rho = r.squaredNorm();
  for (int it = 0; it < max_iter; ++it) {
    Eigen::VectorXd ap = matvec(a, p);
    double pap = p.dot(ap);
    if (pap <= 0.0)
      throw std::runtime_error("cg_solve: breakdown, matrix is not positive definite");
    double alpha = rho / pap;
    x += alpha * p;
    r -= alpha * ap;
    double rho_next = r.squaredNorm();
    if (std::sqrt(rho_next) <= tol * bnorm) return x;
    p = r + (rho_next / rho) * p;
    rho = rho_next;
  }
  std::ostringstream msg;
  msg << "cg_solve: no convergence after " << max_iter << " iterations, residual "
      << r.norm() / bnorm;
  throw std::runtime_error(msg.str());
}

PreconditionerFn jacobi_preconditioner(const CsrMatrix& a) {
  Eigen::VectorXd d = a.diagonal();
  Eigen::VectorXd inv(d.size());
  for (int i = 0; i < d.size(); ++i)
    inv[i] = std::abs(d[i]) > 0.0 ? 1.0 / std::abs(d[i]) : 1.0;
  return [inv](const Eigen::Ref<const Eigen::MatrixXd>& r, Eigen::MatrixXd& z) {
    z = inv.asDiagonal() * r;
  };
}

namespace {

struct Ic0Factor {
  // L (lower, diagonal last per row) and U = L^T (upper, diagonal first).
  std::vector<int> l_ptr, l_col;
  std::vector<double> l_val;
  std::vector<int> u_ptr, u_col;
  std::vector<double> u_val;
};

// Up-looking incomplete Cholesky restricted to the lower pattern of a.
// Returns the factor, or nullopt on pivot breakdown.
std::optional<Ic0Factor> ic0_factor(const CsrMatrix& a, double boost) {
  const int n = a.size();
  Ic0Factor f;
  f.l_ptr.assign(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 0; i < n; ++i) {
    bool has_diag = false;
    for (int p = a.row_ptr()[i]; p < a.row_ptr()[i + 1]; ++p) {
      if (a.col_idx()[p] < i) {
        f.l_col.push_back(a.col_idx()[p]);
        f.l_val.push_back(a.values()[p]);
      } else if (a.col_idx()[p] == i) {
        f.l_col.push_back(i);
        f.l_val.push_back(a.values()[p] * (1.0 + boost));
        has_diag = true;
      }
    }
    if (!has_diag) return std::nullopt;
    f.l_ptr[i + 1] = static_cast<int>(f.l_col.size());
  }

  std::vector<double> work(n, 0.0);
  for (int i = 0; i < n; ++i) {
    const int begin = f.l_ptr[i], end = f.l_ptr[i + 1];
    for (int p = begin; p < end; ++p) work[f.l_col[p]] = f.l_val[p];
    for (int p = begin; p < end - 1; ++p) {
      const int k = f.l_col[p];
      // L(i,k) = (A(i,k) - sum_{j<k} L(i,j) L(k,j)) / L(k,k)
      double sum = work[k];
      const int kend = f.l_ptr[k + 1] - 1;  // diagonal of row k sits last
      for (int q = f.l_ptr[k]; q < kend; ++q) sum -= f.l_val[q] * work[f.l_col[q]];
      work[k] = sum / f.l_val[kend];
    }
    double diag = work[i];
    for (int p = begin; p < end - 1; ++p) diag -= work[f.l_col[p]] * work[f.l_col[p]];
    if (!(diag > 0.0)) {
      for (int p = begin; p < end; ++p) work[f.l_col[p]] = 0.0;
      return std::nullopt;
    }
    work[i] = std::sqrt(diag);
    for (int p = begin; p < end; ++p) {
      f.l_val[p] = work[f.l_col[p]];
      work[f.l_col[p]] = 0.0;
    }
  }

  // Transpose L into U for the backward sweep.
  f.u_ptr.assign(static_cast<std::size_t>(n) + 1, 0);
  for (int c : f.l_col) ++f.u_ptr[c + 1];
  for (int i = 0; i < n; ++i) f.u_ptr[i + 1] += f.u_ptr[i];
  f.u_col.resize(f.l_col.size());
  f.u_val.resize(f.l_val.size());
  std::vector<int> cursor(f.u_ptr.begin(), f.u_ptr.end() - 1);
  for (int i = 0; i < n; ++i)
    for (int p = f.l_ptr[i]; p < f.l_ptr[i + 1]; ++p) {
      const int c = f.l_col[p];
      f.u_col[cursor[c]] = i;
      f.u_val[cursor[c]] = f.l_val[p];
      ++cursor[c];
    }
  return f;
}

void ic0_apply(const Ic0Factor& f, const Eigen::Ref<const Eigen::VectorXd>& r,
               Eigen::Ref<Eigen::VectorXd> z) {
  const int n = static_cast<int>(f.l_ptr.size()) - 1;
  // Forward: L y = r (diagonal last per row).
  for (int i = 0; i < n; ++i) {
    double sum = r[i];
    const int end = f.l_ptr[i + 1] - 1;
    for (int p = f.l_ptr[i]; p < end; ++p) sum -= f.l_val[p] * z[f.l_col[p]];
    z[i] = sum / f.l_val[end];
  }
  // Backward: L^T z = y (diagonal first per row of U).
  for (int i = n - 1; i >= 0; --i) {
    double sum = z[i];
    const int begin = f.u_ptr[i];
    for (int p = begin + 1; p < f.u_ptr[i + 1]; ++p) sum -= f.u_val[p] * z[f.u_col[p]];
    z[i] = sum / f.u_val[begin];
  }
}

}  // namespace

namespace {

std::shared_ptr<Ic0Factor> make_ic0(const CsrMatrix& a_spd) {
  std::optional<Ic0Factor> factor;
  for (double boost : {0.0, 1e-3, 1e-2, 1e-1, 1.0}) {
    factor = ic0_factor(a_spd, boost);
    if (factor) break;
  }
  if (!factor)
    throw std::runtime_error("ic0_preconditioner: factorization broke down");
  return std::make_shared<Ic0Factor>(std::move(*factor));
}

}  // namespace

PreconditionerFn ic0_preconditioner(const CsrMatrix& a_spd) {
  auto f = make_ic0(a_spd);
  return [f](const Eigen::Ref<const Eigen::MatrixXd>& r, Eigen::MatrixXd& z) {
    z.resize(r.rows(), r.cols());
    for (Eigen::Index c = 0; c < r.cols(); ++c) {
      Eigen::VectorXd zc(r.rows());
      ic0_apply(*f, r.col(c), zc);
      z.col(c) = zc;
    }
  };
}

PreconditionerFn pcg_preconditioner(const CsrMatrix& a_spd, int inner_iters) {
  if (inner_iters < 1)
    throw std::invalid_argument("pcg_preconditioner: need at least one step");
  auto f = make_ic0(a_spd);
  auto a = std::make_shared<CsrMatrix>(a_spd);
  return [f, a, inner_iters](const Eigen::Ref<const Eigen::MatrixXd>& rhs,
                             Eigen::MatrixXd& z) {
    const int n = static_cast<int>(rhs.rows());
    z.resize(rhs.rows(), rhs.cols());
    Eigen::VectorXd x(n), r(n), zc(n), p(n), ap(n);
    for (Eigen::Index c = 0; c < rhs.cols(); ++c) {
      x.setZero();
      r = rhs.col(c);
      ic0_apply(*f, r, zc);
      p = zc;
      double rz = r.dot(zc);
      for (int it = 0; it < inner_iters; ++it) {
        ap = matvec(*a, p);
        double pap = p.dot(ap);
        if (!(pap > 0.0)) break;
        double alpha = rz / pap;
        x += alpha * p;
        r -= alpha * ap;
        if (it + 1 == inner_iters) break;
        ic0_apply(*f, r, zc);
        double rz_next = r.dot(zc);
        if (!(rz_next > 0.0)) break;
        p = zc + (rz_next / rz) * p;
        rz = rz_next;
      }
      z.col(c) = x;
    }
  };
}

namespace {

// M-orthonormalizes the columns of x in place (SVQB style: eigendecompose the
// Gram matrix and drop near-dependent directions). Companion blocks are
// transformed consistently. Returns the surviving column count.
int orthonormalize(Eigen::MatrixXd& x, Eigen::MatrixXd& mx,
                   Eigen::MatrixXd* extra = nullptr) {
  Eigen::MatrixXd gram = x.transpose() * mx;
  gram = 0.5 * (gram + gram.transpose()).eval();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram);
  if (es.info() != Eigen::Success) return 0;
  const double lmax = es.eigenvalues().cwiseAbs().maxCoeff();
  if (!(lmax > 0.0)) return 0;
  std::vector<int> keep;
  for (int i = 0; i < es.eigenvalues().size(); ++i)
    if (es.eigenvalues()[i] > 1e-12 * lmax) keep.push_back(i);
  if (keep.empty()) return 0;
  Eigen::MatrixXd t(gram.rows(), static_cast<Eigen::Index>(keep.size()));
  for (std::size_t j = 0; j < keep.size(); ++j)
    t.col(static_cast<Eigen::Index>(j)) =
        es.eigenvectors().col(keep[j]) / std::sqrt(es.eigenvalues()[keep[j]]);
  x = (x * t).eval();
  mx = (mx * t).eval();
  if (extra) *extra = (*extra * t).eval();
  return static_cast<int>(keep.size());
}

struct LobpcgOutcome {
  bool converged = false;
  Eigen::VectorXd theta;
  Eigen::MatrixXd x;
  Eigen::VectorXd residuals;
  int iterations = 0;
};

LobpcgOutcome lobpcg_attempt(const CsrMatrix& k_mat, const CsrMatrix& m_mat, int k,
                             int block, const EigOptions& options,
                             const PreconditionerFn& precond, std::uint64_t seed) {
  const int n = k_mat.size();
  LobpcgOutcome out;

  CounterRng rng(seed);
  Eigen::MatrixXd x(n, block);
  for (int j = 0; j < block; ++j)
    for (int i = 0; i < n; ++i) x(i, j) = rng.uniform(-1.0, 1.0);

  Eigen::MatrixXd mx;
  matvec_block(m_mat, x, mx);
  if (orthonormalize(x, mx) < block) return out;
  Eigen::MatrixXd kx;
  matvec_block(k_mat, x, kx);

  auto rayleigh_ritz_x = [&](void) -> Eigen::VectorXd {
    Eigen::MatrixXd h = x.transpose() * kx;
    h = 0.5 * (h + h.transpose()).eval();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
    x = (x * es.eigenvectors()).eval();
    kx = (kx * es.eigenvectors()).eval();
    mx = (mx * es.eigenvectors()).eval();
    return es.eigenvalues();
  };
  Eigen::VectorXd theta = rayleigh_ritz_x();

  Eigen::MatrixXd p(n, 0), kp(n, 0), mp(n, 0);

  for (int iter = 1; iter <= options.max_iter; ++iter) {
    out.iterations = iter;
    Eigen::MatrixXd resid = kx - mx * theta.head(block).asDiagonal();
    Eigen::VectorXd resnorm(k);
    bool done = true;
    for (int j = 0; j < k; ++j) {
      resnorm[j] = resid.col(j).norm() / x.col(j).norm();
      if (!(resnorm[j] <= options.tol)) done = false;
    }
    if (done) {
      out.converged = true;
      out.theta = theta.head(k);
      out.x = x.leftCols(k);
      out.residuals = resnorm;
      return out;
    }

    Eigen::MatrixXd w;
    precond(resid, w);
    // M-orthogonal projection against the current and previous blocks.
    w -= x * (mx.transpose() * w);
    if (p.cols() > 0) w -= p * (mp.transpose() * w);
    Eigen::MatrixXd mw;
    matvec_block(m_mat, w, mw);
    if (orthonormalize(w, mw) == 0) return out;  // stagnated search space
    Eigen::MatrixXd kw;
    matvec_block(k_mat, w, kw);

    const int nx = block, nw = static_cast<int>(w.cols()),
              np = static_cast<int>(p.cols());
    const int q = nx + nw + np;
    Eigen::MatrixXd s(n, q), ks(n, q), ms(n, q);
    s.leftCols(nx) = x;
    s.middleCols(nx, nw) = w;
    ks.leftCols(nx) = kx;
    ks.middleCols(nx, nw) = kw;
    ms.leftCols(nx) = mx;
    ms.middleCols(nx, nw) = mw;
    if (np > 0) {
      s.rightCols(np) = p;
      ks.rightCols(np) = kp;
      ms.rightCols(np) = mp;
    }

    Eigen::MatrixXd gk = s.transpose() * ks;
    Eigen::MatrixXd gm = s.transpose() * ms;
    gk = 0.5 * (gk + gk.transpose()).eval();
    gm = 0.5 * (gm + gm.transpose()).eval();

    // Filter the subspace metric before Rayleigh-Ritz.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> esm(gm);
    if (esm.info() != Eigen::Success) return out;
    const double lmax = esm.eigenvalues().cwiseAbs().maxCoeff();
    std::vector<int> keep;
    for (int i = 0; i < q; ++i)
      if (esm.eigenvalues()[i] > 1e-12 * lmax) keep.push_back(i);
    if (static_cast<int>(keep.size()) < block) return out;
    Eigen::MatrixXd t(q, static_cast<Eigen::Index>(keep.size()));
    for (std::size_t j = 0; j < keep.size(); ++j)
      t.col(static_cast<Eigen::Index>(j)) =
          esm.eigenvectors().col(keep[j]) / std::sqrt(esm.eigenvalues()[keep[j]]);

    Eigen::MatrixXd h = t.transpose() * gk * t;
    h = 0.5 * (h + h.transpose()).eval();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> esh(h);
    if (esh.info() != Eigen::Success) return out;

    Eigen::MatrixXd z = t * esh.eigenvectors().leftCols(block);
    theta = esh.eigenvalues().head(block);
    if (!theta.allFinite()) return out;

    Eigen::MatrixXd zx = z.topRows(nx);
    Eigen::MatrixXd zw = z.middleRows(nx, nw);

    Eigen::MatrixXd p_new = w * zw, kp_new = kw * zw, mp_new = mw * zw;
    if (np > 0) {
      Eigen::MatrixXd zp = z.bottomRows(np);
      p_new += p * zp;
      kp_new += kp * zp;
      mp_new += mp * zp;
    }
    x = (x * zx + p_new).eval();
    kx = (kx * zx + kp_new).eval();
    mx = (mx * zx + mp_new).eval();
    p = p_new;
    kp = kp_new;
    mp = mp_new;
    if (orthonormalize(p, mp, &kp) == 0) {
      p.resize(n, 0);
      kp.resize(n, 0);
      mp.resize(n, 0);
    }
    // Guard against orthogonality drift in the primary block.
    if (iter % 16 == 0) {
      if (orthonormalize(x, mx, &kx) < block) return out;
      theta = rayleigh_ritz_x();
    }
  }
  return out;
}

EigResult dense_fallback(const CsrMatrix& k_mat, const CsrMatrix& m_mat, int k) {
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> solver(
      to_dense(k_mat), to_dense(m_mat), Eigen::ComputeEigenvectors | Eigen::Ax_lBx);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("smallest_eigenpairs: dense solve failed");
  EigResult res;
  res.eigenvalues = solver.eigenvalues().head(k);
  res.eigenvectors = solver.eigenvectors().leftCols(k);
  res.residual_norms.resize(k);
  for (int j = 0; j < k; ++j) {
    Eigen::VectorXd xj = res.eigenvectors.col(j);
    res.residual_norms[j] =
        (matvec(k_mat, xj) - res.eigenvalues[j] * matvec(m_mat, xj)).norm() / xj.norm();
  }
  return res;
}

}  // namespace

EigResult smallest_eigenpairs(const CsrMatrix& k_mat, const CsrMatrix& m_mat, int k,
                              const EigOptions& options) {
  const int n = k_mat.size();
  if (m_mat.size() != n)
    throw std::invalid_argument("smallest_eigenpairs: dimension mismatch");
  if (k < 1 || k > 10 || k > n)
    throw std::invalid_argument("smallest_eigenpairs: need 1 <= k <= min(n, 10)");

  const int block = std::min(n, k + 3);
  if (3 * block + 2 >= n) return dense_fallback(k_mat, m_mat, k);

  PreconditionerFn precond =
      options.preconditioner ? options.preconditioner : jacobi_preconditioner(k_mat);

  LobpcgOutcome out =
      lobpcg_attempt(k_mat, m_mat, k, block, options, precond, options.seed);
  if (!out.converged) {
    // One restart with a fresh random block before giving up.
    out = lobpcg_attempt(k_mat, m_mat, k, block, options, precond,
                         CounterRng::hash(options.seed + 0x51AB51AB));
  }
  if (!out.converged) {
    std::ostringstream msg;
    msg << "smallest_eigenpairs: no convergence after restart ("
        << out.iterations << " iterations";
    if (out.residuals.size() > 0) msg << ", residual " << out.residuals.maxCoeff();
    msg << ")";
    throw std::runtime_error(msg.str());
  }

  EigResult res;
  res.eigenvalues = out.theta;
  res.eigenvectors = out.x;
  res.residual_norms = out.residuals;
  res.iterations = out.iterations;
  return res;
}

Eigen::VectorXd dense_eig_oracle(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
    throw std::invalid_argument("dense_eig_oracle: dimension mismatch");
  if (a.rows() > 2000) throw std::invalid_argument("dense_eig_oracle: n exceeds 2000");
  Eigen::LLT<Eigen::MatrixXd> llt(b);
  if (llt.info() != Eigen::Success)
    throw std::invalid_argument("dense_eig_oracle: B is not positive definite");
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> solver(
      a, b, Eigen::EigenvaluesOnly | Eigen::Ax_lBx);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("dense_eig_oracle: eigensolver failed");
  return solver.eigenvalues();
}

}  // namespace dplab::sparse
