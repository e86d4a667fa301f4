#include "dplab/solver2d.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace dplab::solver2d {

namespace {

constexpr double kPi = 3.14159265358979323846;

int grid_count(double span, double h, const char* what) {
  double ratio = span / h;
  int n = static_cast<int>(std::lround(ratio));
  if (n < 2 || std::abs(ratio - n) > 1e-9 * std::max(1.0, ratio))
    throw std::invalid_argument(std::string(what) +
                                ": box side must be a multiple of h");
  return n;
}

}  // namespace

CrackMesh CrackMesh::build(const Box& box, double h, const Segment& segment) {
  if (!(h > 0.0)) throw std::invalid_argument("CrackMesh: h must be positive");
  if (!(box.x_min < box.x_max) || !(box.y_min < box.y_max))
    throw std::invalid_argument("CrackMesh: empty box");

  CrackMesh mesh;
  mesh.box_ = box;
  mesh.h_ = h;
  mesh.nx_ = grid_count(box.width(), h, "CrackMesh");
  mesh.ny_ = grid_count(box.height(), h, "CrackMesh");

  auto snap = [&](double coord, double origin) {
    return static_cast<int>(std::lround((coord - origin) / h));
  };
  mesh.ia_ = snap(segment.x_a, box.x_min);
  mesh.ib_ = snap(segment.x_b, box.x_min);
  mesh.jy_ = snap(segment.y0, box.y_min);
  mesh.segment_ = {box.x_min + mesh.ia_ * h, box.x_min + mesh.ib_ * h,
                   box.y_min + mesh.jy_ * h};
  auto moved = [&](double a, double b) {
    return std::abs(a - b) > 1e-12 * std::max(1.0, std::abs(b));
  };
  mesh.snapped_ = moved(mesh.segment_.x_a, segment.x_a) ||
                  moved(mesh.segment_.x_b, segment.x_b) ||
                  moved(mesh.segment_.y0, segment.y0);

  if (mesh.ia_ >= mesh.ib_)
    throw std::invalid_argument("CrackMesh: segment collapses after snapping");
  if (mesh.ia_ <= 0 || mesh.ib_ >= mesh.nx_ || mesh.jy_ <= 0 || mesh.jy_ >= mesh.ny_)
    throw std::invalid_argument("CrackMesh: segment touches the outer boundary");

  const int grid_nodes = (mesh.nx_ + 1) * (mesh.ny_ + 1);
  mesh.minus_ids_.assign(mesh.nx_ + 1, -1);
  int next = grid_nodes;
  for (int i = mesh.ia_ + 1; i < mesh.ib_; ++i) mesh.minus_ids_[i] = next++;
  mesh.total_nodes_ = next;
  mesh.tip_left_ = mesh.node_id(mesh.ia_, mesh.jy_);
  mesh.tip_right_ = mesh.node_id(mesh.ib_, mesh.jy_);

  // Each cell splits along the lower-left to upper-right diagonal. A vertex
  // on the crack line resolves to the upper copy for cells at or above the
  // line and to the lower copy below it.
  auto resolve = [&](int i, int j, int cell_j) {
    if (j == mesh.jy_ && mesh.minus_ids_[i] >= 0 && cell_j < mesh.jy_)
      return mesh.minus_ids_[i];
    return mesh.node_id(i, j);
  };
  mesh.triangles_.reserve(static_cast<std::size_t>(2) * mesh.nx_ * mesh.ny_);
  for (int j = 0; j < mesh.ny_; ++j)
    for (int i = 0; i < mesh.nx_; ++i) {
      int a = resolve(i, j, j), b = resolve(i + 1, j, j);
      int c = resolve(i + 1, j + 1, j), d = resolve(i, j + 1, j);
      mesh.triangles_.push_back({a, b, c});
      mesh.triangles_.push_back({a, c, d});
    }

  for (int i = mesh.ia_; i < mesh.ib_; ++i) {
    CrackEdge edge;
    edge.left_plus = mesh.node_id(i, mesh.jy_);
    edge.left_minus = mesh.minus_ids_[i] >= 0 ? mesh.minus_ids_[i] : edge.left_plus;
    edge.right_plus = mesh.node_id(i + 1, mesh.jy_);
    edge.right_minus =
        mesh.minus_ids_[i + 1] >= 0 ? mesh.minus_ids_[i + 1] : edge.right_plus;
    edge.ds = h;
    edge.s_left = (i - mesh.ia_) * h;
    edge.s_right = (i + 1 - mesh.ia_) * h;
    mesh.interface_.push_back(edge);
  }
  return mesh;
}

Point2 CrackMesh::node_position(int node) const {
  if (node < num_grid_nodes()) {
    int i = node % (nx_ + 1), j = node / (nx_ + 1);
    return Point2(box_.x_min + i * h_, box_.y_min + j * h_);
  }
  for (int i = ia_ + 1; i < ib_; ++i)
    if (minus_ids_[i] == node) return Point2(box_.x_min + i * h_, segment_.y0);
  throw std::out_of_range("CrackMesh: unknown node id");
}

bool CrackMesh::is_boundary(int node) const {
  if (node >= num_grid_nodes()) return false;  // duplicated nodes are interior
  int i = node % (nx_ + 1), j = node / (nx_ + 1);
  return i == 0 || i == nx_ || j == 0 || j == ny_;
}

int CrackMesh::plus_node(int column) const { return node_id(column, jy_); }

int CrackMesh::minus_node(int column) const {
  return minus_ids_[column] >= 0 ? minus_ids_[column] : node_id(column, jy_);
}

int CrackMesh::column_of_x(double x) const {
  return static_cast<int>(std::lround((x - box_.x_min) / h_));
}

OmegaProfile OmegaProfile::constant(double value) {
  OmegaProfile p;
  p.constant_ = value;
  return p;
}

OmegaProfile OmegaProfile::tabulated(std::vector<double> s, std::vector<double> value) {
  if (s.size() != value.size() || s.size() < 2)
    throw std::invalid_argument("OmegaProfile: need matching tables, length >= 2");
  for (std::size_t i = 0; i + 1 < s.size(); ++i)
    if (!(s[i] < s[i + 1]))
      throw std::invalid_argument("OmegaProfile: breakpoints must increase");
  OmegaProfile p;
  p.s_ = std::move(s);
  p.value_ = std::move(value);
  return p;
}

double OmegaProfile::eval(double s) const {
  if (is_constant()) return constant_;
  if (s <= s_.front()) return value_.front();
  if (s >= s_.back()) return value_.back();
  auto it = std::upper_bound(s_.begin(), s_.end(), s);
  std::size_t i = static_cast<std::size_t>(it - s_.begin()) - 1;
  double t = (s - s_[i]) / (s_[i + 1] - s_[i]);
  return value_[i] + t * (value_[i + 1] - value_[i]);
}

FormAssembly assemble(const CrackMesh& mesh, const OmegaProfile& omega) {
  if (!omega.is_constant()) {
    double len = mesh.segment().x_b - mesh.segment().x_a;
    if (omega.breakpoints().front() > 1e-9 ||
        omega.breakpoints().back() < len - 1e-9)
      throw std::invalid_argument("assemble: strength table does not cover the crack");
  }

  FormAssembly out;
  const int n = mesh.num_nodes();
  out.node_to_dof.assign(n, -1);
  for (int v = 0; v < n; ++v)
    if (!mesh.is_boundary(v)) {
      out.node_to_dof[v] = static_cast<int>(out.dof_to_node.size());
      out.dof_to_node.push_back(v);
    }
  out.n_dofs = static_cast<int>(out.dof_to_node.size());

  std::vector<sparse::Triplet> kt, mt, bt;
  kt.reserve(mesh.triangles().size() * 9);
  mt.reserve(mesh.triangles().size() * 9);

  for (const auto& tri : mesh.triangles()) {
    Point2 p0 = mesh.node_position(tri[0]);
    Point2 p1 = mesh.node_position(tri[1]);
    Point2 p2 = mesh.node_position(tri[2]);
    Point2 e1 = p1 - p0, e2 = p2 - p0;
    double det = e1.x() * e2.y() - e1.y() * e2.x();
    double area = 0.5 * std::abs(det);
    // Gradients of the barycentric shape functions.
    Point2 g[3];
    g[1] = Point2(e2.y(), -e2.x()) / det;
    g[2] = Point2(-e1.y(), e1.x()) / det;
    g[0] = -(g[1] + g[2]);
    for (int a = 0; a < 3; ++a) {
      int ra = out.node_to_dof[tri[a]];
      if (ra < 0) continue;
      for (int b = 0; b < 3; ++b) {
        int rb = out.node_to_dof[tri[b]];
        if (rb < 0) continue;
        kt.push_back({ra, rb, area * g[a].dot(g[b])});
        mt.push_back({ra, rb, area / 12.0 * (a == b ? 2.0 : 1.0)});
      }
    }
  }

  // Interface term: per-edge trapezoid of omega [u][v]; at a tip the jump is
  // extended constantly from the adjacent interior node, so an interior
  // constant jump integrates to omega times the full crack length.
  for (const CrackEdge& edge : mesh.interface_edges()) {
    struct Sample {
      int plus, minus;
      double s;
    };
    bool left_tip = edge.left_plus == edge.left_minus;
    bool right_tip = edge.right_plus == edge.right_minus;
    if (left_tip && right_tip) continue;  // no duplicated node: nothing to couple
    Sample samples[2] = {
        {left_tip ? edge.right_plus : edge.left_plus,
         left_tip ? edge.right_minus : edge.left_minus, edge.s_left},
        {right_tip ? edge.left_plus : edge.right_plus,
         right_tip ? edge.left_minus : edge.right_minus, edge.s_right}};
    for (const Sample& smp : samples) {
      double w = 0.5 * edge.ds * omega.eval(smp.s);
      if (w == 0.0) continue;
      int p = out.node_to_dof[smp.plus], m = out.node_to_dof[smp.minus];
      if (p < 0 || m < 0) continue;
      bt.push_back({p, p, w});
      bt.push_back({m, m, w});
      bt.push_back({p, m, -w});
      bt.push_back({m, p, -w});
    }
  }

  out.stiffness = sparse::CsrMatrix::from_triplets(out.n_dofs, kt);
  out.mass = sparse::CsrMatrix::from_triplets(out.n_dofs, mt);
  out.interface = sparse::CsrMatrix::from_triplets(out.n_dofs, bt);
  return out;
}

SpectralReport lowest_eigenvalues(const CrackMesh& mesh, const FormAssembly& asm_,
                                  const SolveOptions& options) {
  sparse::CsrMatrix a = sparse::add(1.0, asm_.stiffness, -1.0, asm_.interface);

  sparse::EigOptions eig_opts;
  eig_opts.tol = options.eig_tol;
  eig_opts.seed = options.seed;
  eig_opts.preconditioner =
      sparse::pcg_preconditioner(sparse::add(1.0, asm_.stiffness, 1.0, asm_.mass), 16);
  sparse::EigResult eig = sparse::smallest_eigenpairs(a, asm_.mass, options.k, eig_opts);

  SpectralReport report;
  report.eigenvalues.assign(eig.eigenvalues.data(),
                            eig.eigenvalues.data() + eig.eigenvalues.size());
  report.residuals.assign(eig.residual_norms.data(),
                          eig.residual_norms.data() + eig.residual_norms.size());
  report.box = mesh.box();
  report.h = mesh.h();
  report.ground_state = eig.eigenvectors.col(0);
  double lambda1 = report.eigenvalues.front();
  if (lambda1 < -options.verdict_tol) {
    report.verdict = VerdictNumeric::kNegativeEigenvalue;
    report.verdict_value = lambda1;
  } else {
    report.verdict = VerdictNumeric::kNoNegativeFound;
    report.verdict_value = options.verdict_tol;
  }
  return report;
}

DiscFormValue evaluate_disc_form(const JumpTestField& field,
                                 const geometry::PolylineCurve& poly,
                                 const std::function<double(double)>& omega_of_r,
                                 double disc_radius, int quad_n,
                                 const Point2& origin) {
  if (!(disc_radius > 0.0) || quad_n < 8)
    throw std::invalid_argument("evaluate_disc_form: bad radius or quadrature size");
  for (const Point2& v : poly.vertices())
    if ((v - origin).norm() > disc_radius * (1.0 + 1e-12))
      throw std::domain_error("evaluate_disc_form: polyline exits the disc");

  DiscFormValue out;
  const double dr = disc_radius / quad_n;
  const double dpsi = 2.0 * kPi / quad_n;
  double grad = 0.0;
  for (int i = 0; i < quad_n; ++i) {
    const double r = (i + 0.5) * dr;
    double ring = 0.0;
    for (int j = 0; j < quad_n; ++j) {
      const double psi = (j + 0.5) * dpsi;
      const double ur = field.du_dr(r, psi);
      const double up = field.du_dpsi(r, psi) / r;
      ring += ur * ur + up * up;
    }
    grad += ring * r * dr * dpsi;
  }
  out.gradient_term = grad;

  double interface = 0.0;
  const auto& verts = poly.vertices();
  const auto& cum = poly.cumulative_length();
  auto integrand = [&](const Point2& v) {
    double r = (v - origin).norm();
    double jump = field.jump(r);
    return omega_of_r(r) * jump * jump;
  };
  for (std::size_t i = 0; i + 1 < verts.size(); ++i) {
    double ds = cum[i + 1] - cum[i];
    interface += 0.5 * ds * (integrand(verts[i]) + integrand(verts[i + 1]));
  }
  out.interface_term = interface;
  out.value = out.gradient_term - out.interface_term;
  return out;
}

CriticalBracket estimate_critical_strength(double length, const Box& box, double h,
                                           double tol_omega,
                                           const SolveOptions& options) {
  if (!(length > 0.0))
    throw std::invalid_argument("estimate_critical_strength: L must be positive");
  if (!(tol_omega > 0.0))
    throw std::invalid_argument("estimate_critical_strength: tol_omega must be positive");

  CrackMesh mesh = CrackMesh::build(box, h, {0.0, length, 0.0});
  FormAssembly asm_unit = assemble(mesh, OmegaProfile::constant(1.0));
  sparse::PreconditionerFn precond = sparse::pcg_preconditioner(
      sparse::add(1.0, asm_unit.stiffness, 1.0, asm_unit.mass), 16);

  CriticalBracket bracket;
  auto lambda1 = [&](double omega) {
    // The interface matrix is linear in a constant strength.
    sparse::CsrMatrix a = sparse::add(1.0, asm_unit.stiffness, -omega, asm_unit.interface);
    sparse::EigOptions eig_opts;
    eig_opts.tol = options.eig_tol;
    eig_opts.seed = options.seed;
    eig_opts.preconditioner = precond;
    sparse::EigResult eig = sparse::smallest_eigenpairs(a, asm_unit.mass, 1, eig_opts);
    bracket.probes.emplace_back(omega, eig.eigenvalues[0]);
    return eig.eigenvalues[0];
  };

  double lo = 1.0 / (2.0 * kPi * length);
  double hi = kPi / (2.0 * length);
  const double tol_neg = options.verdict_tol;

  if (!(lambda1(lo) >= -tol_neg))
    throw std::runtime_error(
        "estimate_critical_strength: negative mode below the proven threshold "
        "(solver tolerance too loose)");
  if (!(lambda1(hi) < -tol_neg))
    throw std::runtime_error(
        "estimate_critical_strength: no negative mode at the existence threshold");

  while (hi - lo > tol_omega) {
    double mid = 0.5 * (lo + hi);
    if (lambda1(mid) < -tol_neg)
      hi = mid;
    else
      lo = mid;
    bracket.trail.emplace_back(lo, hi);
  }

  // lambda_1 must be non-increasing in omega on everything we probed.
  std::vector<std::pair<double, double>> sorted = bracket.probes;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
    double slack = 1e-6 * std::max(1.0, std::abs(sorted[i].second));
    if (sorted[i + 1].second > sorted[i].second + slack) {
      std::ostringstream msg;
      msg << "estimate_critical_strength: lambda_1 not monotone in omega ("
          << sorted[i].second << " -> " << sorted[i + 1].second << ")";
      throw std::runtime_error(msg.str());
    }
  }

  bracket.omega_lo = lo;
  bracket.omega_hi = hi;
  return bracket;
}

}  // namespace dplab::solver2d
