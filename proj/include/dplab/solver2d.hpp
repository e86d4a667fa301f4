#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "dplab/geometry.hpp"
#include "dplab/sparse.hpp"

namespace dplab::solver2d {

struct Box {
  double x_min, x_max, y_min, y_max;
  double width() const { return x_max - x_min; }
  double height() const { return y_max - y_min; }
};

// Horizontal crack segment on a grid line.
struct Segment {
  double x_a, x_b, y0;
};

// One crack edge; at a tip the plus and minus ids coincide.
struct CrackEdge {
  int left_plus, left_minus;
  int right_plus, right_minus;
  double ds;
  double s_left, s_right;  // arc length from the left tip
};

// Uniform triangulated grid over a box with nodes along an interior
// horizontal segment duplicated into upper/lower copies. Tip nodes stay
// single, which encodes continuity at the curve endpoints.
class CrackMesh {
 public:
  static CrackMesh build(const Box& box, double h, const Segment& segment);

  const Box& box() const { return box_; }
  double h() const { return h_; }
  const Segment& segment() const { return segment_; }  // snapped
  bool was_snapped() const { return snapped_; }

  int num_nodes() const { return total_nodes_; }
  int num_grid_nodes() const { return (nx_ + 1) * (ny_ + 1); }
  int duplicated_node_count() const { return total_nodes_ - num_grid_nodes(); }

  const std::vector<std::array<int, 3>>& triangles() const { return triangles_; }
  const std::vector<CrackEdge>& interface_edges() const { return interface_; }
  std::array<int, 2> tip_nodes() const { return {tip_left_, tip_right_}; }

  Point2 node_position(int node) const;
  bool is_boundary(int node) const;

  // Upper/lower copy ids of the crack node at grid column i (tips: both equal).
  int plus_node(int column) const;
  int minus_node(int column) const;
  int column_of_x(double x) const;

  int grid_nx() const { return nx_; }
  int grid_ny() const { return ny_; }

 private:
  CrackMesh() = default;
  int node_id(int i, int j) const { return j * (nx_ + 1) + i; }

  Box box_{};
  double h_ = 0.0;
  Segment segment_{};
  bool snapped_ = false;
  int nx_ = 0, ny_ = 0;
  int jy_ = 0, ia_ = 0, ib_ = 0;
  int total_nodes_ = 0;
  int tip_left_ = 0, tip_right_ = 0;
  std::vector<int> minus_ids_;  // by grid column; -1 where not duplicated
  std::vector<std::array<int, 3>> triangles_;
  std::vector<CrackEdge> interface_;
};

// Strength along the crack as a function of arc length from the left tip.
class OmegaProfile {
 public:
  static OmegaProfile constant(double value);
  static OmegaProfile tabulated(std::vector<double> s, std::vector<double> value);

  double eval(double s) const;
  bool is_constant() const { return s_.empty(); }
  double constant_value() const { return constant_; }
  const std::vector<double>& breakpoints() const { return s_; }
  const std::vector<double>& values() const { return value_; }

 private:
  double constant_ = 0.0;
  std::vector<double> s_, value_;
};

// Dirichlet-eliminated P1 matrices of the crack form:
// stiffness (grad u, grad v), interface (omega [u], [v]) and mass (u, v).
struct FormAssembly {
  sparse::CsrMatrix stiffness;
  sparse::CsrMatrix interface;
  sparse::CsrMatrix mass;
  std::vector<int> node_to_dof;  // -1 on the Dirichlet boundary
  std::vector<int> dof_to_node;
  int n_dofs = 0;
};

FormAssembly assemble(const CrackMesh& mesh, const OmegaProfile& omega);

enum class VerdictNumeric { kNoNegativeFound, kNegativeEigenvalue };

struct SpectralReport {
  std::vector<double> eigenvalues;
  std::vector<double> residuals;
  Box box{};
  double h = 0.0;
  std::string omega_desc;
  VerdictNumeric verdict = VerdictNumeric::kNoNegativeFound;
  double verdict_value = 0.0;  // tolerance used, or lambda_1
  bool sign_only = false;      // set for LFT-transported strengths
  Eigen::VectorXd ground_state;  // dof values of the lowest mode
};

struct SolveOptions {
  int k = 1;
  double eig_tol = 1e-8;
  double verdict_tol = 1e-6;
  std::uint64_t seed = kDefaultSeed;
};

SpectralReport lowest_eigenvalues(const CrackMesh& mesh, const FormAssembly& asm_,
                                  const SolveOptions& options = {});

// Test field on a disc, written in curve-adapted polar coordinates: psi in
// (0, 2 pi) measured from the curve so that the jump sits at the wrap line.
struct JumpTestField {
  std::function<double(double r, double psi)> du_dr;
  std::function<double(double r, double psi)> du_dpsi;  // d/d psi, not 1/r d/d psi
  std::function<double(double r)> jump;                 // [u] along the curve
  std::function<double(double r, double psi)> value;    // optional
};

struct DiscFormValue {
  double value = 0.0;      // gradient_term - interface_term
  double gradient_term = 0.0;
  double interface_term = 0.0;
};

// Quadrature of |grad u|^2 over the disc of radius R (midpoint tensor grid)
// minus the trapezoid interface term along the polyline.
DiscFormValue evaluate_disc_form(const JumpTestField& field,
                                 const geometry::PolylineCurve& poly,
                                 const std::function<double(double)>& omega_of_r,
                                 double disc_radius, int quad_n,
                                 const Point2& origin = Point2::Zero());

struct CriticalBracket {
  double omega_lo = 0.0;
  double omega_hi = 0.0;
  std::vector<std::pair<double, double>> probes;  // (omega, lambda_1) evaluated
  std::vector<std::pair<double, double>> trail;   // bracket after each halving
};

// Bisection of the sign of lambda_1 inside [1/(2 pi L), pi/(2 L)]. The result
// depends on the box and mesh spacing; it is an estimate, not ground truth.
CriticalBracket estimate_critical_strength(double length, const Box& box, double h,
                                           double tol_omega,
                                           const SolveOptions& options = {});

}  // namespace dplab::solver2d
