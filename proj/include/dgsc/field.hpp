#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <memory>
#include <span>
#include <vector>

#include "dgsc/basis.hpp"
#include "dgsc/mesh.hpp"
#include "dgsc/smooth_function.hpp"

namespace dgsc {

using MeshPtr = std::shared_ptr<const Mesh1D>;

inline MeshPtr share(Mesh1D mesh) { return std::make_shared<const Mesh1D>(std::move(mesh)); }

/// Piecewise polynomial of degree k, stored per cell as Legendre (modal)
/// coefficients: on cell j the field is sum_m c_{j,m} L_m(s).
class ModalField {
 public:
  ModalField(MeshPtr mesh, int degree);

  const Mesh1D& mesh() const { return *mesh_; }
  const MeshPtr& mesh_ptr() const { return mesh_; }
  int degree() const { return degree_; }
  std::size_t num_cells() const { return mesh_->num_cells(); }
  std::size_t modes() const { return static_cast<std::size_t>(degree_) + 1; }

  std::span<double> cell(std::size_t j) { return {coeffs_.data() + j * modes(), modes()}; }
  std::span<const double> cell(std::size_t j) const { return {coeffs_.data() + j * modes(), modes()}; }
  double& operator()(std::size_t j, std::size_t m) { return coeffs_[j * modes() + m]; }
  double operator()(std::size_t j, std::size_t m) const { return coeffs_[j * modes() + m]; }

  std::span<double> coefficients() { return coeffs_; }
  std::span<const double> coefficients() const { return coeffs_; }

  /// Field value at reference coordinate s of cell j.
  double eval(std::size_t j, double s) const;
  /// x-derivative at reference coordinate s of cell j.
  double eval_deriv(std::size_t j, double s) const;
  /// Value at physical x; interface points resolve to the left cell.
  double eval_at(double x) const;

  /// Left limit at the right end of cell j: sum_m c_{j,m}.
  double downwind_trace(std::size_t j) const;
  /// Right limit at the left end of cell j: sum_m (-1)^m c_{j,m}.
  double upwind_trace(std::size_t j) const;

  /// Same mesh object (or an equal one) and same degree.
  bool compatible(const ModalField& other) const;

  ModalField& operator+=(const ModalField& other);
  ModalField& operator-=(const ModalField& other);
  ModalField& operator*=(double factor);
  /// this += factor * other
  ModalField& axpy(double factor, const ModalField& other);

  friend ModalField operator+(ModalField a, const ModalField& b) { return a += b; }
  friend ModalField operator-(ModalField a, const ModalField& b) { return a -= b; }
  friend ModalField operator*(double f, ModalField a) { return a *= f; }

 private:
  void require_compatible(const ModalField& other) const;

  MeshPtr mesh_;
  int degree_;
  std::vector<double> coeffs_;
};

/// Gauss-Legendre rule used for every cell moment integral at degree k.
QuadratureRule cell_quadrature(int k);

/// Modal L2 projection onto V_h.
ModalField l2_project(const SmoothFunction& u, const MeshPtr& mesh, int k);

/// Gauss-Radau projection P_h^-: moments against P^{k-1} and the downwind
/// value of u are matched on every cell.
ModalField gauss_radau_project(const SmoothFunction& u, const MeshPtr& mesh, int k);

/// Coefficient u_{j,m} of the Radau expansion
///   u = u(x_{j+1/2}^-) + sum_{m>=1} u_{j,m} (L_{j,m} - L_{j,m-1}).
double radau_coefficient(const SmoothFunction& u, const Mesh1D& mesh, std::size_t j, int m);

/// Trial function for the DG bilinear form, given cell by cell in
/// reference coordinates together with its time derivative.
struct TrialFunction {
  std::function<double(std::size_t, double)> value;
  std::function<double(std::size_t, double)> rate;
  /// Left limit at the inflow boundary, w^-(x_{1/2}).
  double inflow = 0.0;
};

TrialFunction trial_from_field(const ModalField& w, const ModalField& w_t, double inflow);
TrialFunction trial_from_smooth(const MeshPtr& mesh, const SmoothFunction& u, const SmoothFunction& u_t);

/// a_j(w, v) = (w_t, v)_j - (w, v_x)_j + w^- v^-|_{j+1/2} - w^- v^+|_{j-1/2},
/// where w^- at x_{j-1/2} is the right trace of cell j-1 (or the inflow
/// value when j = 0).
double cell_bilinear_form(const TrialFunction& w, const ModalField& v, std::size_t j);

/// Same, with the upstream trace w^-(x_{j-1/2}) given explicitly.
double cell_bilinear_form(const TrialFunction& w, double upstream_trace, const ModalField& v,
                          std::size_t j);

/// a(w, v) = sum_j a_j(w, v).
double bilinear_form(const TrialFunction& w, const ModalField& v);

/// Plain-text dump: header `dgfield k=<k> n=<N>`, then one line of k+1
/// coefficients per cell, printed with 17 significant digits.
void write_field(std::ostream& out, const ModalField& field);

/// Reads a dump produced by write_field onto the given mesh. Throws
/// std::runtime_error on a malformed header or a cell-count mismatch.
ModalField read_field(std::istream& in, const MeshPtr& mesh);

}  // namespace dgsc
