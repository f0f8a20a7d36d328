#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "dgsc/field.hpp"
#include "dgsc/problem.hpp"

namespace dgsc {

/// Legendre coefficients of a polynomial on the reference cell [-1, 1].
using ModalPolynomial = std::vector<double>;

/// Reference-coordinate primitive s -> int_{-1}^{s} p(s') ds'. The result
/// has one more coefficient than p.
ModalPolynomial ds_inverse(std::span<const double> p);

/// Coefficients b_{i,m} of the correction functions
///   F_i = sum_{m=k-i+1}^{k} b_{i,m} (L_m - L_{m-1}),  i = 1..l,
/// obtained from F_1 = P_h^- D_s^{-1} L_k and F_{i+1} = -P_h^- D_s^{-1} F_i.
class CorrectionTable {
 public:
  using Rational = boost::multiprecision::cpp_rational;

  CorrectionTable(int k, int l, std::vector<std::vector<Rational>> exact);

  int degree() const { return k_; }
  int depth() const { return l_; }

  /// b_{i,m}; zero outside m in [k-i+1, k].
  double b(int i, int m) const;
  const Rational& b_exact(int i, int m) const;

  /// Legendre coefficients (length k+1) of F_i on the reference cell.
  ModalPolynomial f_modal(int i) const;

  /// F_i(s) evaluated in the telescoping form, so F_i(1) is exactly zero.
  double eval_f(int i, double s) const;

 private:
  int k_;
  int l_;
  std::vector<std::vector<Rational>> exact_;  // [i-1][m]
  std::vector<std::vector<double>> values_;
};

/// Throws std::invalid_argument unless 1 <= l <= k <= kMaxDegree.
CorrectionTable build_correction_table(int k, int l);

/// Per cell j, G[j][i] = d^i/dt^i u_{j,k+1}(0) for i = 0..l, computed from
/// the x-derivatives of u0 (u_t = -u_x). Throws std::invalid_argument if u0
/// cannot supply derivative jets of order l.
std::vector<std::vector<double>> g_coefficients(const SmoothFunction& u0, const Mesh1D& mesh, int k,
                                                int l);

/// u_I^l(., 0) = P_h^- u0 - sum_{i=1}^{l} hbar_j^i G_i(0) F_i.
ModalField build_interpolant(const SmoothFunction& u0, const MeshPtr& mesh, int k, int l);

/// d/dt u_I^l(., 0) = P_h^- u_t - sum_{i=1}^{l} hbar_j^i G_{i+1}(0) F_i,
/// which needs jets of u0 up to order l+1.
ModalField interpolant_rate(const SmoothFunction& u0, const MeshPtr& mesh, int k, int l);

enum class InitMethod {
  L2Projection = 1,         // u_h(., 0) = R_h u0
  GaussRadau = 2,           // u_h(., 0) = P_h^- u0
  RadauTimeDerivative = 3,  // u_ht(., 0) = P_h^- u_t, downwind values pinned
  CorrectedInterpolant = 4  // u_h(., 0) = u_I^k(., 0)
};

/// Maps 1..4 onto InitMethod; anything else throws std::invalid_argument.
InitMethod init_method_from_int(int id);

/// Discrete initial value for the given method.
ModalField initialize(InitMethod method, const ProblemSpec& problem, const MeshPtr& mesh, int k);

}  // namespace dgsc
