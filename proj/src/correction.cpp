#include "dgsc/correction.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace dgsc {

ModalPolynomial ds_inverse(std::span<const double> p) {
  ModalPolynomial out(p.size() + 1, 0.0);
  for (std::size_t m = 0; m < p.size(); ++m) {
    if (m == 0) {
      // int_{-1}^{s} 1 = L_1 + L_0
      out[0] += p[0];
      out[1] += p[0];
    } else {
      const double scale = p[m] / (2.0 * static_cast<double>(m) + 1.0);
      out[m + 1] += scale;
      out[m - 1] -= scale;
    }
  }
  return out;
}

CorrectionTable::CorrectionTable(int k, int l, std::vector<std::vector<Rational>> exact)
    : k_(k), l_(l), exact_(std::move(exact)) {
  values_.reserve(exact_.size());
  for (const auto& row : exact_) {
    std::vector<double> v;
    v.reserve(row.size());
    for (const auto& r : row) v.push_back(r.convert_to<double>());
    values_.push_back(std::move(v));
  }
}

double CorrectionTable::b(int i, int m) const {
  if (i < 1 || i > l_) throw std::out_of_range("correction index i out of range");
  if (m < 0 || m > k_) return 0.0;
  return values_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(m)];
}

const CorrectionTable::Rational& CorrectionTable::b_exact(int i, int m) const {
  if (i < 1 || i > l_ || m < 0 || m > k_) throw std::out_of_range("correction index out of range");
  return exact_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(m)];
}

ModalPolynomial CorrectionTable::f_modal(int i) const {
  ModalPolynomial f(static_cast<std::size_t>(k_) + 1, 0.0);
  for (int m = k_ - i + 1; m <= k_; ++m) {
    const double bm = b(i, m);
    f[static_cast<std::size_t>(m)] += bm;
    f[static_cast<std::size_t>(m - 1)] -= bm;
  }
  return f;
}

double CorrectionTable::eval_f(int i, double s) const {
  double sum = 0.0;
  for (int m = k_ - i + 1; m <= k_; ++m) {
    sum += b(i, m) * (legendre_eval(m, s) - legendre_eval(m - 1, s));
  }
  return sum;
}

CorrectionTable build_correction_table(int k, int l) {
  if (k < 1 || k > kMaxDegree) {
    throw std::invalid_argument("correction table degree out of range: " + std::to_string(k));
  }
  if (l < 1 || l > k) {
    throw std::invalid_argument("correction depth l=" + std::to_string(l) + " outside [1, " +
                                std::to_string(k) + "]");
  }
  using Rational = CorrectionTable::Rational;
  const auto width = static_cast<std::size_t>(k) + 2;  // m = 0..k+1, b_{i,k+1} = 0
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> row(width, Rational(0));
  row[static_cast<std::size_t>(k)] = Rational(1, 2 * k + 1);
  rows.push_back(row);

  // b_{i+1,m} = (b_{i,m+1} - b_{i,m})/(2m+1) + (b_{i,m} - b_{i,m-1})/(2m-1)
  // for m = k-i..k, with b_{i,.} = 0 outside [k-i+1, k]. The first and last
  // entries reduce to the boundary relations of the recursion.
  for (int i = 1; i < l; ++i) {
    const auto& prev = rows.back();
    std::vector<Rational> next(width, Rational(0));
    for (int m = k - i; m <= k; ++m) {
      const auto um = static_cast<std::size_t>(m);
      next[um] = (prev[um + 1] - prev[um]) / Rational(2 * m + 1) +
                 (prev[um] - prev[um - 1]) / Rational(2 * m - 1);
    }
    rows.push_back(std::move(next));
  }
  for (auto& r : rows) r.resize(static_cast<std::size_t>(k) + 1);
  return CorrectionTable(k, l, std::move(rows));
}

std::vector<std::vector<double>> g_coefficients(const SmoothFunction& u0, const Mesh1D& mesh, int k,
                                                int l) {
  if (l < 0) throw std::invalid_argument("g_coefficients: negative derivative order");
  if (u0.max_jet_order() < l) {
    throw std::invalid_argument("g_coefficients: initial datum supplies derivatives up to order " +
                                std::to_string(u0.max_jet_order()) + ", need " + std::to_string(l));
  }
  const QuadratureRule rule = cell_quadrature(k);
  const auto modes = static_cast<std::size_t>(k) + 1;
  const auto orders = static_cast<std::size_t>(l) + 1;
  std::vector<double> legendre(modes);
  std::vector<std::vector<double>> g(mesh.num_cells(), std::vector<double>(orders, 0.0));

  for (std::size_t j = 0; j < mesh.num_cells(); ++j) {
    // moment[i] = (1/h_j) int u0^(i) sum_{m<=k} (2m+1) L_m dx
    std::vector<double> moment(orders, 0.0);
    for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
      legendre_values(rule.nodes[q], legendre);
      double kernel = 0.0;
      for (std::size_t m = 0; m < modes; ++m) kernel += (2.0 * static_cast<double>(m) + 1.0) * legendre[m];
      const auto d = u0.jet(mesh.to_physical(j, rule.nodes[q]), l);
      for (std::size_t i = 0; i < orders; ++i) moment[i] += 0.5 * rule.weights[q] * kernel * d[i];
    }
    const auto end = u0.jet(mesh.cell_right(j), l);
    double sign = 1.0;
    for (std::size_t i = 0; i < orders; ++i) {
      g[j][i] = sign * (end[i] - moment[i]);
      sign = -sign;
    }
  }
  return g;
}

namespace {

// P_h^- v - sum_{i=1}^{l} hbar_j^i G[j][i + shift] F_i on every cell.
ModalField corrected(ModalField base, const std::vector<std::vector<double>>& g,
                     const CorrectionTable& table, int l, int shift) {
  const Mesh1D& mesh = base.mesh();
  std::vector<ModalPolynomial> f;
  for (int i = 1; i <= l; ++i) f.push_back(table.f_modal(i));
  for (std::size_t j = 0; j < mesh.num_cells(); ++j) {
    auto c = base.cell(j);
    double hpow = 1.0;
    for (int i = 1; i <= l; ++i) {
      hpow *= mesh.half_size(j);
      const double scale = hpow * g[j][static_cast<std::size_t>(i + shift)];
      const auto& fi = f[static_cast<std::size_t>(i - 1)];
      for (std::size_t m = 0; m < fi.size(); ++m) c[m] -= scale * fi[m];
    }
  }
  return base;
}

}  // namespace

ModalField build_interpolant(const SmoothFunction& u0, const MeshPtr& mesh, int k, int l) {
  const CorrectionTable table = build_correction_table(k, l);
  const auto g = g_coefficients(u0, *mesh, k, l);
  return corrected(gauss_radau_project(u0, mesh, k), g, table, l, 0);
}

ModalField interpolant_rate(const SmoothFunction& u0, const MeshPtr& mesh, int k, int l) {
  const CorrectionTable table = build_correction_table(k, l);
  const auto g = g_coefficients(u0, *mesh, k, l + 1);
  const SmoothFunction u_t = u0.derivative(1).scaled(-1.0);
  return corrected(gauss_radau_project(u_t, mesh, k), g, table, l, 1);
}

InitMethod init_method_from_int(int id) {
  switch (id) {
    case 1: return InitMethod::L2Projection;
    case 2: return InitMethod::GaussRadau;
    case 3: return InitMethod::RadauTimeDerivative;
    case 4: return InitMethod::CorrectedInterpolant;
    default: throw std::invalid_argument("unknown initialization method " + std::to_string(id));
  }
}

namespace {

// Per cell: pin the downwind value to u0 and require that the scheme's
// time derivative matches P_h^- u_t against L_1..L_k. Mode m of the scheme
// involves c_{m-1}, c_{m-3}, ... only, so the system is solved by forward
// substitution; the upstream trace is known because every downwind value
// is pinned.
ModalField radau_time_derivative_init(const ProblemSpec& problem, const MeshPtr& mesh, int k) {
  const SmoothFunction u_t = problem.u0.derivative(1).scaled(-1.0);
  const ModalField target = gauss_radau_project(u_t, mesh, k);
  ModalField field(mesh, k);
  const auto n = mesh->num_cells();
  const auto modes = static_cast<std::size_t>(k) + 1;
  for (std::size_t j = 0; j < n; ++j) {
    const double downwind = problem.u0(mesh->cell_right(j));
    double upstream = 0.0;
    if (j > 0) {
      upstream = problem.u0(mesh->cell_right(j - 1));
    } else if (problem.bc.kind == BoundaryKind::Periodic) {
      upstream = problem.u0(mesh->cell_right(n - 1));
    } else {
      upstream = problem.bc.g(0.0);
    }
    auto c = field.cell(j);
    double partial = 0.0;
    for (std::size_t m = 1; m < modes; ++m) {
      const double sign = m % 2 == 0 ? 1.0 : -1.0;
      const double mass = mesh->size(j) / (2.0 * static_cast<double>(m) + 1.0);
      // 2 (c_{m-1} + c_{m-3} + ...) = mass * target_m + downwind - (-1)^m upstream
      const double volume = mass * target(j, m) + downwind - sign * upstream;
      double tail = 0.0;
      for (std::size_t idx = m - 1; idx >= 2; idx -= 2) tail += c[idx - 2];
      c[m - 1] = 0.5 * volume - tail;
      partial += c[m - 1];
    }
    c[modes - 1] = downwind - partial;
  }
  return field;
}

}  // namespace

ModalField initialize(InitMethod method, const ProblemSpec& problem, const MeshPtr& mesh, int k) {
  switch (method) {
    case InitMethod::L2Projection: return l2_project(problem.u0, mesh, k);
    case InitMethod::GaussRadau: return gauss_radau_project(problem.u0, mesh, k);
    case InitMethod::RadauTimeDerivative: return radau_time_derivative_init(problem, mesh, k);
    case InitMethod::CorrectedInterpolant: return build_interpolant(problem.u0, mesh, k, k);
  }
  throw std::invalid_argument("unknown initialization method");
}

}  // namespace dgsc
