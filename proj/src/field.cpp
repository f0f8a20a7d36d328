#include "dgsc/field.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace dgsc {

ModalField::ModalField(MeshPtr mesh, int degree)
    : mesh_(std::move(mesh)), degree_(degree) {
  if (!mesh_) throw std::invalid_argument("ModalField needs a mesh");
  if (degree_ < 0 || degree_ > kMaxDegree) {
    throw std::invalid_argument("ModalField degree out of range: " + std::to_string(degree_));
  }
  coeffs_.assign(mesh_->num_cells() * modes(), 0.0);
}

double ModalField::eval(std::size_t j, double s) const {
  return legendre_series<double>(cell(j), s);
}

double ModalField::eval_deriv(std::size_t j, double s) const {
  std::vector<double> values(modes());
  std::vector<double> derivs(modes());
  legendre_values_and_derivs(s, values, derivs);
  const auto c = cell(j);
  double sum = 0.0;
  for (std::size_t m = 0; m < modes(); ++m) sum += c[m] * derivs[m];
  return sum / mesh_->half_size(j);
}

double ModalField::eval_at(double x) const {
  const std::size_t j = mesh_->locate(x);
  return eval(j, mesh_->to_reference(j, x));
}

double ModalField::downwind_trace(std::size_t j) const {
  double sum = 0.0;
  for (double c : cell(j)) sum += c;
  return sum;
}

double ModalField::upwind_trace(std::size_t j) const {
  double sum = 0.0;
  double sign = 1.0;
  for (double c : cell(j)) {
    sum += sign * c;
    sign = -sign;
  }
  return sum;
}

bool ModalField::compatible(const ModalField& other) const {
  return degree_ == other.degree_ && (mesh_ == other.mesh_ || *mesh_ == *other.mesh_);
}

void ModalField::require_compatible(const ModalField& other) const {
  if (!compatible(other)) throw std::invalid_argument("ModalField mesh/degree mismatch");
}

ModalField& ModalField::operator+=(const ModalField& other) { return axpy(1.0, other); }
ModalField& ModalField::operator-=(const ModalField& other) { return axpy(-1.0, other); }

ModalField& ModalField::operator*=(double factor) {
  for (double& c : coeffs_) c *= factor;
  return *this;
}

ModalField& ModalField::axpy(double factor, const ModalField& other) {
  require_compatible(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += factor * other.coeffs_[i];
  return *this;
}

QuadratureRule cell_quadrature(int k) { return gauss_rule(std::max(k + 6, 12)); }

namespace {

// L2 moments c_m = (2m+1)/h_j int u L_m dx = (2m+1)/2 int u(s) L_m(s) ds
// for m = 0..count-1.
std::vector<double> l2_moments(const SmoothFunction& u, const Mesh1D& mesh, std::size_t j,
                               std::size_t count, const QuadratureRule& rule) {
  std::vector<double> c(count, 0.0);
  std::vector<double> values(count);
  for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
    const double s = rule.nodes[q];
    legendre_values(s, values);
    const double fw = rule.weights[q] * u(mesh.to_physical(j, s));
    for (std::size_t m = 0; m < count; ++m) c[m] += fw * values[m];
  }
  for (std::size_t m = 0; m < count; ++m) c[m] *= 0.5 * (2.0 * static_cast<double>(m) + 1.0);
  return c;
}

}  // namespace

ModalField l2_project(const SmoothFunction& u, const MeshPtr& mesh, int k) {
  ModalField field(mesh, k);
  const QuadratureRule rule = cell_quadrature(k);
  for (std::size_t j = 0; j < mesh->num_cells(); ++j) {
    const auto c = l2_moments(u, *mesh, j, field.modes(), rule);
    std::copy(c.begin(), c.end(), field.cell(j).begin());
  }
  return field;
}

ModalField gauss_radau_project(const SmoothFunction& u, const MeshPtr& mesh, int k) {
  ModalField field(mesh, k);
  const QuadratureRule rule = cell_quadrature(k);
  const auto kk = static_cast<std::size_t>(k);
  for (std::size_t j = 0; j < mesh->num_cells(); ++j) {
    const auto c = l2_moments(u, *mesh, j, kk, rule);
    auto out = field.cell(j);
    double partial = 0.0;
    for (std::size_t m = 0; m < kk; ++m) {
      out[m] = c[m];
      partial += c[m];
    }
    out[kk] = u(mesh->cell_right(j)) - partial;
  }
  return field;
}

double radau_coefficient(const SmoothFunction& u, const Mesh1D& mesh, std::size_t j, int m) {
  if (m < 1) throw std::invalid_argument("radau_coefficient index must be >= 1");
  const int rule_degree = std::max(m - 1, 0);
  const auto c = l2_moments(u, mesh, j, static_cast<std::size_t>(m), cell_quadrature(rule_degree));
  double partial = 0.0;
  for (double v : c) partial += v;
  return u(mesh.cell_right(j)) - partial;
}

TrialFunction trial_from_field(const ModalField& w, const ModalField& w_t, double inflow) {
  if (!w.compatible(w_t)) throw std::invalid_argument("trial_from_field: mesh/degree mismatch");
  return TrialFunction{
      [w](std::size_t j, double s) { return w.eval(j, s); },
      [w_t](std::size_t j, double s) { return w_t.eval(j, s); },
      inflow,
  };
}

TrialFunction trial_from_smooth(const MeshPtr& mesh, const SmoothFunction& u,
                                const SmoothFunction& u_t) {
  return TrialFunction{
      [mesh, u](std::size_t j, double s) { return u(mesh->to_physical(j, s)); },
      [mesh, u_t](std::size_t j, double s) { return u_t(mesh->to_physical(j, s)); },
      u(mesh->left()),
  };
}

double cell_bilinear_form(const TrialFunction& w, double upstream_trace, const ModalField& v,
                          std::size_t j) {
  const Mesh1D& mesh = v.mesh();
  const QuadratureRule rule = cell_quadrature(v.degree());
  const auto c = v.cell(j);
  std::vector<double> values(v.modes());
  std::vector<double> derivs(v.modes());
  double rate_term = 0.0;
  double flux_term = 0.0;
  for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
    const double s = rule.nodes[q];
    legendre_values_and_derivs(s, values, derivs);
    double vs = 0.0;
    double dvs = 0.0;
    for (std::size_t m = 0; m < v.modes(); ++m) {
      vs += c[m] * values[m];
      dvs += c[m] * derivs[m];
    }
    rate_term += rule.weights[q] * w.rate(j, s) * vs;
    // (w, v_x)_j = int w(s) dv/ds ds since dx = hbar ds and v_x = v_s / hbar.
    flux_term += rule.weights[q] * w.value(j, s) * dvs;
  }
  rate_term *= mesh.half_size(j);
  return rate_term - flux_term + w.value(j, 1.0) * v.downwind_trace(j) -
         upstream_trace * v.upwind_trace(j);
}

double cell_bilinear_form(const TrialFunction& w, const ModalField& v, std::size_t j) {
  const double upstream = j == 0 ? w.inflow : w.value(j - 1, 1.0);
  return cell_bilinear_form(w, upstream, v, j);
}

double bilinear_form(const TrialFunction& w, const ModalField& v) {
  double sum = 0.0;
  for (std::size_t j = 0; j < v.num_cells(); ++j) sum += cell_bilinear_form(w, v, j);
  return sum;
}

void write_field(std::ostream& out, const ModalField& field) {
  out << "dgfield k=" << field.degree() << " n=" << field.num_cells() << '\n';
  const auto precision = out.precision(17);
  for (std::size_t j = 0; j < field.num_cells(); ++j) {
    const auto c = field.cell(j);
    for (std::size_t m = 0; m < c.size(); ++m) {
      if (m > 0) out << ' ';
      out << c[m];
    }
    out << '\n';
  }
  out.precision(precision);
}

ModalField read_field(std::istream& in, const MeshPtr& mesh) {
  std::string header;
  if (!std::getline(in, header)) throw std::runtime_error("dgfield: missing header");
  std::istringstream hs(header);
  std::string tag;
  std::string kpart;
  std::string npart;
  hs >> tag >> kpart >> npart;
  if (tag != "dgfield" || kpart.rfind("k=", 0) != 0 || npart.rfind("n=", 0) != 0) {
    throw std::runtime_error("dgfield: malformed header '" + header + "'");
  }
  int k = 0;
  std::size_t n = 0;
  try {
    k = std::stoi(kpart.substr(2));
    n = static_cast<std::size_t>(std::stoul(npart.substr(2)));
  } catch (const std::exception&) {
    throw std::runtime_error("dgfield: malformed header '" + header + "'");
  }
  if (n != mesh->num_cells()) {
    throw std::runtime_error("dgfield: file has " + std::to_string(n) + " cells, mesh has " +
                             std::to_string(mesh->num_cells()));
  }
  ModalField field(mesh, k);
  for (std::size_t j = 0; j < n; ++j) {
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("dgfield: truncated file");
    std::istringstream ls(line);
    for (double& c : field.cell(j)) {
      if (!(ls >> c)) throw std::runtime_error("dgfield: short row for cell " + std::to_string(j));
    }
    double extra = 0.0;
    if (ls >> extra) throw std::runtime_error("dgfield: long row for cell " + std::to_string(j));
  }
  return field;
}

}  // namespace dgsc
