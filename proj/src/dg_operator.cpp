#include "dgsc/dg_operator.hpp"

#include <stdexcept>

namespace dgsc {

double BoundaryCondition::inflow(const ModalField& state, double t) const {
  if (kind == BoundaryKind::Periodic) return state.downwind_trace(state.num_cells() - 1);
  if (!g) throw std::invalid_argument("Dirichlet inflow condition without a boundary function");
  return g(t);
}

void dg_rhs_into(const ModalField& state, const BoundaryCondition& bc, double t, ModalField& out) {
  if (!state.compatible(out)) throw std::invalid_argument("dg_rhs: mesh/degree mismatch");
  const Mesh1D& mesh = state.mesh();
  const std::size_t modes = state.modes();
  double upstream = bc.inflow(state, t);
  for (std::size_t j = 0; j < state.num_cells(); ++j) {
    const auto c = state.cell(j);
    auto r = out.cell(j);
    const double downwind = state.downwind_trace(j);
    // Running sums of c_n over even and odd n; the volume term of mode m
    // takes the parity opposite to m over n < m.
    double even_sum = 0.0;
    double odd_sum = 0.0;
    double sign = 1.0;
    for (std::size_t m = 0; m < modes; ++m) {
      const double volume = 2.0 * (m % 2 == 0 ? odd_sum : even_sum);
      const double scale = (2.0 * static_cast<double>(m) + 1.0) / mesh.size(j);
      r[m] = scale * (volume - downwind + sign * upstream);
      (m % 2 == 0 ? even_sum : odd_sum) += c[m];
      sign = -sign;
    }
    upstream = downwind;
  }
}

ModalField dg_rhs(const ModalField& state, const BoundaryCondition& bc, double t) {
  ModalField out(state.mesh_ptr(), state.degree());
  dg_rhs_into(state, bc, t, out);
  return out;
}

double l2_inner(const ModalField& u, const ModalField& v) {
  if (!u.compatible(v)) throw std::invalid_argument("l2_inner: mesh/degree mismatch");
  double sum = 0.0;
  for (std::size_t j = 0; j < u.num_cells(); ++j) {
    const auto a = u.cell(j);
    const auto b = v.cell(j);
    double cell_sum = 0.0;
    for (std::size_t m = 0; m < u.modes(); ++m) {
      cell_sum += a[m] * b[m] / (2.0 * static_cast<double>(m) + 1.0);
    }
    sum += u.mesh().size(j) * cell_sum;
  }
  return sum;
}

double energy_rate(const ModalField& state, const BoundaryCondition& bc, double t) {
  return l2_inner(dg_rhs(state, bc, t), state);
}

double total_mass(const ModalField& u) {
  double sum = 0.0;
  for (std::size_t j = 0; j < u.num_cells(); ++j) sum += u.mesh().size(j) * u(j, 0);
  return sum;
}

}  // namespace dgsc
