#pragma once

#include <functional>

#include "dgsc/field.hpp"

namespace dgsc {

enum class BoundaryKind { Periodic, DirichletInflow };

struct BoundaryCondition {
  BoundaryKind kind = BoundaryKind::Periodic;
  /// Inflow value u(0, t); only read for DirichletInflow.
  std::function<double(double)> g;

  static BoundaryCondition periodic() { return {}; }
  static BoundaryCondition dirichlet(std::function<double(double)> g) {
    return {BoundaryKind::DirichletInflow, std::move(g)};
  }

  /// Upwind value entering cell 0 at time t for the given state.
  double inflow(const ModalField& state, double t) const;
};

/// Semidiscrete upwind DG operator for u_t + u_x = 0: returns du_h/dt.
///
/// Per cell and mode m,
///   h_j/(2m+1) dc_{j,m}/dt = (u_h, L_m')_ref - u_h^-(x_{j+1/2}) + (-1)^m u_h^-(x_{j-1/2}),
/// with the volume term evaluated exactly from L_m' = sum_{n<m, m-n odd} (2n+1) L_n.
ModalField dg_rhs(const ModalField& state, const BoundaryCondition& bc, double t);

/// Writes dg_rhs into `out`, which must be compatible with `state`.
void dg_rhs_into(const ModalField& state, const BoundaryCondition& bc, double t, ModalField& out);

/// (u_ht, u_h) with u_ht = dg_rhs(state).
double energy_rate(const ModalField& state, const BoundaryCondition& bc, double t);

/// (u, v) over the whole mesh, exact in the modal basis.
double l2_inner(const ModalField& u, const ModalField& v);

/// sum_j int_{tau_j} u dx = sum_j h_j c_{j,0}.
double total_mass(const ModalField& u);

}  // namespace dgsc
