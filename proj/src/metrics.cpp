#include "dgsc/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace dgsc {

std::pair<double, double> downwind_errors(const ModalField& uh, const SmoothFunction& exact) {
  const Mesh1D& mesh = uh.mesh();
  double max_err = 0.0;
  double sum_sq = 0.0;
  for (std::size_t j = 0; j < mesh.num_cells(); ++j) {
    const double err = std::abs(exact(mesh.cell_right(j)) - uh.downwind_trace(j));
    max_err = std::max(max_err, err);
    sum_sq += err * err;
  }
  return {max_err, std::sqrt(sum_sq / static_cast<double>(mesh.num_cells()))};
}

namespace {

// (1/h_j) int_{tau_j} u dx for every cell.
std::vector<double> exact_cell_averages(const SmoothFunction& u, const Mesh1D& mesh, int k) {
  const QuadratureRule rule = cell_quadrature(k);
  std::vector<double> avg(mesh.num_cells(), 0.0);
  for (std::size_t j = 0; j < mesh.num_cells(); ++j) {
    double s = 0.0;
    for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
      s += rule.weights[q] * u(mesh.to_physical(j, rule.nodes[q]));
    }
    avg[j] = 0.5 * s;
  }
  return avg;
}

}  // namespace

double domain_average_error(const ModalField& uh, const SmoothFunction& exact) {
  const Mesh1D& mesh = uh.mesh();
  const auto avg = exact_cell_averages(exact, mesh, uh.degree());
  double integral = 0.0;
  for (std::size_t j = 0; j < mesh.num_cells(); ++j) integral += mesh.size(j) * (avg[j] - uh(j, 0));
  return std::abs(integral / mesh.length());
}

std::pair<double, double> radau_errors(const ModalField& uh, const SmoothFunction& exact,
                                       const SmoothFunction& exact_deriv) {
  const RadauPointSet points = radau_points(uh.degree());
  const Mesh1D& mesh = uh.mesh();
  double e4 = 0.0;
  double e5 = 0.0;
  for (std::size_t j = 0; j < mesh.num_cells(); ++j) {
    for (double s : points.left_interior) {
      const double x = mesh.to_physical(j, s);
      e4 = std::max(e4, std::abs(exact_deriv(x) - uh.eval_deriv(j, s)));
    }
    for (double s : points.right_interior) {
      const double x = mesh.to_physical(j, s);
      e5 = std::max(e5, std::abs(exact(x) - uh.eval(j, s)));
    }
  }
  return {e4, e5};
}

double cell_average_error(const ModalField& uh, const SmoothFunction& exact) {
  const Mesh1D& mesh = uh.mesh();
  const auto avg = exact_cell_averages(exact, mesh, uh.degree());
  double sum_sq = 0.0;
  for (std::size_t j = 0; j < mesh.num_cells(); ++j) {
    const double d = avg[j] - uh(j, 0);
    sum_sq += d * d;
  }
  return std::sqrt(sum_sq / static_cast<double>(mesh.num_cells()));
}

ErrorSet all_errors(const ModalField& uh, const SmoothFunction& exact) {
  const auto [e1, e2] = downwind_errors(uh, exact);
  const auto [e4, e5] = radau_errors(uh, exact, exact.derivative(1));
  return {e1, e2, domain_average_error(uh, exact), e4, e5, cell_average_error(uh, exact)};
}

std::optional<double> ErrorReport::last_rate(std::size_t metric) const {
  if (rates.empty()) return std::nullopt;
  return rates.back()[metric];
}

ErrorReport rates(std::vector<std::size_t> n, std::vector<ErrorSet> errors) {
  if (n.size() != errors.size()) throw std::invalid_argument("rates: size mismatch");
  for (std::size_t i = 1; i < n.size(); ++i) {
    if (n[i] != 2 * n[i - 1]) {
      throw std::invalid_argument("rates: N sequence must double, got " + std::to_string(n[i - 1]) +
                                  " then " + std::to_string(n[i]));
    }
  }
  ErrorReport report{std::move(n), std::move(errors), {}};
  report.rates.resize(report.n.size());
  for (std::size_t i = 1; i < report.n.size(); ++i) {
    for (std::size_t m = 0; m < kNumMetrics; ++m) {
      const double coarse = report.errors[i - 1][m];
      const double fine = report.errors[i][m];
      if (coarse >= kNoiseFloor && fine >= kNoiseFloor) {
        report.rates[i][m] = std::log2(coarse / fine);
      }
    }
  }
  return report;
}

}  // namespace dgsc
