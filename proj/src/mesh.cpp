#include "dgsc/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace dgsc {

Mesh1D::Mesh1D(std::vector<double> breakpoints, double quasi_uniformity)
    : breakpoints_(std::move(breakpoints)), quasi_uniformity_(quasi_uniformity) {
  if (breakpoints_.size() < 2) throw std::invalid_argument("Mesh1D needs at least one cell");
  sizes_.reserve(breakpoints_.size() - 1);
  for (std::size_t j = 0; j + 1 < breakpoints_.size(); ++j) {
    const double h = breakpoints_[j + 1] - breakpoints_[j];
    if (!(h > 0.0)) throw std::invalid_argument("Mesh1D breakpoints must be strictly increasing");
    sizes_.push_back(h);
  }
  h_max_ = *std::max_element(sizes_.begin(), sizes_.end());
  h_min_ = *std::min_element(sizes_.begin(), sizes_.end());
  if (h_max_ > quasi_uniformity_ * h_min_ * (1.0 + 1e-12)) {
    throw std::invalid_argument("Mesh1D violates the declared quasi-uniformity bound");
  }
}

double Mesh1D::to_reference(std::size_t j, double x) const {
  if (j >= num_cells()) throw std::out_of_range("cell index out of range");
  const double slack = 1e-14 * std::max(1.0, std::abs(x));
  if (x < cell_left(j) - slack || x > cell_right(j) + slack) {
    throw std::out_of_range("x = " + std::to_string(x) + " lies outside cell " + std::to_string(j));
  }
  return std::clamp((x - center(j)) / half_size(j), -1.0, 1.0);
}

std::size_t Mesh1D::locate(double x) const {
  if (x < left() || x > right()) throw std::out_of_range("x lies outside the mesh");
  auto it = std::lower_bound(breakpoints_.begin() + 1, breakpoints_.end(), x);
  return static_cast<std::size_t>(std::min<std::ptrdiff_t>(
      it - breakpoints_.begin() - 1, static_cast<std::ptrdiff_t>(num_cells()) - 1));
}

Mesh1D uniform_mesh(std::size_t n_cells) {
  if (n_cells < 1) throw std::invalid_argument("uniform_mesh needs at least one cell");
  const double two_pi = 2.0 * std::numbers::pi;
  std::vector<double> x(n_cells + 1);
  for (std::size_t i = 0; i <= n_cells; ++i) {
    x[i] = two_pi * static_cast<double>(i) / static_cast<double>(n_cells);
  }
  x.back() = two_pi;
  return Mesh1D(std::move(x), 1.0 + 1e-9);
}

Mesh1D split_mesh(std::size_t n_cells) {
  if (n_cells < 2 || n_cells % 2 != 0) {
    throw std::invalid_argument("split_mesh needs an even cell count >= 2, got " +
                                std::to_string(n_cells));
  }
  const std::size_t half = n_cells / 2;
  const double pi = std::numbers::pi;
  const double mid = 0.5 * pi;
  std::vector<double> x(n_cells + 1);
  for (std::size_t i = 0; i <= half; ++i) {
    x[i] = mid * static_cast<double>(i) / static_cast<double>(half);
  }
  for (std::size_t i = 1; i <= half; ++i) {
    x[half + i] = mid + 1.5 * pi * static_cast<double>(i) / static_cast<double>(half);
  }
  x[half] = mid;
  x.back() = 2.0 * pi;
  return Mesh1D(std::move(x), 3.0 + 1e-9);
}

}  // namespace dgsc
