#pragma once

#include <cstddef>
#include <vector>

namespace dgsc {

/// Immutable one-dimensional mesh. Cell j (0-based) is
/// [breakpoints[j], breakpoints[j+1]].
class Mesh1D {
 public:
  /// General constructor. Breakpoints must be strictly increasing and the
  /// ratio of the largest to the smallest cell must not exceed
  /// quasi_uniformity.
  explicit Mesh1D(std::vector<double> breakpoints, double quasi_uniformity = 1e6);

  std::size_t num_cells() const { return sizes_.size(); }
  double left() const { return breakpoints_.front(); }
  double right() const { return breakpoints_.back(); }
  double length() const { return right() - left(); }

  const std::vector<double>& breakpoints() const { return breakpoints_; }
  const std::vector<double>& cell_sizes() const { return sizes_; }

  double cell_left(std::size_t j) const { return breakpoints_[j]; }
  double cell_right(std::size_t j) const { return breakpoints_[j + 1]; }
  double size(std::size_t j) const { return sizes_[j]; }
  double half_size(std::size_t j) const { return 0.5 * sizes_[j]; }
  double center(std::size_t j) const { return 0.5 * (breakpoints_[j] + breakpoints_[j + 1]); }

  double h_max() const { return h_max_; }
  double h_min() const { return h_min_; }
  double quasi_uniformity() const { return quasi_uniformity_; }

  /// s = (x - x_j) / hbar_j. Throws std::out_of_range if x lies outside
  /// cell j (a relative slack of 1e-14 is allowed at the end points).
  double to_reference(std::size_t j, double x) const;
  double to_physical(std::size_t j, double s) const { return center(j) + half_size(j) * s; }

  /// Index of the cell containing x; interface points go to the left cell.
  std::size_t locate(double x) const;

  bool operator==(const Mesh1D& other) const { return breakpoints_ == other.breakpoints_; }

 private:
  std::vector<double> breakpoints_;
  std::vector<double> sizes_;
  double h_max_ = 0.0;
  double h_min_ = 0.0;
  double quasi_uniformity_ = 0.0;
};

/// N equal cells on [0, 2 pi].
Mesh1D uniform_mesh(std::size_t n_cells);

/// N/2 equal cells on [0, pi/2] followed by N/2 equal cells on [pi/2, 2 pi].
Mesh1D split_mesh(std::size_t n_cells);

}  // namespace dgsc
