#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "dgsc/field.hpp"

namespace dgsc {

/// Errors below this level are reported but never used for rates.
inline constexpr double kNoiseFloor = 1e-13;

inline constexpr std::size_t kNumMetrics = 6;
using ErrorSet = std::array<double, kNumMetrics>;

/// e1 = max_j |(u - u_h)(x_{j+1/2}^-)|, e2 = RMS of the same values.
std::pair<double, double> downwind_errors(const ModalField& uh, const SmoothFunction& exact);

/// e3 = |(1/|Omega|) int (u - u_h) dx|.
double domain_average_error(const ModalField& uh, const SmoothFunction& exact);

/// e4 = max |d/dx (u - u_h)| over interior left Radau points,
/// e5 = max |u - u_h| over interior right Radau points. Needs k >= 1.
std::pair<double, double> radau_errors(const ModalField& uh, const SmoothFunction& exact,
                                       const SmoothFunction& exact_deriv);

/// e6 = RMS over cells of the cell-average error.
double cell_average_error(const ModalField& uh, const SmoothFunction& exact);

/// All six functionals; the exact solution must provide a first-derivative jet.
ErrorSet all_errors(const ModalField& uh, const SmoothFunction& exact);

/// Errors on a doubling sequence of meshes with log2 refinement rates.
struct ErrorReport {
  std::vector<std::size_t> n;
  std::vector<ErrorSet> errors;
  /// rates[i][m] compares entry i-1 with entry i; empty for i = 0 and
  /// whenever either error is below the noise floor.
  std::vector<std::array<std::optional<double>, kNumMetrics>> rates;

  bool unreliable(std::size_t row, std::size_t metric) const {
    return errors[row][metric] < kNoiseFloor;
  }
  /// Rate of metric m on the last refinement, if present.
  std::optional<double> last_rate(std::size_t metric) const;
};

/// Builds the report; throws std::invalid_argument unless every N is twice
/// its predecessor.
ErrorReport rates(std::vector<std::size_t> n, std::vector<ErrorSet> errors);

}  // namespace dgsc
