#include <gtest/gtest.h>

#include <cmath>

#include "dgsc/metrics.hpp"

namespace dgsc {
namespace {

SmoothFunction cubic() {
  return SmoothFunction::from_expression([](auto x) { return 0.5 + x * (0.2 - 0.03 * x * x); });
}

TEST(Metrics, ExactPolynomialHasNoError) {
  const MeshPtr mesh = share(split_mesh(8));
  const ModalField uh = l2_project(cubic(), mesh, 3);
  for (double e : all_errors(uh, cubic())) EXPECT_LE(e, 1e-13);
}

TEST(Metrics, SingleDownwindMismatch) {
  const MeshPtr mesh = share(uniform_mesh(16));
  ModalField uh = l2_project(cubic(), mesh, 3);
  const double delta = 1e-3;
  // Shifting the top mode moves this cell's downwind value only.
  uh(5, 3) += delta;
  const auto [e1, e2] = downwind_errors(uh, cubic());
  EXPECT_NEAR(e1, delta, 1e-14);
  EXPECT_NEAR(e2, delta / 4.0, 1e-14);
  EXPECT_LE(e2, e1);
  EXPECT_LE(domain_average_error(uh, cubic()), 1e-14);
  EXPECT_LE(cell_average_error(uh, cubic()), 1e-14);
}

TEST(Metrics, ConstantOffset) {
  const MeshPtr mesh = share(split_mesh(6));
  ModalField uh = l2_project(cubic(), mesh, 3);
  const double delta = 2e-4;
  for (std::size_t j = 0; j < mesh->num_cells(); ++j) uh(j, 0) += delta;
  const ErrorSet e = all_errors(uh, cubic());
  EXPECT_NEAR(e[0], delta, 1e-13);
  EXPECT_NEAR(e[1], delta, 1e-13);
  EXPECT_NEAR(e[2], delta, 1e-13);
  EXPECT_LE(e[3], 1e-13);
  EXPECT_NEAR(e[4], delta, 1e-13);
  EXPECT_NEAR(e[5], delta, 1e-13);
}

TEST(Metrics, RadauPointErrorsVanishForPolynomialsInTheSpace) {
  const MeshPtr mesh = share(split_mesh(4));
  const SmoothFunction p = cubic();
  const auto [e4, e5] = radau_errors(l2_project(p, mesh, 3), p, p.derivative());
  EXPECT_LE(e4, 1e-13);
  EXPECT_LE(e5, 1e-13);
}

TEST(Rates, LogRatioOfDoublings) {
  ErrorSet a{};
  ErrorSet b{};
  a.fill(1e-2);
  b.fill(1.25e-3);
  const ErrorReport r = rates({8, 16}, {a, b});
  ASSERT_EQ(r.rates.size(), 2u);
  for (std::size_t m = 0; m < kNumMetrics; ++m) {
    EXPECT_FALSE(r.rates[0][m].has_value());
    ASSERT_TRUE(r.rates[1][m].has_value());
    EXPECT_NEAR(*r.rates[1][m], 3.0, 1e-14);
    EXPECT_NEAR(*r.last_rate(m), 3.0, 1e-14);
  }
}

TEST(Rates, EntriesBelowNoiseFloorAreExcluded) {
  ErrorSet a{};
  ErrorSet b{};
  a.fill(1e-10);
  b.fill(1e-12);
  b[2] = 5e-14;
  const ErrorReport r = rates({4, 8}, {a, b});
  EXPECT_TRUE(r.unreliable(1, 2));
  EXPECT_FALSE(r.unreliable(1, 1));
  EXPECT_FALSE(r.rates[1][2].has_value());
  EXPECT_NEAR(*r.rates[1][0], std::log2(100.0), 1e-12);
}

TEST(Rates, RequireDoublingSequence) {
  const ErrorSet e{};
  EXPECT_THROW(rates({8, 12}, {e, e}), std::invalid_argument);
  EXPECT_THROW(rates({8, 16}, {e}), std::invalid_argument);
  EXPECT_NO_THROW(rates({8}, {e}));
}

}  // namespace
}  // namespace dgsc
