#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "dgsc/mesh.hpp"

namespace dgsc {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(UniformMesh, Breakpoints) {
  const Mesh1D m = uniform_mesh(2);
  ASSERT_EQ(m.breakpoints().size(), 3u);
  EXPECT_EQ(m.breakpoints()[0], 0.0);
  EXPECT_DOUBLE_EQ(m.breakpoints()[1], kPi);
  EXPECT_DOUBLE_EQ(m.breakpoints()[2], 2 * kPi);

  const Mesh1D four = uniform_mesh(4);
  for (double h : four.cell_sizes()) EXPECT_NEAR(h, kPi / 2, 1e-15);

  const Mesh1D three = uniform_mesh(3);
  EXPECT_NEAR(three.center(0), kPi / 3, 1e-15);
  EXPECT_NEAR(three.center(1), kPi, 1e-15);
  EXPECT_NEAR(three.center(2), 5 * kPi / 3, 1e-15);
}

TEST(SplitMesh, CellSizes) {
  const Mesh1D two = split_mesh(2);
  EXPECT_DOUBLE_EQ(two.breakpoints()[1], kPi / 2);
  const Mesh1D four = split_mesh(4);
  EXPECT_NEAR(four.size(0), kPi / 4, 1e-15);
  EXPECT_NEAR(four.size(1), kPi / 4, 1e-15);
  EXPECT_NEAR(four.size(2), 3 * kPi / 4, 1e-15);
  EXPECT_NEAR(four.size(3), 3 * kPi / 4, 1e-15);
  for (std::size_t n : {2u, 8u, 64u, 512u}) {
    const Mesh1D m = split_mesh(n);
    EXPECT_NEAR(m.h_min(), kPi / static_cast<double>(n), 1e-14);
    EXPECT_NEAR(m.h_max() / m.h_min(), 3.0, 1e-12);
    std::set<long> distinct;
    for (double h : m.cell_sizes()) distinct.insert(std::lround(h / m.h_min() * 1e6));
    EXPECT_EQ(distinct.size(), 2u);
    double total = 0.0;
    for (double h : m.cell_sizes()) total += h;
    EXPECT_NEAR(total, 2 * kPi, 1e-12);
  }
}

TEST(SplitMesh, RejectsOddCount) {
  EXPECT_THROW(split_mesh(3), std::invalid_argument);
  EXPECT_THROW(split_mesh(0), std::invalid_argument);
}

TEST(Mesh1D, RejectsBadBreakpoints) {
  EXPECT_THROW(Mesh1D({0.0}), std::invalid_argument);
  EXPECT_THROW(Mesh1D({0.0, 1.0, 1.0}), std::invalid_argument);
  EXPECT_THROW(Mesh1D({0.0, 1.0, 11.0}, 2.0), std::invalid_argument);
  EXPECT_NO_THROW(Mesh1D({-1.0, 1.0}));
}

TEST(Mesh1D, ReferenceMap) {
  const Mesh1D m = split_mesh(8);
  for (std::size_t j = 0; j < m.num_cells(); ++j) {
    EXPECT_NEAR(m.to_reference(j, m.cell_left(j)), -1.0, 1e-15);
    EXPECT_NEAR(m.to_reference(j, m.center(j)), 0.0, 1e-15);
    EXPECT_NEAR(m.to_reference(j, m.cell_right(j)), 1.0, 1e-15);
  }
  EXPECT_THROW(m.to_reference(0, m.cell_right(1)), std::out_of_range);
}

TEST(Mesh1D, ReferenceRoundTrip) {
  const Mesh1D m = split_mesh(16);
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 500; ++i) {
    const auto j = static_cast<std::size_t>(rng() % m.num_cells());
    const double x = m.cell_left(j) + unit(rng) * m.size(j);
    EXPECT_NEAR(m.to_physical(j, m.to_reference(j, x)), x, 1e-14);
    EXPECT_EQ(m.locate(x), j);
  }
}

}  // namespace
}  // namespace dgsc
