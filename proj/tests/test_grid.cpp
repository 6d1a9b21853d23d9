#include <cmath>

#include <gtest/gtest.h>

#include "fsweno/grid.hpp"

using namespace fsweno;

TEST(Grid, CellCentredCoordinates) {
  const Grid g = Grid::build({-1.0, 1.0, 0.0, 0.0}, 400);
  EXPECT_EQ(g.dim(), 1);
  EXPECT_DOUBLE_EQ(g.dx(), 0.005);
  // The shock at x = 0 sits between points 200 and 201.
  EXPECT_NEAR(g.x(200), -0.0025, 1e-15);
  EXPECT_NEAR(g.x(201), 0.0025, 1e-15);
  EXPECT_NEAR(g.x(1), -0.9975, 1e-15);
  EXPECT_NEAR(g.x(0), -1.0025, 1e-15);
}

TEST(Grid, TwoDimensionalSpacing) {
  const Grid g = Grid::build({0.0, 4.0, 0.0, 1.0}, 120, 30);
  EXPECT_EQ(g.dim(), 2);
  EXPECT_DOUBLE_EQ(g.dx(), 4.0 / 120);
  EXPECT_DOUBLE_EQ(g.dy(), 1.0 / 30);
  EXPECT_EQ(g.points(), 3600);
  EXPECT_DOUBLE_EQ(g.spacing(Axis::y), g.dy());
  EXPECT_EQ(g.count(Axis::x), 120);
}

TEST(Grid, RejectsTooFewPoints) {
  EXPECT_THROW(Grid::build({0.0, 1.0, 0.0, 0.0}, 6), InvalidGrid);
  EXPECT_THROW(Grid::build({0.0, 1.0, 0.0, 1.0}, 10, 5), InvalidGrid);
  EXPECT_THROW(Grid::build({1.0, 0.0, 0.0, 0.0}, 10), InvalidGrid);
  EXPECT_NO_THROW(Grid::build({0.0, 1.0, 0.0, 0.0}, 7));
}

TEST(Field, StartsAsNaN) {
  const Field<2> f(Grid::build({0.0, 1.0, 0.0, 1.0}, 8, 8));
  EXPECT_TRUE(std::isnan(f(1, 1)[0]));
  EXPECT_TRUE(std::isnan(f(-2, -2)[1]));
}

TEST(Field, LineAccessMatchesPointAccess) {
  Field<1> f(Grid::build({0.0, 1.0, 0.0, 1.0}, 8, 9));
  f(3, 5)[0] = 42.0;
  EXPECT_EQ(f.at(Axis::x, 5, 3)[0], 42.0);
  EXPECT_EQ(f.at(Axis::y, 3, 5)[0], 42.0);
  EXPECT_EQ(&f.at(Axis::y, 3, 5), &f(3, 5));
}

TEST(Field, InteriorIsRowMajor) {
  Field<1> f(Grid::build({0.0, 1.0, 0.0, 1.0}, 7, 8));
  f.for_each_interior([](int i, int j, std::array<double, 1>& s) { s[0] = 100 * j + i; });
  const auto v = f.interior();
  ASSERT_EQ(v.size(), 56u);
  EXPECT_EQ(v[0][0], 101);
  EXPECT_EQ(v[1][0], 102);
  EXPECT_EQ(v[7][0], 201);
}
