#include <cmath>

#include <gtest/gtest.h>

#include "fsweno/boundary.hpp"

using namespace fsweno;

namespace {

Field<1> ramp(const Grid& g) {
  Field<1> f(g);
  f.for_each_interior([](int i, int j, std::array<double, 1>& s) { s[0] = i + 100.0 * (j - 1); });
  return f;
}

BoundarySet all_periodic() {
  return {SideCondition::periodic(), SideCondition::periodic(), SideCondition::periodic(),
          SideCondition::periodic(), {}};
}

}  // namespace

TEST(Extrapolation, Examples) {
  const std::array<double, 5> c{4.0, 4.0, 4.0, 4.0, 4.0};
  for (double v : extrapolate_degree4(c)) EXPECT_NEAR(v, 4.0, 1e-13);
  const std::array<double, 5> t{1, 2, 3, 4, 5};
  const auto g = extrapolate_degree4(t);
  EXPECT_NEAR(g[0], 6.0, 1e-13);
  EXPECT_NEAR(g[1], 7.0, 1e-13);
  EXPECT_NEAR(g[2], 8.0, 1e-12);
  const std::array<double, 5> t4{1, 16, 81, 256, 625};
  EXPECT_NEAR(extrapolate_degree4(t4)[0], 1296.0, 1e-10);
}

TEST(Periodic, WrapsInOneDimension) {
  const Grid g = Grid::build({0.0, 1.0, 0.0, 0.0}, 10);
  Field<1> f = ramp(g);
  apply_boundary(Burgers1D{}, f, {SideCondition::periodic(), SideCondition::periodic(), {}, {}, {}});
  EXPECT_EQ(f(0)[0], 10);
  EXPECT_EQ(f(-1)[0], 9);
  EXPECT_EQ(f(-2)[0], 8);
  EXPECT_EQ(f(11)[0], 1);
  EXPECT_EQ(f(12)[0], 2);
  EXPECT_EQ(f(13)[0], 3);
}

TEST(Periodic, CommutesWithCyclicShift) {
  const Grid g = Grid::build({0.0, 1.0, 0.0, 0.0}, 9);
  Field<1> a = ramp(g), b(g);
  b.for_each_interior([&](int i, int, std::array<double, 1>& s) { s = a(i % 9 + 1); });
  const BoundarySet set{SideCondition::periodic(), SideCondition::periodic(), {}, {}, {}};
  apply_boundary(Burgers1D{}, a, set);
  apply_boundary(Burgers1D{}, b, set);
  for (int i = -2; i <= 9; ++i) EXPECT_EQ(b(i)[0], a(i + 1)[0]);
}

TEST(Periodic, MustBePaired) {
  const Grid g = Grid::build({0.0, 1.0, 0.0, 0.0}, 10);
  EXPECT_THROW(BoundaryConditions<Burgers1D>(Burgers1D{}, g, {SideCondition::periodic(), SideCondition::outflow(), {}, {}, {}}),
               InvalidBoundary);
}

TEST(Outflow, QuarticIsExtrapolatedExactly) {
  const Grid g = Grid::build({0.0, 1.0, 0.0, 0.0}, 12);
  Field<1> f(g);
  f.for_each_interior([&](int i, int, std::array<double, 1>& s) { s[0] = std::pow(g.x(i), 4); });
  apply_boundary(Burgers1D{}, f, {SideCondition::outflow(), SideCondition::outflow(), {}, {}, {}});
  for (int d = 1; d <= 3; ++d) {
    EXPECT_NEAR(f(12 + d)[0], std::pow(g.x(12 + d), 4), 1e-13);
    EXPECT_NEAR(f(1 - d)[0], std::pow(g.x(1 - d), 4), 1e-13);
  }
}

TEST(Outflow, ConstantCopiesTheBoundaryPoint) {
  const Grid g = Grid::build({0.0, 1.0, 0.0, 0.0}, 10);
  Field<1> f = ramp(g);
  apply_boundary(Burgers1D{}, f, {SideCondition::outflow_constant(), SideCondition::outflow_constant(), {}, {}, {}});
  for (int d = 1; d <= 3; ++d) {
    EXPECT_EQ(f(1 - d)[0], 1.0);
    EXPECT_EQ(f(10 + d)[0], 10.0);
  }
}

TEST(Dirichlet, EvaluatesAtGhostCoordinates) {
  const Grid g = Grid::build({0.0, 1.0, 0.0, 0.0}, 10);
  Field<1> f = ramp(g);
  const PointFunction exact = [](double x, double) { return std::vector<double>{3.0 * x}; };
  apply_boundary(Burgers1D{}, f, {SideCondition::dirichlet(exact), SideCondition::inflow({-1.0}), {}, {}, {}});
  EXPECT_NEAR(f(0)[0], 3.0 * g.x(0), 1e-15);
  EXPECT_NEAR(f(-2)[0], 3.0 * g.x(-2), 1e-15);
  EXPECT_EQ(f(11)[0], -1.0);
  EXPECT_EQ(f(13)[0], -1.0);
}

TEST(Dirichlet, RequiresAState) {
  const Grid g = Grid::build({0.0, 1.0, 0.0, 0.0}, 10);
  EXPECT_THROW(BoundaryConditions<Burgers1D>(Burgers1D{}, g, {SideCondition::dirichlet({}), SideCondition::outflow(), {}, {}, {}}),
               InvalidBoundary);
}

TEST(SlipWall, MirrorsWithNormalMomentumNegated) {
  const Euler2D e{1.4, EulerSource::none};
  const Grid g = Grid::build({0.0, 1.0, 0.0, 1.0}, 8, 8);
  Field<4> f(g);
  f.for_each_interior([&](int, int j, Euler2D::State& s) { s = {1.0, 1.0, 0.25 * j, 3.0}; });
  apply_boundary(e, f, {SideCondition::outflow(), SideCondition::outflow(), SideCondition::slip_wall(),
                        SideCondition::outflow(), {}});
  for (int i = 1; i <= 8; ++i) {
    EXPECT_EQ(f(i, 0), (Euler2D::State{1.0, 1.0, -0.25, 3.0}));
    EXPECT_EQ(f(i, -1), (Euler2D::State{1.0, 1.0, -0.5, 3.0}));
    EXPECT_EQ(f(i, -2), (Euler2D::State{1.0, 1.0, -0.75, 3.0}));
  }
}

TEST(SlipWall, NeedsMomentum) {
  const Grid g = Grid::build({0.0, 1.0, 0.0, 0.0}, 10);
  EXPECT_THROW(BoundaryConditions<Burgers1D>(Burgers1D{}, g, {SideCondition::slip_wall(), SideCondition::outflow(), {}, {}, {}}),
               InvalidBoundary);
}

TEST(Ghosts, FillingIsIdempotentAndLeavesCornersUnset) {
  const Grid g = Grid::build({0.0, 1.0, 0.0, 1.0}, 8, 9);
  Field<1> f = ramp(g);
  const BoundarySet set{SideCondition::outflow(), SideCondition::outflow(), SideCondition::outflow(),
                        SideCondition::outflow(), {}};
  apply_boundary(Burgers2D{}, f, set);
  const Field<1> once = f;
  apply_boundary(Burgers2D{}, f, set);
  for (int j = -2; j <= 12; ++j) {
    for (int i = -2; i <= 11; ++i) {
      const double a = once(i, j)[0], b = f(i, j)[0];
      if (std::isnan(a)) {
        EXPECT_TRUE(std::isnan(b));
      } else {
        EXPECT_EQ(a, b);
      }
    }
  }
  EXPECT_TRUE(std::isnan(f(0, 0)[0]));
  EXPECT_TRUE(std::isnan(f(9, 10)[0]));
  EXPECT_TRUE(std::isnan(f(-2, 12)[0]));
}

TEST(Periodic, TwoDimensionalWrap) {
  const Grid g = Grid::build({0.0, 1.0, 0.0, 1.0}, 7, 8);
  Field<1> f = ramp(g);
  apply_boundary(Burgers2D{}, f, all_periodic());
  EXPECT_EQ(f(0, 3)[0], f(7, 3)[0]);
  EXPECT_EQ(f(4, 0)[0], f(4, 8)[0]);
  EXPECT_EQ(f(4, 11)[0], f(4, 3)[0]);
}

TEST(Plates, ValidatePlacement) {
  const Euler2D e{1.4, EulerSource::none};
  const Grid g = Grid::build({0.0, 10.0, -5.0, 5.0}, 20, 20);
  const auto with = [](std::vector<Plate> p) {
    return BoundarySet{SideCondition::outflow(), SideCondition::outflow(), SideCondition::outflow(),
                       SideCondition::outflow(), std::move(p)};
  };
  EXPECT_NO_THROW(BoundaryConditions<Euler2D>(e, g, with({{Axis::y, 0.0, 1.0, 2.0}})));
  // Not on an interface (dy = 0.5).
  EXPECT_THROW(BoundaryConditions<Euler2D>(e, g, with({{Axis::y, 0.25, 1.0, 2.0}})), InvalidBoundary);
  // On the domain edge.
  EXPECT_THROW(BoundaryConditions<Euler2D>(e, g, with({{Axis::y, 5.0, 1.0, 2.0}})), InvalidBoundary);
  // Outside in x.
  EXPECT_THROW(BoundaryConditions<Euler2D>(e, g, with({{Axis::y, 0.0, 9.0, 11.0}})), InvalidBoundary);
  // Closer than one stencil.
  EXPECT_THROW(BoundaryConditions<Euler2D>(e, g, with({{Axis::y, 0.0, 1.0, 2.0}, {Axis::y, 1.0, 1.0, 2.0}})),
               InvalidBoundary);
  EXPECT_THROW(BoundaryConditions<Burgers2D>(Burgers2D{}, g, with({{Axis::y, 0.0, 1.0, 2.0}})), InvalidBoundary);
}

TEST(Plates, WindowsAreCompletedByMirroring) {
  const Euler2D e{1.4, EulerSource::none};
  const Grid g = Grid::build({0.0, 10.0, -5.0, 5.0}, 20, 20);
  const BoundarySet set{SideCondition::outflow(), SideCondition::outflow(), SideCondition::outflow(),
                        SideCondition::outflow(), {{Axis::y, 0.0, 1.0, 2.0}}};
  const BoundaryConditions<Euler2D> bc(e, g, set);
  Field<4> f(g);
  f.for_each_interior([](int i, int j, Euler2D::State& s) { s = {1.0 + j, 0.1 * i, 0.2 * j, 10.0}; });
  bc.apply(f);

  // x = 1.25 and 1.75 (i = 3, 4) cross the plate at face j = 10 (y = 0).
  ASSERT_EQ(bc.plate_faces(Axis::y, 3).size(), 1u);
  EXPECT_EQ(bc.plate_faces(Axis::y, 3)[0], 10);
  EXPECT_TRUE(bc.plate_faces(Axis::y, 5).empty());
  EXPECT_TRUE(bc.is_plate_face(Axis::y, 4, 10));

  // Face 9 seen from below: points 11, 12 are replaced by mirrors of 10, 9.
  const auto w = bc.gather(f, Axis::y, 3, 9, Perspective::lower);
  EXPECT_EQ(w[0], f(3, 7));
  EXPECT_EQ(w[3], f(3, 10));
  EXPECT_EQ(w[4], e.reflect(f(3, 10), Axis::y));
  EXPECT_EQ(w[5], e.reflect(f(3, 9), Axis::y));

  // The plate face itself from above uses mirrors of 11, 12, 13.
  const auto up = bc.gather(f, Axis::y, 3, 10, Perspective::upper);
  EXPECT_EQ(up[0], e.reflect(f(3, 13), Axis::y));
  EXPECT_EQ(up[2], e.reflect(f(3, 11), Axis::y));
  EXPECT_EQ(up[3], f(3, 11));

  // Away from the plate nothing changes.
  const auto far = bc.gather(f, Axis::y, 10, 9, Perspective::lower);
  for (int m = 0; m < 6; ++m) EXPECT_EQ(far[m], f(10, 7 + m));
}
