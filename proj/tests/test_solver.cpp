#include <cmath>
#include <set>

#include <gtest/gtest.h>

#include "fsweno/cases.hpp"
#include "fsweno/solver.hpp"

using namespace fsweno;

namespace {

SchemeConfig scheme(SchemeKind k, double cfl, double tol = 1e-12) {
  SchemeConfig s;
  s.kind = k;
  s.cfl = cfl;
  s.tol = tol;
  return s;
}

SteadySolver<Euler2D> freestream(SchemeKind k) {
  const Euler2D e{1.4, EulerSource::none};
  const auto s = e.from_primitive({1.0, 3.0 * std::cos(0.17), 3.0 * std::sin(0.17), 1.0 / (1.4 * 9.0)});
  const std::vector<double> v(s.begin(), s.end());
  const Grid g = Grid::build({0.0, 1.0, 0.0, 1.0}, 12, 10);
  BoundarySet set{SideCondition::inflow(v), SideCondition::outflow(), SideCondition::inflow(v),
                  SideCondition::outflow(), {}};
  SteadySolver<Euler2D> solver(e, g, set, scheme(k, 0.5));
  solver.set_state([v](double, double) { return v; });
  return solver;
}

// Example 1 on a coarse mesh, iterated to a tight fixed point.
SteadySolver<Burgers1D> converged_burgers(SchemeKind k) {
  const CaseSpec c = case_spec(1);
  SteadySolver<Burgers1D> s(Burgers1D{}, Grid::build(c.domain, 20), c.boundary, scheme(k, k == SchemeKind::fe_jacobi ? 0.1 : 1.0, 1e-14));
  s.set_state(c.initial);
  EXPECT_EQ(s.run().outcome, Outcome::converged);
  return s;
}

}  // namespace

TEST(PseudoTime, StepExamples) {
  const Grid g1 = Grid::build({0.0, 3.5, 0.0, 0.0}, 7);
  EXPECT_DOUBLE_EQ(pseudo_time_step(1.0, {2.0, 0.0}, g1), 0.25);
  const Grid g2 = Grid::build({0.0, 7.0, 0.0, 7.0}, 7, 7);
  EXPECT_DOUBLE_EQ(pseudo_time_step(1.0, {1.0, 1.0}, g2), 0.5);
  const Grid g3 = Grid::build({-1.0, 1.0, 0.0, 0.0}, 400);
  EXPECT_NEAR(pseudo_time_step(0.1, {1.5, 0.0}, g3), 3.3333333333333335e-4, 1e-18);
}

TEST(Residue, AverageExamples) {
  EXPECT_DOUBLE_EQ(average_residue(std::vector<std::array<double, 1>>{{1e-3}, {-1e-3}}, 0.1), 0.01);
  EXPECT_EQ(average_residue(std::vector<std::array<double, 1>>{{0.0}, {0.0}}, 0.1), 0.0);
  EXPECT_DOUBLE_EQ(average_residue(std::vector<std::array<double, 4>>{{0.4, 0.0, 0.0, 0.4}}, 1.0), 0.2);
}

TEST(Sweeps, OrderingCyclesThroughFour) {
  for (long s = 0; s < 12; ++s) EXPECT_EQ(sweep_ordering(s), static_cast<int>(s % 4) + 1);
  std::set<std::pair<bool, bool>> seen;
  for (int o = 1; o <= 4; ++o) seen.insert(sweep_directions(o));
  EXPECT_EQ(seen.size(), 4u);
  EXPECT_EQ(sweep_directions(1), std::make_pair(true, true));
  EXPECT_EQ(sweep_directions(3), std::make_pair(false, false));
  EXPECT_THROW(sweep_directions(5), std::invalid_argument);
}

TEST(Config, Validation) {
  SchemeConfig s;
  EXPECT_NO_THROW(s.validate());
  s.cfl = 0.0;
  EXPECT_THROW(s.validate(), std::invalid_argument);
  s = {};
  s.threads = 0;
  EXPECT_THROW(s.validate(), std::invalid_argument);
  EXPECT_EQ(scheme_from_string("rk3-jacobi"), SchemeKind::rk3_jacobi);
  EXPECT_FALSE(scheme_from_string("rk4").has_value());
}

TEST(Freestream, OperatorVanishesOnUniformFlow) {
  auto s = freestream(SchemeKind::fe_jacobi);
  const WaveSpeeds a = wave_speeds(s.model(), s.state());
  for (const auto& l : s.residual(s.state(), a)) {
    for (double v : l) EXPECT_NEAR(v, 0.0, 1e-13);
  }
}

TEST(Freestream, EveryDriverLeavesItUnchanged) {
  for (SchemeKind k : {SchemeKind::fe_jacobi, SchemeKind::rk3_jacobi, SchemeKind::fe_sweep}) {
    auto s = freestream(k);
    const auto before = s.state().interior();
    for (int n = 0; n < 4; ++n) EXPECT_LT(s.step().resA, 1e-12);
    const auto after = s.state().interior();
    for (std::size_t p = 0; p < before.size(); ++p)
      for (int c = 0; c < 4; ++c) EXPECT_NEAR(after[p][c], before[p][c], 1e-13);
  }
}

TEST(FixedPoint, DriversShareTheSteadyState) {
  auto jac = converged_burgers(SchemeKind::fe_jacobi);
  auto rk = converged_burgers(SchemeKind::rk3_jacobi);
  auto sw = converged_burgers(SchemeKind::fe_sweep);
  const auto a = jac.state().interior(), b = rk.state().interior(), c = sw.state().interior();
  for (std::size_t p = 0; p < a.size(); ++p) {
    EXPECT_NEAR(a[p][0], c[p][0], 1e-12);
    EXPECT_NEAR(b[p][0], c[p][0], 1e-12);
  }
}

TEST(FixedPoint, OneMoreIterationBarelyMoves) {
  for (SchemeKind k : {SchemeKind::fe_jacobi, SchemeKind::rk3_jacobi, SchemeKind::fe_sweep}) {
    auto s = converged_burgers(k);
    const auto before = s.state().interior();
    const auto r = s.step();
    EXPECT_LT(r.resA, 1e-13);
    const auto after = s.state().interior();
    for (std::size_t p = 0; p < before.size(); ++p) EXPECT_NEAR(after[p][0], before[p][0], 1e-14);
  }
}

TEST(Counting, RungeKuttaStepIsThreeIterations) {
  const CaseSpec c = case_spec(1);
  SteadySolver<Burgers1D> s(Burgers1D{}, Grid::build(c.domain, 20), c.boundary, scheme(SchemeKind::rk3_jacobi, 1.0));
  s.set_state(c.initial);
  ResidueHistory h;
  SchemeConfig& cfg = s.config();
  cfg.max_iterations = 9;
  s.run(&h);
  ASSERT_EQ(h.size(), 3u);
  EXPECT_EQ(h[0].iteration, 3);
  EXPECT_EQ(h[2].iteration, 9);
  EXPECT_NEAR(h[2].time, h[0].dt + h[1].dt + h[2].dt, 1e-15);
}

TEST(History, TimeIncreasesAndSweepsCycle) {
  const CaseSpec c = case_spec(1);
  SteadySolver<Burgers1D> s(Burgers1D{}, Grid::build(c.domain, 20), c.boundary, scheme(SchemeKind::fe_sweep, 1.0));
  s.set_state(c.initial);
  ResidueHistory h;
  s.config().max_iterations = 10;
  s.run(&h);
  ASSERT_EQ(h.size(), 10u);
  for (std::size_t k = 0; k < h.size(); ++k) {
    EXPECT_EQ(h[k].ordering, static_cast<int>(k % 4) + 1);
    EXPECT_GE(h[k].resA, 0.0);
    if (k) {
      EXPECT_GT(h[k].time, h[k - 1].time);
    }
  }
}

TEST(Sweeps, ReadLiveValues) {
  // After one sweep the result differs from a Jacobi step from the same data.
  const CaseSpec c = case_spec(1);
  SteadySolver<Burgers1D> a(Burgers1D{}, Grid::build(c.domain, 20), c.boundary, scheme(SchemeKind::fe_sweep, 1.0));
  SteadySolver<Burgers1D> b(Burgers1D{}, Grid::build(c.domain, 20), c.boundary, scheme(SchemeKind::fe_jacobi, 1.0));
  a.set_state(c.initial);
  b.set_state(c.initial);
  a.step();
  b.step();
  // Ordering 1 runs left to right: the first point sees no updated neighbour.
  EXPECT_EQ(a.state()(1)[0], b.state()(1)[0]);
  EXPECT_NE(a.state()(10)[0], b.state()(10)[0]);
}

TEST(Sweeps, IncrementsMatchTheResidueFormula) {
  const CaseSpec c = case_spec(1);
  SteadySolver<Burgers1D> s(Burgers1D{}, Grid::build(c.domain, 20), c.boundary, scheme(SchemeKind::fe_sweep, 1.0));
  s.set_state(c.initial);
  const auto before = s.state().interior();
  const auto r = s.step();
  const auto after = s.state().interior();
  double sum = 0.0;
  for (std::size_t p = 0; p < before.size(); ++p) sum += std::abs(after[p][0] - before[p][0]);
  EXPECT_NEAR(r.resA, sum / (before.size() * r.dt), 1e-12 * r.resA);
}

TEST(Threads, JacobiResultIsIndependentOfThreadCount) {
  const CaseSpec c = case_spec(4);
  const Euler2D e{1.4, EulerSource::cosine};
  SchemeConfig one = scheme(SchemeKind::rk3_jacobi, 1.0), four = one;
  four.threads = 4;
  SteadySolver<Euler2D> a(e, Grid::build(c.domain, 12, 12), c.boundary, one);
  SteadySolver<Euler2D> b(e, Grid::build(c.domain, 12, 12), c.boundary, four);
  a.set_state(c.initial);
  b.set_state(c.initial);
  for (int n = 0; n < 3; ++n) EXPECT_EQ(a.step().resA, b.step().resA);
  EXPECT_EQ(a.state().interior(), b.state().interior());
}

TEST(Outcomes, CapAndDivergence) {
  const CaseSpec c = case_spec(1);
  SteadySolver<Burgers1D> capped(Burgers1D{}, Grid::build(c.domain, 20), c.boundary, scheme(SchemeKind::fe_jacobi, 0.1));
  capped.set_state(c.initial);
  capped.config().max_iterations = 5;
  const RunSummary r = capped.run();
  EXPECT_EQ(r.outcome, Outcome::not_convergent);
  EXPECT_EQ(r.iterations, 5);

  SteadySolver<Burgers1D> wild(Burgers1D{}, Grid::build(c.domain, 20), c.boundary, scheme(SchemeKind::fe_jacobi, 20.0));
  wild.set_state(c.initial);
  wild.config().max_iterations = 2000;
  EXPECT_EQ(wild.run().outcome, Outcome::diverged);
}

TEST(Audit, SweepFacesAgreeAtConvergence) {
  auto s = converged_burgers(SchemeKind::fe_sweep);
  s.enable_flux_audit(true);
  s.step();
  EXPECT_LT(s.flux_audit().max_x, 1e-13);
}
