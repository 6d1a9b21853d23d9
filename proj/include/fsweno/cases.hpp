#pragma once

/// Benchmark registry: the thirteen steady problems with their geometry,
/// initial guesses, boundary sets and reference table rows, plus error norms
/// and accuracy tables for the cases with a known steady solution.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "fsweno/boundary.hpp"
#include "fsweno/grid.hpp"
#include "fsweno/models.hpp"
#include "fsweno/solver.hpp"

namespace fsweno {

/// One reference table row. `iterations` is empty for "Not convergent" rows.
struct ReferenceRow {
  SchemeKind scheme = SchemeKind::fe_sweep;
  double cfl = 1.0;
  int n = 0;
  std::optional<long> iterations;
  double l1 = std::numeric_limits<double>::quiet_NaN();
  double linf = std::numeric_limits<double>::quiet_NaN();
  double final_time = std::numeric_limits<double>::quiet_NaN();
};

enum class Preset { full, desk };

/// Outer boundary of the two shock cases: wrap around, or hold the initial
/// states in the ghost points.
enum class ShockBoundary { periodic, dirichlet };

struct CaseOptions {
  ModelParams params{};
  ShockBoundary shock_boundary = ShockBoundary::dirichlet;
};

struct CaseSpec {
  int id = 0;
  std::string name;
  ModelId model = ModelId::burgers1d_src;
  ModelParams params{};
  Rect domain{};
  int nx = 0;
  std::optional<int> ny;
  double tol = 1e-12;
  /// Reduced grid and tolerance used by quick runs.
  int desk_nx = 0;
  std::optional<int> desk_ny;
  double desk_tol = 1e-12;
  /// CFL of the default fast sweeping run.
  double cfl = 1.0;
  PointFunction initial;
  BoundarySet boundary;
  std::optional<PointFunction> exact;
  /// Component compared against the exact solution (density for Euler).
  int error_component = 0;
  /// Mesh sequence of the accuracy table (N, or N x N in 2D).
  std::vector<int> meshes;
  std::vector<ReferenceRow> reference;

  int dims() const { return ny ? 2 : 1; }
  std::string grid_label() const { return ny ? std::to_string(nx) + "x" + std::to_string(*ny) : std::to_string(nx); }
};

inline constexpr int kCaseCount = 13;

namespace detail {

inline std::vector<double> conserved(const Euler2D& e, double rho, double u, double v, double p) {
  const auto s = e.from_primitive({rho, u, v, p});
  return {s.begin(), s.end()};
}

inline PointFunction constant(std::vector<double> s) {
  return [s = std::move(s)](double, double) { return s; };
}

/// Rows of a Tables 1-5 style block: n, L1, Linf, iterations.
struct AccuracyEntry {
  int n;
  double l1;
  double linf;
  long iterations;
};

inline void add_block(std::vector<ReferenceRow>& out, SchemeKind k, double cfl, std::initializer_list<AccuracyEntry> rows) {
  for (const auto& r : rows) out.push_back({k, cfl, r.n, r.iterations, r.l1, r.linf, std::numeric_limits<double>::quiet_NaN()});
}

/// Rows of a Tables 6-13 style block: cfl, iterations (or none), final time.
struct SteadyEntry {
  double cfl;
  long iterations;  // 0 marks "Not convergent"
  double time;
};

inline void add_block(std::vector<ReferenceRow>& out, SchemeKind k, int n, std::initializer_list<SteadyEntry> rows) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (const auto& r : rows) {
    out.push_back({k, r.cfl, n, r.iterations > 0 ? std::optional<long>(r.iterations) : std::nullopt, nan, nan,
                   r.iterations > 0 ? r.time : nan});
  }
}

inline CaseSpec plate_case(int id, std::string name, Rect domain, int nx, int ny, double tol,
                           std::vector<Plate> plates, double cfl, const ModelParams& params) {
  CaseSpec c;
  c.id = id;
  c.name = std::move(name);
  c.model = ModelId::euler2d;
  c.params = params;
  c.domain = domain;
  c.nx = nx;
  c.ny = ny;
  c.tol = tol;
  c.desk_nx = nx / 2;
  c.desk_ny = ny / 2;
  c.desk_tol = 1e-10;
  c.cfl = cfl;
  const Euler2D e{params.gamma, EulerSource::none};
  const double attack = 10.0 * std::numbers::pi / 180.0;
  const double mach = 3.0;
  const auto free = conserved(e, 1.0, std::cos(attack), std::sin(attack), 1.0 / (params.gamma * mach * mach));
  c.initial = constant(free);
  c.boundary.left = SideCondition::inflow(free);
  c.boundary.bottom = SideCondition::inflow(free);
  c.boundary.right = SideCondition::outflow_constant();
  c.boundary.top = SideCondition::outflow_constant();
  c.boundary.plates = std::move(plates);
  c.error_component = 0;
  return c;
}

}  // namespace detail

/// Full problem statement of case `id` (1..13).
inline CaseSpec case_spec(int id, const CaseOptions& opts = {}) {
  using detail::add_block;
  using enum SchemeKind;
  const ModelParams& params = opts.params;
  const double pi = std::numbers::pi;
  CaseSpec c;
  c.id = id;
  c.params = params;

  switch (id) {
    case 1: {
      c.name = "burgers-1d-source";
      c.model = ModelId::burgers1d_src;
      c.domain = {pi / 4.0, 3.0 * pi / 4.0, 0.0, 0.0};
      c.nx = c.desk_nx = 40;
      c.tol = c.desk_tol = 1e-13;
      c.initial = [](double x, double) { return std::vector<double>{2.0 * std::sin(x)}; };
      c.exact = exact_solution(c.model, params);
      // Inflow: the steady profile sin(x) continued through the ghost points.
      c.boundary.left = SideCondition::dirichlet(*c.exact);
      c.boundary.right = SideCondition::outflow();
      c.meshes = {10, 20, 40, 80, 160, 320};
      add_block(c.reference, fe_jacobi, 0.1,
                {{10, 6.27e-7, 1.54e-6, 1153}, {20, 1.93e-8, 8.07e-8, 1458}, {40, 8.91e-10, 3.21e-9, 1749},
                 {80, 3.32e-11, 1.11e-10, 2310}, {160, 1.13e-12, 3.66e-12, 3875}, {320, 4.98e-14, 1.70e-13, 7196}});
      add_block(c.reference, rk3_jacobi, 1.0,
                {{10, 8.11e-7, 3.15e-6, 285}, {20, 2.29e-8, 1.19e-7, 330}, {40, 9.49e-10, 4.00e-9, 429},
                 {80, 3.41e-11, 1.29e-10, 630}, {160, 1.15e-12, 4.35e-12, 1137}, {320, 4.10e-14, 1.55e-13, 1953}});
      add_block(c.reference, fe_sweep, 1.0,
                {{10, 6.27e-7, 1.54e-6, 130}, {20, 1.93e-8, 8.07e-8, 142}, {40, 8.91e-10, 3.21e-9, 155},
                 {80, 3.32e-11, 1.11e-10, 210}, {160, 1.12e-12, 3.64e-12, 328}, {320, 3.64e-14, 1.22e-13, 550}});
      break;
    }
    case 2: {
      c.name = "shallow-water-1d";
      c.model = ModelId::shallow_water1d;
      c.domain = {0.0, 10.0, 0.0, 0.0};
      c.nx = c.desk_nx = 80;
      c.tol = c.desk_tol = 1e-12;
      c.exact = exact_solution(c.model, params);
      c.initial = *c.exact;
      c.boundary.left = SideCondition::dirichlet(*c.exact);
      c.boundary.right = SideCondition::dirichlet(*c.exact);
      c.meshes = {20, 40, 80, 160, 320};
      add_block(c.reference, fe_jacobi, 0.1,
                {{20, 3.53e-3, 2.12e-2, 5676}, {40, 9.31e-5, 1.37e-3, 4512}, {80, 1.58e-6, 3.45e-5, 7314},
                 {160, 1.59e-8, 4.54e-7, 13023}});
      c.reference.push_back({fe_jacobi, 0.1, 320, std::nullopt});
      add_block(c.reference, rk3_jacobi, 1.0,
                {{20, 3.53e-3, 2.12e-2, 321}, {40, 9.31e-5, 1.37e-3, 459}, {80, 1.58e-6, 3.45e-5, 741},
                 {160, 1.59e-8, 4.54e-7, 1161}, {320, 2.02e-10, 6.83e-9, 1734}});
      add_block(c.reference, fe_sweep, 1.0,
                {{20, 3.53e-3, 2.12e-2, 221}, {40, 9.31e-5, 1.37e-3, 121}, {80, 1.58e-6, 3.45e-5, 144},
                 {160, 1.59e-8, 4.54e-7, 228}, {320, 2.03e-10, 6.83e-9, 379}});
      break;
    }
    case 3: {
      c.name = "burgers-2d-source";
      c.model = ModelId::burgers2d_src;
      const double lo = pi / (4.0 * std::numbers::sqrt2), hi = 3.0 * pi / (4.0 * std::numbers::sqrt2);
      c.domain = {lo, hi, lo, hi};
      c.nx = c.desk_nx = 20;
      c.ny = c.desk_ny = 20;
      c.tol = c.desk_tol = 1e-13;
      c.initial = [](double x, double y) {
        return std::vector<double>{1.5 * std::sin((x + y) / std::numbers::sqrt2)};
      };
      c.exact = exact_solution(c.model, params);
      c.boundary.left = c.boundary.right = c.boundary.bottom = c.boundary.top = SideCondition::dirichlet(*c.exact);
      c.meshes = {10, 20, 40};
      add_block(c.reference, fe_jacobi, 0.1,
                {{10, 1.47e-8, 8.60e-8, 1054}, {20, 6.14e-10, 3.28e-9, 1317}, {40, 2.22e-11, 1.24e-10, 1850}});
      add_block(c.reference, rk3_jacobi, 1.0,
                {{10, 1.81e-8, 1.43e-7, 279}, {20, 6.87e-10, 5.12e-9, 348}, {40, 2.35e-11, 1.64e-10, 519}});
      add_block(c.reference, fe_sweep, 1.0,
                {{10, 1.81e-8, 1.43e-7, 120}, {20, 6.87e-10, 5.12e-9, 137}, {40, 2.35e-11, 1.71e-10, 182}});
      break;
    }
    case 4: {
      c.name = "euler-2d-source";
      c.model = ModelId::euler2d_src;
      c.domain = {0.0, 2.0 * pi, 0.0, 2.0 * pi};
      c.nx = c.desk_nx = 20;
      c.ny = c.desk_ny = 20;
      c.tol = c.desk_tol = 1e-12;
      c.exact = exact_solution(c.model, params);
      c.initial = *c.exact;
      c.boundary.left = c.boundary.right = c.boundary.bottom = c.boundary.top = SideCondition::dirichlet(*c.exact);
      c.meshes = {10, 20, 30, 40, 50, 60, 70, 80};
      add_block(c.reference, fe_jacobi, 0.1,
                {{10, 6.74e-4, 2.68e-3, 5817}, {20, 1.30e-5, 3.58e-5, 6804}, {30, 1.84e-6, 4.76e-6, 8583},
                 {40, 4.49e-7, 1.13e-6, 10613}, {50, 1.50e-7, 3.74e-7, 12725}, {60, 6.08e-8, 1.51e-7, 14931},
                 {70, 2.83e-8, 7.04e-8, 17068}, {80, 1.46e-8, 3.62e-8, 19093}});
      add_block(c.reference, rk3_jacobi, 1.0,
                {{10, 7.41e-4, 2.68e-3, 1746}, {20, 1.31e-5, 3.58e-5, 2037}, {30, 1.85e-6, 4.76e-6, 2568},
                 {40, 4.51e-7, 1.13e-6, 3174}, {50, 1.50e-7, 3.74e-7, 3825}, {60, 6.10e-8, 1.51e-7, 4488},
                 {70, 2.84e-8, 7.04e-8, 5130}, {80, 1.46e-8, 3.62e-8, 5739}});
      add_block(c.reference, fe_sweep, 1.0,
                {{10, 6.62e-4, 2.68e-3, 560}, {20, 1.30e-5, 3.58e-5, 653}, {30, 1.84e-6, 4.76e-6, 821},
                 {40, 4.49e-7, 1.13e-6, 1010}, {50, 1.50e-7, 3.74e-7, 1213}, {60, 6.08e-8, 1.51e-7, 1421},
                 {70, 2.83e-8, 7.04e-8, 1622}, {80, 1.46e-8, 3.62e-8, 1814}});
      break;
    }
    case 5: {
      c.name = "euler-2d";
      c.model = ModelId::euler2d_nosrc;
      c.domain = {0.0, 2.0 * pi, 0.0, 2.0 * pi};
      c.nx = c.desk_nx = 20;
      c.ny = c.desk_ny = 20;
      c.tol = c.desk_tol = 1e-12;
      c.exact = exact_solution(c.model, params);
      c.initial = *c.exact;
      c.boundary.left = c.boundary.right = c.boundary.bottom = c.boundary.top = SideCondition::dirichlet(*c.exact);
      c.meshes = {10, 20, 30, 40, 50, 60, 70, 80};
      add_block(c.reference, fe_jacobi, 0.1,
                {{10, 1.68e-3, 8.01e-3, 1233}, {20, 2.38e-5, 1.39e-4, 1393}, {30, 3.38e-6, 1.93e-5, 1684},
                 {40, 8.29e-7, 4.58e-6, 2033}, {50, 2.77e-7, 1.52e-6, 2410}, {60, 1.13e-7, 6.14e-7, 2803},
                 {70, 5.27e-8, 2.85e-7, 3219}, {80, 2.72e-8, 1.46e-7, 3628}});
      add_block(c.reference, rk3_jacobi, 1.0,
                {{10, 1.85e-3, 8.01e-3, 378}, {20, 2.45e-5, 1.39e-4, 426}, {30, 3.44e-6, 1.93e-5, 504},
                 {40, 8.40e-7, 4.58e-6, 618}, {50, 2.80e-7, 1.52e-6, 729}, {60, 1.14e-7, 6.14e-7, 852},
                 {70, 5.30e-8, 2.85e-7, 972}, {80, 2.74e-8, 1.46e-7, 1095}});
      add_block(c.reference, fe_sweep, 1.0,
                {{10, 1.65e-3, 8.01e-3, 112}, {20, 2.37e-5, 1.39e-4, 130}, {30, 3.37e-6, 1.93e-5, 155},
                 {40, 8.28e-7, 4.58e-6, 186}, {50, 2.77e-7, 1.52e-6, 220}, {60, 1.13e-7, 6.14e-7, 254},
                 {70, 5.26e-8, 2.85e-7, 290}, {80, 2.72e-8, 1.46e-7, 327}});
      break;
    }
    case 6: {
      c.name = "shock-1d";
      c.model = ModelId::euler1d;
      c.domain = {-1.0, 1.0, 0.0, 0.0};
      c.nx = c.desk_nx = 400;
      c.tol = c.desk_tol = 1e-12;
      c.cfl = 1.0;
      const ShockStates s = rankine_hugoniot_states(2.0, params.gamma);
      const std::vector<double> l(s.left_conserved.begin(), s.left_conserved.end());
      const std::vector<double> r(s.right_conserved.begin(), s.right_conserved.end());
      c.initial = [l, r](double x, double) { return x < 0.0 ? l : r; };
      if (opts.shock_boundary == ShockBoundary::periodic) {
        c.boundary.left = c.boundary.right = SideCondition::periodic();
      } else {
        c.boundary.left = SideCondition::inflow(l);
        c.boundary.right = SideCondition::inflow(r);
      }
      add_block(c.reference, fe_jacobi, 400, {{0.1, 0, 0}});
      add_block(c.reference, rk3_jacobi, 400,
                {{0.1, 80355, 8.93}, {0.2, 40515, 9.00}, {0.4, 20262, 9.00}, {1.0, 8118, 9.02}, {1.1, 7380, 9.02},
                 {1.2, 6765, 9.02}, {1.3, 0, 0}});
      add_block(c.reference, fe_sweep, 400,
                {{0.1, 26904, 8.97}, {0.2, 13164, 8.77}, {0.4, 5894, 7.86}, {0.6, 3776, 7.55}, {1.0, 2088, 6.96},
                 {1.1, 2426, 8.89}, {1.2, 0, 0}});
      break;
    }
    case 7: {
      c.name = "oblique-shock";
      c.model = ModelId::euler2d;
      c.domain = {0.0, 4.0, 0.0, 2.0};
      c.nx = c.desk_nx = 200;
      c.ny = c.desk_ny = 100;
      c.tol = c.desk_tol = 1e-12;
      c.cfl = 0.5;
      const Euler2D e{params.gamma, EulerSource::none};
      const ObliqueShockStates s = oblique_shock_states(2.0, 0.75 * pi, params.gamma);
      const auto up = detail::conserved(e, s.upstream.rho, s.upstream.u, s.upstream.v, s.upstream.p);
      const auto down = detail::conserved(e, s.downstream.rho, s.downstream.u, s.downstream.v, s.downstream.p);
      // The shock line passes (3, 0) at 135 degrees: x + y = 3.
      const PointFunction state = [up, down](double x, double y) { return x + y < 3.0 ? up : down; };
      c.initial = state;
      if (opts.shock_boundary == ShockBoundary::periodic) {
        c.boundary.left = c.boundary.right = c.boundary.bottom = c.boundary.top = SideCondition::periodic();
      } else {
        c.boundary.left = c.boundary.right = c.boundary.bottom = c.boundary.top = SideCondition::dirichlet(state);
      }
      add_block(c.reference, fe_jacobi, 200, {{0.1, 18391, 17.25}, {0.2, 0, 0}});
      add_block(c.reference, rk3_jacobi, 200, {{0.3, 19158, 17.99}, {0.4, 14244, 17.83}, {0.5, 11370, 17.79}, {0.6, 0, 0}});
      add_block(c.reference, fe_sweep, 200, {{0.3, 6105, 17.20}, {0.4, 4541, 17.06}, {0.5, 3601, 16.90}, {0.6, 0, 0}});
      break;
    }
    case 8: {
      c.name = "shock-reflection";
      c.model = ModelId::euler2d;
      c.domain = {0.0, 4.0, 0.0, 1.0};
      c.nx = c.desk_nx = 120;
      c.ny = c.desk_ny = 30;
      c.tol = c.desk_tol = 1e-12;
      c.cfl = 0.6;
      const Euler2D e{params.gamma, EulerSource::none};
      const auto inflow = detail::conserved(e, 1.0, 2.9, 0.0, 5.0 / 7.0);
      const auto above = detail::conserved(e, 1.69997, 2.61934, -0.50632, 1.52819);
      c.initial = detail::constant(inflow);
      c.boundary.left = SideCondition::inflow(inflow);
      c.boundary.top = SideCondition::inflow(above);
      c.boundary.bottom = SideCondition::slip_wall();
      c.boundary.right = SideCondition::outflow();
      add_block(c.reference, fe_jacobi, 120, {{0.1, 12046, 5.09}, {0.2, 0, 0}});
      add_block(c.reference, rk3_jacobi, 120,
                {{0.3, 11268, 4.76}, {0.4, 8454, 4.76}, {0.5, 6762, 4.76}, {0.6, 5634, 4.76}, {0.7, 0, 0}});
      add_block(c.reference, fe_sweep, 120,
                {{0.3, 3651, 4.62}, {0.4, 2722, 4.59}, {0.5, 2170, 4.57}, {0.6, 1934, 4.89}, {0.7, 0, 0}});
      break;
    }
    case 9: {
      c = detail::plate_case(9, "plate", {0.0, 10.0, -5.0, 5.0}, 200, 200, 1e-12, {{Axis::y, 0.0, 1.0, 2.0}}, 0.9,
                             params);
      add_block(c.reference, fe_jacobi, 200, {{0.1, 17337, 30.53}, {0.2, 0, 0}});
      add_block(c.reference, rk3_jacobi, 200,
                {{0.4, 13179, 30.94}, {0.5, 10488, 30.78}, {0.7, 7470, 30.69}, {1.0, 5220, 30.64}, {1.2, 4347, 30.62},
                 {1.3, 0, 0}});
      add_block(c.reference, fe_sweep, 200,
                {{0.4, 3748, 27.79}, {0.5, 2976, 27.58}, {0.7, 2384, 30.93}, {0.9, 1588, 26.48}, {1.4, 1164, 29.87},
                 {1.5, 0, 0}});
      break;
    }
    case 10: {
      c = detail::plate_case(10, "two-plates", {0.0, 10.0, -5.0, 5.0}, 200, 200, 1e-12,
                             {{Axis::y, -2.0, 2.0, 3.0}, {Axis::y, 2.0, 2.0, 3.0}}, 0.9, params);
      add_block(c.reference, fe_jacobi, 200, {{0.1, 21316, 37.53}, {0.2, 0, 0}});
      add_block(c.reference, rk3_jacobi, 200,
                {{0.3, 21072, 37.10}, {0.6, 10524, 37.06}, {1.0, 6315, 37.06}, {1.2, 5262, 37.06}, {1.3, 0, 0}});
      add_block(c.reference, fe_sweep, 200,
                {{0.6, 2836, 31.43}, {0.7, 2388, 30.88}, {0.8, 2056, 30.38}, {0.9, 1820, 30.25}, {1.3, 1476, 35.23},
                 {1.4, 0, 0}});
      break;
    }
    case 11: {
      c = detail::plate_case(11, "three-plates", {0.0, 10.0, -5.0, 5.0}, 200, 200, 1e-12,
                             {{Axis::y, -2.0, 2.0, 3.0}, {Axis::y, 0.0, 1.0, 2.0}, {Axis::y, 2.0, 2.0, 3.0}}, 0.8,
                             params);
      add_block(c.reference, fe_jacobi, 200, {{0.1, 19235, 33.88}, {0.2, 0, 0}});
      add_block(c.reference, rk3_jacobi, 200,
                {{0.3, 18636, 32.83}, {0.6, 9315, 32.82}, {1.0, 5589, 32.82}, {1.2, 4656, 32.81}, {1.3, 0, 0}});
      add_block(c.reference, fe_sweep, 200,
                {{0.5, 3292, 30.42}, {0.6, 2652, 29.41}, {0.8, 1980, 29.27}, {0.9, 1916, 31.87}, {1.1, 1432, 28.90},
                 {1.2, 0, 0}});
      break;
    }
    case 12: {
      c = detail::plate_case(12, "long-plate", {0.0, 7.0, -5.0, 5.0}, 140, 200, 1e-13, {{Axis::y, 0.0, 2.0, 7.0}}, 1.0,
                             params);
      add_block(c.reference, fe_jacobi, 140, {{0.1, 36330, 21.09}, {0.2, 0, 0}});
      add_block(c.reference, rk3_jacobi, 140,
                {{1.0, 3702, 22.76}, {1.2, 3078, 22.70}, {1.3, 2838, 22.67}, {1.4, 2637, 22.68}, {1.5, 0, 0}});
      add_block(c.reference, fe_sweep, 140, {{1.0, 1048, 19.27}, {1.2, 846, 19.04}, {1.3, 788, 18.78}, {1.4, 0, 0}});
      break;
    }
    case 13: {
      c = detail::plate_case(13, "three-long-plates", {0.0, 5.0, -5.0, 5.0}, 100, 200, 1e-13,
                             {{Axis::y, -2.0, 2.0, 5.0}, {Axis::y, 0.0, 2.0, 5.0}, {Axis::y, 2.0, 2.0, 5.0}}, 0.8,
                             params);
      add_block(c.reference, fe_jacobi, 100, {{0.1, 10497, 14.26}, {0.2, 0, 0}});
      add_block(c.reference, rk3_jacobi, 100, {{0.5, 6003, 13.59}, {0.7, 4257, 13.50}, {0.9, 3303, 13.46}, {1.0, 0, 0}});
      add_block(c.reference, fe_sweep, 100, {{0.5, 1340, 12.33}, {0.8, 824, 12.12}, {0.9, 720, 11.91}, {1.0, 0, 0}});
      break;
    }
    default: throw std::invalid_argument("unknown case id " + std::to_string(id));
  }
  return c;
}

/// One catalog line: id, name, model, default grid, tolerance.
inline std::string catalog_line(const CaseSpec& c) {
  char tol[32];
  std::snprintf(tol, sizeof tol, "%g", c.tol);
  return std::to_string(c.id) + "  " + c.name + "  " + std::string(to_string(c.model)) + "  " + c.grid_label() +
         "  tol=" + tol;
}

/// Reference row for (scheme, cfl, n), if the tables print one.
inline std::optional<ReferenceRow> find_reference(const CaseSpec& c, SchemeKind k, double cfl, int n) {
  for (const auto& r : c.reference) {
    if (r.scheme == k && std::abs(r.cfl - cfl) < 1e-9 && r.n == n) return r;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Runs

/// Interior values of a finished or in-progress run, row-major, components
/// interleaved.
struct FieldSnapshot {
  Grid grid;
  int components = 0;
  std::vector<double> values;

  double at(int point, int component) const {
    return values[static_cast<std::size_t>(point) * static_cast<std::size_t>(components) +
                  static_cast<std::size_t>(component)];
  }
};

template <int M>
FieldSnapshot snapshot(const Field<M>& f) {
  FieldSnapshot s{f.grid(), M, {}};
  s.values.reserve(static_cast<std::size_t>(f.grid().points()) * M);
  f.for_each_interior([&](int, int, const std::array<double, M>& u) { s.values.insert(s.values.end(), u.begin(), u.end()); });
  return s;
}

struct ErrorNorms {
  double l1 = 0.0;
  double linf = 0.0;
};

/// Unweighted mean and max of |numeric - exact|.
inline ErrorNorms error_norms(std::span<const double> numeric, std::span<const double> exact) {
  if (numeric.size() != exact.size()) throw std::invalid_argument("error_norms: size mismatch");
  ErrorNorms e;
  for (std::size_t k = 0; k < numeric.size(); ++k) {
    const double d = std::abs(numeric[k] - exact[k]);
    e.l1 += d;
    e.linf = std::max(e.linf, d);
  }
  if (!numeric.empty()) e.l1 /= static_cast<double>(numeric.size());
  return e;
}

/// Error of one component of a snapshot against an exact solution.
inline ErrorNorms error_norms(const FieldSnapshot& s, const PointFunction& exact, int component) {
  const Grid& g = s.grid;
  std::vector<double> num, ref;
  num.reserve(static_cast<std::size_t>(g.points()));
  ref.reserve(static_cast<std::size_t>(g.points()));
  int p = 0;
  for (int j = 1; j <= g.ny(); ++j) {
    for (int i = 1; i <= g.nx(); ++i, ++p) {
      num.push_back(s.at(p, component));
      ref.push_back(exact(g.x(i), g.y(j))[static_cast<std::size_t>(component)]);
    }
  }
  return error_norms(num, ref);
}

/// log(e_coarse / e_fine) / log(n_fine / n_coarse).
inline double convergence_order(double e_coarse, double e_fine, int n_coarse, int n_fine) {
  return std::log(e_coarse / e_fine) / std::log(static_cast<double>(n_fine) / n_coarse);
}

struct RunRequest {
  int case_id = 1;
  SchemeConfig scheme{};
  Preset preset = Preset::full;
  std::optional<int> nx;
  std::optional<int> ny;
  /// Replaces the case tolerance when set.
  std::optional<double> tol;
  CaseOptions options{};
  /// Called with the interior field every `dump_every` iterations (0 = never).
  long dump_every = 0;
  std::function<void(long iteration, const FieldSnapshot&)> dump;
};

struct CaseRun {
  CaseSpec spec;
  SchemeConfig scheme;
  RunSummary summary;
  ResidueHistory history;
  FieldSnapshot field;
  std::optional<ErrorNorms> errors;
  double wall_seconds = 0.0;
};

inline Grid case_grid(const CaseSpec& c, Preset preset, std::optional<int> nx = {}, std::optional<int> ny = {}) {
  const bool desk = preset == Preset::desk;
  const int gx = nx.value_or(desk ? c.desk_nx : c.nx);
  if (!c.ny) return Grid::build(c.domain, gx);
  // A lone nx override keeps the aspect of the default grid.
  const int base_ny = desk ? *c.desk_ny : *c.ny;
  const int base_nx = desk ? c.desk_nx : c.nx;
  const int gy = ny.value_or(nx ? std::max(1, gx * base_ny / base_nx) : base_ny);
  return Grid::build(c.domain, gx, gy);
}

/// Solver for a case, its model type fixed by the caller.
template <ConservationModel Model>
SteadySolver<Model> make_solver(const CaseSpec& c, const Model& model, const Grid& grid, const SchemeConfig& cfg) {
  SteadySolver<Model> s(model, grid, c.boundary, cfg);
  s.set_state(c.initial);
  return s;
}

inline CaseRun run_case(const RunRequest& req) {
  CaseRun out;
  out.spec = case_spec(req.case_id, req.options);
  const CaseSpec& c = out.spec;
  const Grid grid = case_grid(c, req.preset, req.nx, req.ny);
  out.scheme = req.scheme;
  out.scheme.tol = req.tol.value_or(req.preset == Preset::desk ? c.desk_tol : c.tol);

  const auto start = std::chrono::steady_clock::now();
  std::visit(
      [&](const auto& model) {
        using Model = std::decay_t<decltype(model)>;
        auto solver = make_solver(c, model, grid, out.scheme);
        typename SteadySolver<Model>::Observer observer;
        long next_dump = req.dump_every;
        if (req.dump && req.dump_every > 0) {
          // RK3 steps advance the count by three, so dump on crossing a multiple.
          observer = [&](const ResidueRecord& rec, const Field<Model::components>& f) {
            if (rec.iteration < next_dump) return;
            req.dump(rec.iteration, snapshot(f));
            next_dump = (rec.iteration / req.dump_every + 1) * req.dump_every;
          };
        }
        out.summary = solver.run(&out.history, observer);
        out.field = snapshot(solver.state());
      },
      make_model(c.model, c.params));
  out.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  if (c.exact && out.summary.outcome != Outcome::diverged) {
    out.errors = error_norms(out.field, *c.exact, c.error_component);
  }
  return out;
}

struct AccuracyRow {
  int n = 0;
  Outcome outcome = Outcome::converged;
  double l1 = 0.0;
  std::optional<double> l1_order;
  double linf = 0.0;
  std::optional<double> linf_order;
  long iterations = 0;
  double wall_seconds = 0.0;
};

/// Runs one mesh per entry (N, or N x N) and tabulates errors and orders.
/// Orders are only filled between consecutive converged rows.
inline std::vector<AccuracyRow> accuracy_table(int case_id, const SchemeConfig& scheme, const std::vector<int>& meshes,
                                               const CaseOptions& options = {}) {
  const CaseSpec c = case_spec(case_id, options);
  if (!c.exact) throw std::invalid_argument("case " + std::to_string(case_id) + " has no exact steady solution");
  std::vector<AccuracyRow> rows;
  for (int n : meshes) {
    RunRequest req;
    req.case_id = case_id;
    req.scheme = scheme;
    req.nx = n;
    if (c.ny) req.ny = n;
    req.options = options;
    const CaseRun run = run_case(req);
    AccuracyRow row;
    row.n = n;
    row.outcome = run.summary.outcome;
    row.iterations = run.summary.iterations;
    row.wall_seconds = run.wall_seconds;
    if (run.errors) {
      row.l1 = run.errors->l1;
      row.linf = run.errors->linf;
    } else {
      row.l1 = row.linf = std::numeric_limits<double>::quiet_NaN();
    }
    if (!rows.empty() && rows.back().outcome == Outcome::converged && row.outcome == Outcome::converged) {
      row.l1_order = convergence_order(rows.back().l1, row.l1, rows.back().n, n);
      row.linf_order = convergence_order(rows.back().linf, row.linf, rows.back().n, n);
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace fsweno
