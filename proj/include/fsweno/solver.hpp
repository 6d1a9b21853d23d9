#pragma once

/// Fixed-point drivers for the steady discrete problem L(u) = 0, where
///
///   L(u)_ij = -(f_{i+1/2,j} - f_{i-1/2,j}) / dx - (g_{i,j+1/2} - g_{i,j-1/2}) / dy + R(u_ij, x_i, y_j).
///
/// Jacobi drivers (forward Euler, TVD-RK3) update every point from a frozen
/// snapshot. The fast sweeping driver is Gauss-Seidel: points are visited in
/// one of four alternating orders and each update reads the newest values,
/// recomputing the fluxes it needs on the spot.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "fsweno/boundary.hpp"
#include "fsweno/flux.hpp"
#include "fsweno/grid.hpp"
#include "fsweno/models.hpp"
#include "fsweno/weno.hpp"

namespace fsweno {

enum class SchemeKind { fe_jacobi, rk3_jacobi, fe_sweep };

inline std::string_view to_string(SchemeKind k) {
  switch (k) {
    case SchemeKind::fe_jacobi: return "fe-jacobi";
    case SchemeKind::rk3_jacobi: return "rk3-jacobi";
    case SchemeKind::fe_sweep: return "fe-sweep";
  }
  return "?";
}

inline std::optional<SchemeKind> scheme_from_string(std::string_view s) {
  if (s == "fe-jacobi") return SchemeKind::fe_jacobi;
  if (s == "rk3-jacobi") return SchemeKind::rk3_jacobi;
  if (s == "fe-sweep") return SchemeKind::fe_sweep;
  return std::nullopt;
}

struct SchemeConfig {
  SchemeKind kind = SchemeKind::fe_sweep;
  double cfl = 1.0;
  double tol = 1e-12;
  long max_iterations = 100000;
  /// Diverged once max|u| exceeds this multiple of the initial max|u|.
  double divergence_factor = 1e6;
  ReconstructionConfig weno{};
  InterfaceAverage average = InterfaceAverage::roe;
  SplittingSpeed splitting = SplittingSpeed::per_field;
  /// Worker threads for the Jacobi drivers; sweeps are always sequential.
  int threads = 1;

  void validate() const {
    if (!(cfl > 0.0)) throw std::invalid_argument("cfl must be positive");
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
    if (max_iterations < 1) throw std::invalid_argument("max_iterations must be at least 1");
    if (!(divergence_factor > 0.0)) throw std::invalid_argument("divergence_factor must be positive");
    if (threads < 1) throw std::invalid_argument("threads must be at least 1");
    weno.validate();
  }
};

enum class Outcome { converged, not_convergent, diverged };

inline std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::converged: return "converged";
    case Outcome::not_convergent: return "not_convergent";
    case Outcome::diverged: return "diverged";
  }
  return "?";
}

/// One reported update. `iteration` is the cumulative count, so an RK3 step
/// advances it by three; `ordering` is 1..4 for sweeps and 0 otherwise.
struct ResidueRecord {
  long iteration = 0;
  double resA = 0.0;
  double dt = 0.0;
  double time = 0.0;
  int ordering = 0;
};

using ResidueHistory = std::vector<ResidueRecord>;

struct RunSummary {
  Outcome outcome = Outcome::not_convergent;
  long iterations = 0;
  double final_time = 0.0;
  double final_resA = std::numeric_limits<double>::quiet_NaN();
  std::string message;
};

/// dt = cfl / (alpha_x / dx + alpha_y / dy); 1D grids drop the y term.
inline double pseudo_time_step(double cfl, const WaveSpeeds& alpha, const Grid& grid) {
  double rate = alpha.alpha_x / grid.dx();
  if (grid.dim() == 2) rate += alpha.alpha_y / grid.dy();
  return cfl / rate;
}

/// Mean over points and components of |du| / dt.
template <std::size_t M>
double average_residue(std::span<const std::array<double, M>> increments, double dt) {
  if (increments.empty()) return 0.0;
  double sum = 0.0;
  for (const auto& d : increments)
    for (double v : d) sum += std::abs(v);
  return sum / (static_cast<double>(M) * static_cast<double>(increments.size()) * dt);
}

template <std::size_t M>
double average_residue(const std::vector<std::array<double, M>>& increments, double dt) {
  return average_residue(std::span<const std::array<double, M>>(increments), dt);
}

/// Ordering (1..4) used by the sweep with zero-based index `sweep`.
inline int sweep_ordering(long sweep) { return static_cast<int>(sweep % 4) + 1; }

/// Traversal directions of an ordering: (i ascending, j ascending).
inline std::pair<bool, bool> sweep_directions(int ordering) {
  switch (ordering) {
    case 1: return {true, true};
    case 2: return {false, true};
    case 3: return {false, false};
    case 4: return {true, false};
  }
  throw std::invalid_argument("sweep ordering must be 1..4");
}

namespace detail {

/// Runs fn(begin, end) over [0, n) split into contiguous chunks.
template <class Fn>
void parallel_chunks(int n, int threads, Fn&& fn) {
  threads = std::clamp(threads, 1, std::max(n, 1));
  if (threads == 1) {
    fn(0, n);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int t = 0; t < threads; ++t) {
    const int b = static_cast<int>(static_cast<long>(n) * t / threads);
    const int e = static_cast<int>(static_cast<long>(n) * (t + 1) / threads);
    pool.emplace_back([&fn, b, e] { fn(b, e); });
  }
}

}  // namespace detail

/// Largest per-axis disagreement between the two one-sided evaluations of the
/// same interface flux during the last sweep.
struct FluxAudit {
  double max_x = 0.0;
  double max_y = 0.0;
};

template <ConservationModel Model>
class SteadySolver {
 public:
  static constexpr int M = Model::components;
  using State = typename Model::State;
  using Observer = std::function<void(const ResidueRecord&, const Field<M>&)>;

  struct StepResult {
    double resA = 0.0;
    double dt = 0.0;
    int iterations = 1;
    int ordering = 0;
  };

  SteadySolver(Model model, const Grid& grid, BoundarySet bset, SchemeConfig cfg)
      : model_(std::move(model)), grid_(grid), bc_(model_, grid, std::move(bset)), cfg_(cfg), u_(grid) {
    cfg_.validate();
    if (grid.dim() != Model::dims) throw std::invalid_argument("grid dimension does not match the model");
    increments_.resize(static_cast<std::size_t>(grid.points()));
  }

  const Model& model() const { return model_; }
  const Grid& grid() const { return grid_; }
  const SchemeConfig& config() const { return cfg_; }
  SchemeConfig& config() { return cfg_; }
  const BoundaryConditions<Model>& boundary() const { return bc_; }

  Field<M>& state() { return u_; }
  const Field<M>& state() const { return u_; }

  void set_state(const PointFunction& init) {
    u_.for_each_interior([&](int i, int j, State& s) {
      const auto v = init(grid_.x(i), grid_.y(j));
      if (static_cast<int>(v.size()) != M) throw std::invalid_argument("initial state has the wrong component count");
      std::copy(v.begin(), v.end(), s.begin());
    });
    bc_.apply(u_);
  }

  void apply_boundary() { bc_.apply(u_); }

  /// Per-point increments of the last iteration, interior row-major order.
  const std::vector<State>& last_increments() const { return increments_; }

  long iterations() const { return iterations_; }
  double time() const { return time_; }
  long sweeps_done() const { return sweeps_; }
  const FluxAudit& flux_audit() const { return audit_; }
  void enable_flux_audit(bool on) { audit_on_ = on; }

  /// Flux at face k (between points k and k+1) of a grid line, as seen from
  /// the lower or upper point, using the given splitting speeds.
  State interface_flux(const Field<M>& f, Axis along, int line, int k, Perspective view,
                       const FieldSpeeds& alpha) const {
    return numerical_flux(model_, bc_.gather(f, along, line, k, view), alpha, along, cfg_.weno, cfg_.average);
  }

  /// L at interior point (i, j) from the current values of `f` (ghosts must be filled).
  State spatial_operator(const Field<M>& f, const WaveSpeeds& alpha, int i, int j = 1) const {
    State l = model_.source(f(i, j), grid_.x(i), grid_.y(j));
    add_divergence(f, alpha, Axis::x, j, i, l);
    if (grid_.dim() == 2) add_divergence(f, alpha, Axis::y, i, j, l);
    return l;
  }

  /// L over the whole interior from a snapshot, row-major.
  std::vector<State> residual(const Field<M>& f, const WaveSpeeds& alpha) const {
    std::vector<State> out(static_cast<std::size_t>(grid_.points()));
    const int nx = grid_.nx(), ny = grid_.ny();
    detail::parallel_chunks(ny, cfg_.threads, [&](int b, int e) {
      for (int j = b + 1; j <= e; ++j)
        for (int i = 1; i <= nx; ++i) out[flat(i, j)] = model_.source(f(i, j), grid_.x(i), grid_.y(j));
    });
    line_divergence(f, alpha, Axis::x, out);
    if (grid_.dim() == 2) line_divergence(f, alpha, Axis::y, out);
    return out;
  }

  std::vector<State> residual() {
    bc_.apply(u_);
    return residual(u_, wave_speeds(model_, u_));
  }

  StepResult fe_jacobi_iteration() {
    bc_.apply(u_);
    const WaveSpeeds alpha = wave_speeds(model_, u_);
    const double dt = pseudo_time_step(cfg_.cfl, alpha, grid_);
    const auto l = residual(u_, alpha);
    u_.for_each_interior([&](int i, int j, State& s) {
      auto& d = increments_[flat(i, j)];
      for (int c = 0; c < M; ++c) {
        const double next = s[c] + dt * l[flat(i, j)][c];
        d[c] = next - s[c];
        s[c] = next;
      }
    });
    return {average_residue(increments_, dt), dt, 1, 0};
  }

  StepResult rk3_jacobi_iteration() {
    bc_.apply(u_);
    const WaveSpeeds alpha0 = wave_speeds(model_, u_);
    const double dt = pseudo_time_step(cfg_.cfl, alpha0, grid_);
    const Field<M> un = u_;

    // u1 = un + dt L(un)
    auto l = residual(u_, alpha0);
    u_.for_each_interior([&](int i, int j, State& s) {
      for (int c = 0; c < M; ++c) s[c] = un(i, j)[c] + dt * l[flat(i, j)][c];
    });
    // u2 = 3/4 un + 1/4 u1 + 1/4 dt L(u1)
    bc_.apply(u_);
    l = residual(u_, wave_speeds(model_, u_));
    u_.for_each_interior([&](int i, int j, State& s) {
      for (int c = 0; c < M; ++c) s[c] = kRk2[0] * un(i, j)[c] + kRk2[1] * (s[c] + dt * l[flat(i, j)][c]);
    });
    // u^{n+1} = 1/3 un + 2/3 u2 + 2/3 dt L(u2)
    bc_.apply(u_);
    l = residual(u_, wave_speeds(model_, u_));
    u_.for_each_interior([&](int i, int j, State& s) {
      auto& d = increments_[flat(i, j)];
      for (int c = 0; c < M; ++c) {
        s[c] = kRk3[0] * un(i, j)[c] + kRk3[1] * (s[c] + dt * l[flat(i, j)][c]);
        d[c] = s[c] - un(i, j)[c];
      }
    });
    return {average_residue(increments_, dt), dt, 3, 0};
  }

  StepResult sweep_iteration(int ordering) {
    const auto [i_up, j_up] = sweep_directions(ordering);
    bc_.apply(u_);
    const WaveSpeeds alpha = wave_speeds(model_, u_);
    const double dt = pseudo_time_step(cfg_.cfl, alpha, grid_);
    if (audit_on_) start_audit();

    const int nx = grid_.nx(), ny = grid_.ny();
    for (int jj = 0; jj < ny; ++jj) {
      const int j = j_up ? jj + 1 : ny - jj;
      for (int ii = 0; ii < nx; ++ii) {
        const int i = i_up ? ii + 1 : nx - ii;
        State& s = u_(i, j);
        const State l = audit_on_ ? audited_operator(alpha, i, j) : spatial_operator(u_, alpha, i, j);
        auto& d = increments_[flat(i, j)];
        for (int c = 0; c < M; ++c) {
          const double next = s[c] + dt * l[c];
          d[c] = next - s[c];
          s[c] = next;
        }
      }
    }
    if (audit_on_) finish_audit();
    return {average_residue(increments_, dt), dt, 1, ordering};
  }

  /// One iteration of the configured scheme; sweeps advance the 4-cycle.
  StepResult step() {
    StepResult r;
    switch (cfg_.kind) {
      case SchemeKind::fe_jacobi: r = fe_jacobi_iteration(); break;
      case SchemeKind::rk3_jacobi: r = rk3_jacobi_iteration(); break;
      case SchemeKind::fe_sweep: r = sweep_iteration(sweep_ordering(sweeps_++)); break;
    }
    iterations_ += r.iterations;
    time_ += r.dt;
    return r;
  }

  /// Iterates until ResA < tol, the iteration cap, or divergence.
  RunSummary run(ResidueHistory* history = nullptr, const Observer& observer = {}) {
    RunSummary sum;
    const double guard = cfg_.divergence_factor * std::max(max_abs(), 1.0);
    try {
      while (iterations_ < cfg_.max_iterations) {
        const StepResult r = step();
        const ResidueRecord rec{iterations_, r.resA, r.dt, time_, r.ordering};
        if (history) history->push_back(rec);
        if (observer) observer(rec, u_);
        sum.final_resA = r.resA;
        const double peak = max_abs();
        if (!std::isfinite(r.resA) || !std::isfinite(peak)) {
          sum.outcome = Outcome::diverged;
          sum.message = "non-finite state";
          break;
        }
        if (peak > guard) {
          sum.outcome = Outcome::diverged;
          sum.message = "state exceeded the divergence guard";
          break;
        }
        if (r.resA < cfg_.tol) {
          sum.outcome = Outcome::converged;
          break;
        }
      }
      if (sum.outcome == Outcome::not_convergent) sum.message = "iteration cap reached";
    } catch (const DivergenceError& e) {
      sum.outcome = Outcome::diverged;
      sum.message = e.what();
    }
    sum.iterations = iterations_;
    sum.final_time = time_;
    return sum;
  }

  /// max |u| over interior points and components (NaN if any is non-finite).
  double max_abs() const {
    double m = 0.0;
    bool finite = true;
    u_.for_each_interior([&](int, int, const State& s) {
      for (double v : s) {
        if (!std::isfinite(v)) finite = false;
        m = std::max(m, std::abs(v));
      }
    });
    return finite ? m : std::numeric_limits<double>::quiet_NaN();
  }

  static constexpr std::array<double, 2> kRk2{0.75, 0.25};
  static constexpr std::array<double, 2> kRk3{1.0 / 3.0, 2.0 / 3.0};

 private:
  std::size_t flat(int i, int j) const {
    return static_cast<std::size_t>(j - 1) * static_cast<std::size_t>(grid_.nx()) + static_cast<std::size_t>(i - 1);
  }

  void add_divergence(const Field<M>& f, const WaveSpeeds& alpha, Axis along, int line, int pos, State& l) const {
    const FieldSpeeds a = alpha.splitting(along, cfg_.splitting);
    const double h = grid_.spacing(along);
    const State hi = interface_flux(f, along, line, pos, Perspective::lower, a);
    const State lo = interface_flux(f, along, line, pos - 1, Perspective::upper, a);
    for (int c = 0; c < M; ++c) l[c] -= (hi[c] - lo[c]) / h;
  }

  /// Adds the flux divergence along every grid line of one axis, computing
  /// each face flux once (twice at plate faces, one per side).
  void line_divergence(const Field<M>& f, const WaveSpeeds& alpha, Axis along, std::vector<State>& out) const {
    const Axis across = along == Axis::x ? Axis::y : Axis::x;
    const int lines = grid_.count(across);
    const int n = grid_.count(along);
    const FieldSpeeds a = alpha.splitting(along, cfg_.splitting);
    const double h = grid_.spacing(along);
    detail::parallel_chunks(lines, cfg_.threads, [&](int b, int e) {
      std::vector<State> lower(static_cast<std::size_t>(n + 1)), upper(static_cast<std::size_t>(n + 1));
      for (int line = b + 1; line <= e; ++line) {
        for (int k = 0; k <= n; ++k) {
          lower[k] = interface_flux(f, along, line, k, Perspective::lower, a);
          upper[k] = bc_.is_plate_face(along, line, k) ? interface_flux(f, along, line, k, Perspective::upper, a)
                                                       : lower[k];
        }
        for (int p = 1; p <= n; ++p) {
          State& l = along == Axis::x ? out[flat(p, line)] : out[flat(line, p)];
          for (int c = 0; c < M; ++c) l[c] -= (lower[p][c] - upper[p - 1][c]) / h;
        }
      }
    });
  }

  // Flux audit: during a sweep, each interior face flux is evaluated twice,
  // once when its lower point is updated and once for its upper point.
  void start_audit() {
    for (int a = 0; a < grid_.dim(); ++a) {
      const Axis along = static_cast<Axis>(a);
      const Axis across = along == Axis::x ? Axis::y : Axis::x;
      const std::size_t size =
          static_cast<std::size_t>(grid_.count(across)) * static_cast<std::size_t>(grid_.count(along) + 1);
      audit_lower_[a].assign(size, Field<M>::nan_state());
      audit_upper_[a].assign(size, Field<M>::nan_state());
    }
  }

  std::size_t audit_index(Axis along, int line, int k) const {
    return static_cast<std::size_t>(line - 1) * static_cast<std::size_t>(grid_.count(along) + 1) +
           static_cast<std::size_t>(k);
  }

  State audited_operator(const WaveSpeeds& alpha, int i, int j) {
    State l = model_.source(u_(i, j), grid_.x(i), grid_.y(j));
    for (int a = 0; a < grid_.dim(); ++a) {
      const Axis along = static_cast<Axis>(a);
      const int line = along == Axis::x ? j : i;
      const int pos = along == Axis::x ? i : j;
      const FieldSpeeds al = alpha.splitting(along, cfg_.splitting);
      const State hi = interface_flux(u_, along, line, pos, Perspective::lower, al);
      const State lo = interface_flux(u_, along, line, pos - 1, Perspective::upper, al);
      audit_lower_[a][audit_index(along, line, pos)] = hi;
      audit_upper_[a][audit_index(along, line, pos - 1)] = lo;
      for (int c = 0; c < M; ++c) l[c] -= (hi[c] - lo[c]) / grid_.spacing(along);
    }
    return l;
  }

  void finish_audit() {
    audit_ = {};
    for (int a = 0; a < grid_.dim(); ++a) {
      const Axis along = static_cast<Axis>(a);
      const Axis across = along == Axis::x ? Axis::y : Axis::x;
      double worst = 0.0;
      for (int line = 1; line <= grid_.count(across); ++line) {
        for (int k = 1; k < grid_.count(along); ++k) {
          if (bc_.is_plate_face(along, line, k)) continue;
          const auto& lo = audit_lower_[a][audit_index(along, line, k)];
          const auto& up = audit_upper_[a][audit_index(along, line, k)];
          for (int c = 0; c < M; ++c) worst = std::max(worst, std::abs(lo[c] - up[c]));
        }
      }
      (a == 0 ? audit_.max_x : audit_.max_y) = worst;
    }
  }

  Model model_;
  Grid grid_;
  BoundaryConditions<Model> bc_;
  SchemeConfig cfg_;
  Field<M> u_;
  std::vector<State> increments_;
  long iterations_ = 0;
  long sweeps_ = 0;
  double time_ = 0.0;
  bool audit_on_ = false;
  FluxAudit audit_;
  std::array<std::vector<State>, 2> audit_lower_;
  std::array<std::vector<State>, 2> audit_upper_;
};

}  // namespace fsweno
