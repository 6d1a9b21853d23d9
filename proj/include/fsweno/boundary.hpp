#pragma once

/// Ghost-point population and embedded slip plates.
///
/// Each domain side carries one condition. Ghost layers are three points deep;
/// corner ghosts are never written and stay NaN.
///
/// A plate is an infinitely thin slip wall lying on a grid interface. Windows
/// that cross it are completed with mirrored states from the near side, so the
/// plate behaves like a slip-wall boundary for both half-domains.

#include <algorithm>
#include <array>
#include <cmath>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fsweno/flux.hpp"
#include "fsweno/grid.hpp"
#include "fsweno/models.hpp"

namespace fsweno {

enum class BoundaryKind { periodic, dirichlet, outflow_extrapolate, outflow_constant, slip_wall };

struct SideCondition {
  BoundaryKind kind = BoundaryKind::outflow_extrapolate;
  /// Conserved state at ghost coordinates, for dirichlet sides.
  PointFunction state;

  static SideCondition periodic() { return {BoundaryKind::periodic, {}}; }
  static SideCondition outflow() { return {BoundaryKind::outflow_extrapolate, {}}; }
  /// Ghosts copy the boundary point.
  static SideCondition outflow_constant() { return {BoundaryKind::outflow_constant, {}}; }
  static SideCondition slip_wall() { return {BoundaryKind::slip_wall, {}}; }
  static SideCondition dirichlet(PointFunction f) { return {BoundaryKind::dirichlet, std::move(f)}; }
  /// Fixed inflow state.
  static SideCondition inflow(std::vector<double> s) {
    return {BoundaryKind::dirichlet, [s = std::move(s)](double, double) { return s; }};
  }
};

/// Slip wall on the interface line `normal` = position, spanning [from, to]
/// along the other axis.
struct Plate {
  Axis normal = Axis::y;
  double position = 0.0;
  double from = 0.0;
  double to = 0.0;
};

struct BoundarySet {
  SideCondition left;
  SideCondition right;
  SideCondition bottom;
  SideCondition top;
  std::vector<Plate> plates;
};

class InvalidBoundary : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Evaluates the degree-4 interpolant through values at t = 1..5 at each offset.
/// Written relative to the value at t = 5 so constant data comes back exactly.
inline std::array<double, 3> extrapolate_degree4(std::span<const double, 5> values,
                                                 const std::array<double, 3>& offsets = {6.0, 7.0, 8.0}) {
  std::array<double, 3> out{};
  const double base = values[4];
  for (int g = 0; g < 3; ++g) {
    const double t = offsets[g];
    double sum = 0.0;
    for (int k = 0; k < 4; ++k) {
      double basis = 1.0;
      for (int j = 0; j < 5; ++j) {
        if (j != k) basis *= (t - (j + 1)) / static_cast<double>(k - j);
      }
      sum += basis * (values[k] - base);
    }
    out[g] = base + sum;
  }
  return out;
}

/// Which point a face flux is computed for. Only matters at plate faces.
enum class Perspective { lower, upper };

/// A boundary set bound to one model and grid.
template <ConservationModel Model>
class BoundaryConditions {
 public:
  static constexpr int M = Model::components;
  using State = typename Model::State;

  BoundaryConditions(const Model& model, const Grid& grid, BoundarySet set)
      : model_(model), grid_(grid), set_(std::move(set)) {
    validate_sides();
    cache_dirichlet();
    index_plates();
  }

  const BoundarySet& set() const { return set_; }
  bool has_plates() const { return !set_.plates.empty(); }

  /// Fills all ghost layers from the current interior values.
  void apply(Field<M>& f) const {
    const int nx = grid_.nx(), ny = grid_.ny();
    for (int j = 1; j <= ny; ++j) {
      fill_side(f, Axis::x, j, false, set_.left, dirichlet_[0], j - 1);
      fill_side(f, Axis::x, j, true, set_.right, dirichlet_[1], j - 1);
    }
    if (grid_.dim() == 2) {
      for (int i = 1; i <= nx; ++i) {
        fill_side(f, Axis::y, i, false, set_.bottom, dirichlet_[2], i - 1);
        fill_side(f, Axis::y, i, true, set_.top, dirichlet_[3], i - 1);
      }
    }
  }

  /// Faces p (between points p and p+1) of plates cut by grid line `line`
  /// running along `along`.
  std::span<const int> plate_faces(Axis along, int line) const {
    const auto& table = plate_faces_[static_cast<int>(along)];
    if (table.empty()) return {};
    return table[static_cast<std::size_t>(line)];
  }

  /// Window u_{k-2..k+3} along a grid line for the face between k and k+1,
  /// with plate-crossing values replaced by mirrored near-side states.
  Window<Model> gather(const Field<M>& f, Axis along, int line, int k, Perspective view) const {
    Window<Model> w;
    for (int m = 0; m < 6; ++m) w[m] = f.at(along, line, k - 2 + m);
    if (!has_plates()) return w;
    for (int p : plate_faces(along, line)) {
      if (p < k - 2 || p > k + 2) continue;
      const bool near_lower = p > k || (p == k && view == Perspective::lower);
      if constexpr (ReflectingModel<Model>) {
        if (near_lower) {
          for (int r = p + 1; r <= k + 3; ++r) w[r - (k - 2)] = model_.reflect(f.at(along, line, 2 * p + 1 - r), along);
        } else {
          for (int r = k - 2; r <= p; ++r) w[r - (k - 2)] = model_.reflect(f.at(along, line, 2 * p + 1 - r), along);
        }
      }
    }
    return w;
  }

  /// True when the flux at face k of this line depends on the perspective.
  bool is_plate_face(Axis along, int line, int k) const {
    for (int p : plate_faces(along, line)) {
      if (p == k) return true;
    }
    return false;
  }

 private:
  void validate_sides() const {
    const auto periodic = [](const SideCondition& s) { return s.kind == BoundaryKind::periodic; };
    if (periodic(set_.left) != periodic(set_.right)) {
      throw InvalidBoundary("periodic must be set on both left and right sides");
    }
    if (grid_.dim() == 2 && periodic(set_.bottom) != periodic(set_.top)) {
      throw InvalidBoundary("periodic must be set on both bottom and top sides");
    }
    const auto check = [&](const SideCondition& s) {
      if (s.kind == BoundaryKind::dirichlet && !s.state) throw InvalidBoundary("dirichlet side without a state");
      if (s.kind == BoundaryKind::slip_wall && !ReflectingModel<Model>) {
        throw InvalidBoundary("slip wall needs a model with momentum components");
      }
    };
    check(set_.left);
    check(set_.right);
    if (grid_.dim() == 2) {
      check(set_.bottom);
      check(set_.top);
    }
  }

  State evaluate(const PointFunction& fn, double x, double y) const {
    const std::vector<double> v = fn(x, y);
    if (static_cast<int>(v.size()) != M) throw InvalidBoundary("boundary state has the wrong component count");
    State s{};
    std::copy(v.begin(), v.end(), s.begin());
    return s;
  }

  void cache_dirichlet() {
    const int nx = grid_.nx(), ny = grid_.ny();
    const auto cache_x = [&](const SideCondition& s, bool high, std::vector<std::array<State, 3>>& out) {
      if (s.kind != BoundaryKind::dirichlet) return;
      for (int j = 1; j <= ny; ++j) {
        std::array<State, 3> g;
        for (int d = 1; d <= 3; ++d) g[d - 1] = evaluate(s.state, grid_.x(high ? nx + d : 1 - d), grid_.y(j));
        out.push_back(g);
      }
    };
    const auto cache_y = [&](const SideCondition& s, bool high, std::vector<std::array<State, 3>>& out) {
      if (s.kind != BoundaryKind::dirichlet) return;
      for (int i = 1; i <= nx; ++i) {
        std::array<State, 3> g;
        for (int d = 1; d <= 3; ++d) g[d - 1] = evaluate(s.state, grid_.x(i), grid_.y(high ? ny + d : 1 - d));
        out.push_back(g);
      }
    };
    cache_x(set_.left, false, dirichlet_[0]);
    cache_x(set_.right, true, dirichlet_[1]);
    if (grid_.dim() == 2) {
      cache_y(set_.bottom, false, dirichlet_[2]);
      cache_y(set_.top, true, dirichlet_[3]);
    }
  }

  void index_plates() {
    if (set_.plates.empty()) return;
    if (grid_.dim() != 2) throw InvalidBoundary("plates need a 2D grid");
    if constexpr (!ReflectingModel<Model>) {
      throw InvalidBoundary("plates need a model with momentum components");
    }
    const Rect& b = grid_.bounds();
    for (const Plate& plate : set_.plates) {
      const Axis along = plate.normal;
      const Axis across = along == Axis::x ? Axis::y : Axis::x;
      const double lo = along == Axis::x ? b.xmin : b.ymin;
      const double hi = along == Axis::x ? b.xmax : b.ymax;
      const double alo = across == Axis::x ? b.xmin : b.ymin;
      const double ahi = across == Axis::x ? b.xmax : b.ymax;
      const double h = grid_.spacing(along);
      const double units = (plate.position - lo) / h;
      const int face = static_cast<int>(std::lround(units));
      if (std::abs(units - face) > 1e-9 || face < 1 || face >= grid_.count(along) || plate.position >= hi) {
        throw InvalidBoundary("plate must lie on an interior grid interface");
      }
      const double tol = 1e-9 * grid_.spacing(across);
      if (!(plate.to > plate.from) || plate.from < alo - tol || plate.to > ahi + tol) {
        throw InvalidBoundary("plate extent outside the domain");
      }
      auto& table = plate_faces_[static_cast<int>(along)];
      if (table.empty()) table.resize(static_cast<std::size_t>(grid_.count(across) + 1));
      for (int line = 1; line <= grid_.count(across); ++line) {
        const double c = across == Axis::x ? grid_.x(line) : grid_.y(line);
        if (c < plate.from - tol || c > plate.to + tol) continue;
        auto& faces = table[static_cast<std::size_t>(line)];
        for (int other : faces) {
          if (std::abs(other - face) < 2 * kGhost) throw InvalidBoundary("plates closer than one stencil apart");
        }
        faces.push_back(face);
      }
    }
  }

  void fill_side(Field<M>& f, Axis along, int line, bool high, const SideCondition& side,
                 const std::vector<std::array<State, 3>>& cached, int cache_index) const {
    const int n = grid_.count(along);
    const auto ghost = [&](int d) -> State& { return f.at(along, line, high ? n + d : 1 - d); };
    const auto inner = [&](int d) -> const State& { return f.at(along, line, high ? n + 1 - d : d); };
    switch (side.kind) {
      case BoundaryKind::periodic:
        for (int d = 1; d <= 3; ++d) ghost(d) = f.at(along, line, high ? d : n + 1 - d);
        break;
      case BoundaryKind::dirichlet:
        for (int d = 1; d <= 3; ++d) ghost(d) = cached[static_cast<std::size_t>(cache_index)][d - 1];
        break;
      case BoundaryKind::slip_wall:
        if constexpr (ReflectingModel<Model>) {
          for (int d = 1; d <= 3; ++d) ghost(d) = model_.reflect(inner(d), along);
        }
        break;
      case BoundaryKind::outflow_extrapolate:
        for (int c = 0; c < M; ++c) {
          // t = 1..5 runs from the fifth-outermost point to the boundary point.
          const std::array<double, 5> v{inner(5)[c], inner(4)[c], inner(3)[c], inner(2)[c], inner(1)[c]};
          const auto g = extrapolate_degree4(v);
          for (int d = 1; d <= 3; ++d) ghost(d)[c] = g[d - 1];
        }
        break;
      case BoundaryKind::outflow_constant:
        for (int d = 1; d <= 3; ++d) ghost(d) = inner(1);
        break;
    }
  }

  Model model_;
  Grid grid_;
  BoundarySet set_;
  // left, right, bottom, top; one entry per boundary line.
  std::array<std::vector<std::array<State, 3>>, 4> dirichlet_;
  // Indexed by the axis a grid line runs along, then by line index.
  std::array<std::vector<std::vector<int>>, 2> plate_faces_;
};

/// Free-function form: binds the set to the model and grid and fills ghosts.
template <ConservationModel Model>
void apply_boundary(const Model& model, Field<Model::components>& f, const BoundarySet& set) {
  BoundaryConditions<Model>(model, f.grid(), set).apply(f);
}

}  // namespace fsweno
