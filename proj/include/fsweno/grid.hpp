#pragma once

/// Uniform structured 1D/2D point lattices with a 3-wide ghost frame.
///
/// Points are cell centred: x_i = a + (i - 1/2) dx for interior i = 1..nx.
/// Ghost indices run over -2..0 and nx+1..nx+3 (likewise in y for 2D grids).

#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fsweno {

class InvalidGrid : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Axis { x = 0, y = 1 };

/// Stencil reach of the fifth-order reconstruction on either side.
inline constexpr int kGhost = 3;
/// Smallest interior that still holds one full stencil.
inline constexpr int kMinPoints = 7;

struct Rect {
  double xmin = 0.0;
  double xmax = 1.0;
  double ymin = 0.0;
  double ymax = 0.0;

  bool operator==(const Rect&) const = default;
};

class Grid {
 public:
  Grid() = default;

  /// Builds a 1D grid when `ny` is empty, otherwise a 2D grid.
  static Grid build(const Rect& bounds, int nx, std::optional<int> ny = std::nullopt) {
    auto finite = [](double v) { return std::isfinite(v); };
    if (!finite(bounds.xmin) || !finite(bounds.xmax) || !(bounds.xmax > bounds.xmin)) {
      throw InvalidGrid("degenerate x bounds");
    }
    if (nx < kMinPoints) {
      throw InvalidGrid("nx must be at least " + std::to_string(kMinPoints));
    }
    Grid g;
    g.bounds_ = bounds;
    g.nx_ = nx;
    g.dx_ = (bounds.xmax - bounds.xmin) / nx;
    if (ny) {
      if (!finite(bounds.ymin) || !finite(bounds.ymax) || !(bounds.ymax > bounds.ymin)) {
        throw InvalidGrid("degenerate y bounds");
      }
      if (*ny < kMinPoints) {
        throw InvalidGrid("ny must be at least " + std::to_string(kMinPoints));
      }
      g.dim_ = 2;
      g.ny_ = *ny;
      g.dy_ = (bounds.ymax - bounds.ymin) / *ny;
    } else {
      g.dim_ = 1;
      g.ny_ = 1;
      g.dy_ = 0.0;
      g.bounds_.ymin = g.bounds_.ymax = 0.0;
    }
    return g;
  }

  int dim() const { return dim_; }
  int nx() const { return nx_; }
  int ny() const { return ny_; }
  double dx() const { return dx_; }
  double dy() const { return dy_; }
  const Rect& bounds() const { return bounds_; }
  int ghost() const { return kGhost; }
  int points() const { return nx_ * ny_; }

  int count(Axis a) const { return a == Axis::x ? nx_ : ny_; }
  double spacing(Axis a) const { return a == Axis::x ? dx_ : dy_; }

  double x(int i) const { return bounds_.xmin + (i - 0.5) * dx_; }
  double y(int j) const { return dim_ == 1 ? 0.0 : bounds_.ymin + (j - 0.5) * dy_; }

  /// Width of a storage row, ghosts included.
  int row_stride() const { return nx_ + 2 * kGhost; }
  std::size_t storage_size() const {
    const int rows = dim_ == 1 ? 1 : ny_ + 2 * kGhost;
    return static_cast<std::size_t>(rows) * static_cast<std::size_t>(row_stride());
  }

  /// Flat storage index of point (i, j). 1D grids ignore j.
  std::size_t index(int i, int j = 1) const {
    const int row = dim_ == 1 ? 0 : j - 1 + kGhost;
    return static_cast<std::size_t>(row) * static_cast<std::size_t>(row_stride()) +
           static_cast<std::size_t>(i - 1 + kGhost);
  }

  bool operator==(const Grid&) const = default;

 private:
  int dim_ = 1;
  int nx_ = 0;
  int ny_ = 1;
  double dx_ = 0.0;
  double dy_ = 0.0;
  Rect bounds_{};
};

/// Per-point vector of M conserved components over interior and ghost points.
/// Unset entries hold quiet NaN so stray reads surface as non-finite values.
template <int M>
class Field {
 public:
  using State = std::array<double, M>;

  Field() = default;
  explicit Field(const Grid& grid) : grid_(grid), data_(grid.storage_size(), nan_state()) {}

  const Grid& grid() const { return grid_; }

  State& operator()(int i, int j = 1) { return data_[grid_.index(i, j)]; }
  const State& operator()(int i, int j = 1) const { return data_[grid_.index(i, j)]; }

  /// Access along an axis: `pos` runs along `a`, `line` indexes the other direction.
  State& at(Axis a, int line, int pos) { return a == Axis::x ? (*this)(pos, line) : (*this)(line, pos); }
  const State& at(Axis a, int line, int pos) const {
    return a == Axis::x ? (*this)(pos, line) : (*this)(line, pos);
  }

  template <class Fn>
  void for_each_interior(Fn&& fn) {
    for (int j = 1; j <= grid_.ny(); ++j)
      for (int i = 1; i <= grid_.nx(); ++i) fn(i, j, (*this)(i, j));
  }
  template <class Fn>
  void for_each_interior(Fn&& fn) const {
    for (int j = 1; j <= grid_.ny(); ++j)
      for (int i = 1; i <= grid_.nx(); ++i) fn(i, j, (*this)(i, j));
  }

  /// Interior values in row-major order (x fastest).
  std::vector<State> interior() const {
    std::vector<State> out;
    out.reserve(static_cast<std::size_t>(grid_.points()));
    for_each_interior([&](int, int, const State& s) { out.push_back(s); });
    return out;
  }

  static State nan_state() {
    State s;
    s.fill(std::numeric_limits<double>::quiet_NaN());
    return s;
  }

 private:
  Grid grid_{};
  std::vector<State> data_;
};

}  // namespace fsweno
