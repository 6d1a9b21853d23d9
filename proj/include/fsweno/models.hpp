#pragma once

/// Equation systems f(u)_x + g(u)_y = R(u, x, y) used by the benchmark cases:
/// scalar Burgers equations with sources, the 1D shallow water system over a
/// smooth bump, and the 1D/2D compressible Euler equations for an ideal gas.
///
/// Every model exposes the same compile-time surface: `components`, `dims`,
/// `State`, `flux`, `source`, `max_speed` and `eigensystem`. Systems also
/// provide `reflect` for slip walls and `roe_average` for interface states.

#include <array>
#include <cmath>
#include <concepts>
#include <functional>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fsweno/grid.hpp"

namespace fsweno {

/// Raised when a state leaves the physically admissible set (non-positive
/// density, pressure or depth) or stops being finite.
class DivergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <int M>
using Matrix = std::array<std::array<double, M>, M>;

/// Left (rows) and right (columns) eigenvectors of a flux Jacobian.
template <int M>
struct Eigensystem {
  Matrix<M> left{};
  Matrix<M> right{};
};

template <class T>
concept ConservationModel = requires(const T& model, const typename T::State& s, Axis a, double c) {
  { T::components } -> std::convertible_to<int>;
  { T::dims } -> std::convertible_to<int>;
  { model.flux(s, a) } -> std::same_as<typename T::State>;
  { model.source(s, c, c) } -> std::same_as<typename T::State>;
  { model.max_speed(s, a) } -> std::convertible_to<double>;
};

template <class T>
concept ReflectingModel = ConservationModel<T> && requires(const T& model, const typename T::State& s, Axis a) {
  { model.reflect(s, a) } -> std::same_as<typename T::State>;
};

template <class T>
concept CharacteristicModel = ConservationModel<T> && requires(const T& model, const typename T::State& s, Axis a) {
  { model.eigensystem(s, a) } -> std::same_as<Eigensystem<T::components>>;
  { model.eigenvalues(s, a) } -> std::same_as<std::array<double, T::components>>;
  { model.roe_average(s, s) } -> std::same_as<typename T::State>;
};

/// u_t + (u^2/2)_x = sin(x) cos(x)
struct Burgers1D {
  static constexpr int components = 1;
  static constexpr int dims = 1;
  using State = std::array<double, 1>;

  State flux(const State& u, Axis) const { return {0.5 * u[0] * u[0]}; }
  State source(const State&, double x, double) const { return {std::sin(x) * std::cos(x)}; }
  double max_speed(const State& u, Axis) const { return std::abs(u[0]); }
};

/// u_t + (u^2/(2 sqrt 2))_x + (u^2/(2 sqrt 2))_y = sin(s) cos(s), s = (x + y)/sqrt 2
struct Burgers2D {
  static constexpr int components = 1;
  static constexpr int dims = 2;
  using State = std::array<double, 1>;

  State flux(const State& u, Axis) const { return {std::numbers::sqrt2 * 0.25 * u[0] * u[0]}; }
  State source(const State&, double x, double y) const {
    const double s = (x + y) / std::numbers::sqrt2;
    return {std::sin(s) * std::cos(s)};
  }
  double max_speed(const State& u, Axis) const { return std::abs(u[0]) / std::numbers::sqrt2; }
};

/// (h, hu) over the bottom b(x) = 5 exp(-(2/5)(x - 5)^2); source (0, -g h b_x).
struct ShallowWater1D {
  static constexpr int components = 2;
  static constexpr int dims = 1;
  using State = std::array<double, 2>;

  double gravity = 9.812;

  static double bottom(double x) { return 5.0 * std::exp(-0.4 * (x - 5.0) * (x - 5.0)); }
  static double bottom_slope(double x) { return -0.8 * (x - 5.0) * bottom(x); }

  State flux(const State& s, Axis) const {
    const double h = s[0];
    const double u = s[1] / h;
    return {s[1], s[1] * u + 0.5 * gravity * h * h};
  }
  State source(const State& s, double x, double) const { return {0.0, -gravity * s[0] * bottom_slope(x)}; }

  double celerity(const State& s) const {
    if (!(s[0] > 0.0) || !std::isfinite(s[1])) throw DivergenceError("non-positive water depth");
    return std::sqrt(gravity * s[0]);
  }
  double max_speed(const State& s, Axis) const { return std::abs(s[1] / s[0]) + celerity(s); }

  std::array<double, 2> eigenvalues(const State& s, Axis) const {
    const double c = celerity(s);
    const double u = s[1] / s[0];
    return {u - c, u + c};
  }

  Eigensystem<2> eigensystem(const State& s, Axis) const {
    const double c = celerity(s);
    const double u = s[1] / s[0];
    Eigensystem<2> e;
    e.right = {{{1.0, 1.0}, {u - c, u + c}}};
    const double k = 0.5 / c;
    e.left = {{{k * (u + c), -k}, {-k * (u - c), k}}};
    return e;
  }

  State reflect(const State& s, Axis) const { return {s[0], -s[1]}; }

  State roe_average(const State& a, const State& b) const {
    const double ra = std::sqrt(a[0]);
    const double rb = std::sqrt(b[0]);
    const double h = 0.5 * (a[0] + b[0]);
    const double u = (a[1] / ra + b[1] / rb) / (ra + rb);
    return {h, h * u};
  }
};

struct EulerPrimitive {
  double rho = 1.0;
  double u = 0.0;
  double v = 0.0;
  double p = 1.0;
};

/// 1D Euler equations, conserved (rho, rho u, E).
struct Euler1D {
  static constexpr int components = 3;
  static constexpr int dims = 1;
  using State = std::array<double, 3>;

  double gamma = 1.4;

  State from_primitive(double rho, double u, double p) const {
    return {rho, rho * u, p / (gamma - 1.0) + 0.5 * rho * u * u};
  }
  double pressure(const State& s) const { return (gamma - 1.0) * (s[2] - 0.5 * s[1] * s[1] / s[0]); }

  State flux(const State& s, Axis) const {
    const double u = s[1] / s[0];
    const double p = pressure(s);
    return {s[1], s[1] * u + p, u * (s[2] + p)};
  }
  State source(const State&, double, double) const { return {0.0, 0.0, 0.0}; }

  double sound_speed(const State& s) const {
    const double p = pressure(s);
    if (!(s[0] > 0.0) || !(p > 0.0)) throw DivergenceError("non-physical Euler state");
    return std::sqrt(gamma * p / s[0]);
  }
  double max_speed(const State& s, Axis) const { return std::abs(s[1] / s[0]) + sound_speed(s); }

  std::array<double, 3> eigenvalues(const State& s, Axis) const {
    const double c = sound_speed(s);
    const double u = s[1] / s[0];
    return {u - c, u, u + c};
  }

  Eigensystem<3> eigensystem(const State& s, Axis) const {
    const double c = sound_speed(s);
    const double u = s[1] / s[0];
    const double h = (s[2] + pressure(s)) / s[0];
    const double g1 = gamma - 1.0;
    const double q2 = 0.5 * u * u;
    const double b = g1 / (c * c);
    Eigensystem<3> e;
    e.right = {{{1.0, 1.0, 1.0}, {u - c, u, u + c}, {h - u * c, q2, h + u * c}}};
    e.left = {{{0.5 * (b * q2 + u / c), -0.5 * (b * u + 1.0 / c), 0.5 * b},
               {1.0 - b * q2, b * u, -b},
               {0.5 * (b * q2 - u / c), -0.5 * (b * u - 1.0 / c), 0.5 * b}}};
    return e;
  }

  State reflect(const State& s, Axis) const { return {s[0], -s[1], s[2]}; }

  State roe_average(const State& a, const State& b) const {
    const double ra = std::sqrt(a[0]);
    const double rb = std::sqrt(b[0]);
    const double w = ra + rb;
    const double u = (a[1] / ra + b[1] / rb) / w;
    const double h = ((a[2] + pressure(a)) / ra + (b[2] + pressure(b)) / rb) / w;
    const double rho = ra * rb;
    const double p = (gamma - 1.0) / gamma * rho * (h - 0.5 * u * u);
    return from_primitive(rho, u, p);
  }
};

enum class EulerSource {
  none,
  /// (0.4, 0.6, 0.6, 1.8) cos(x + y)
  cosine,
};

/// 2D Euler equations, conserved (rho, rho u, rho v, E).
struct Euler2D {
  static constexpr int components = 4;
  static constexpr int dims = 2;
  using State = std::array<double, 4>;

  double gamma = 1.4;
  EulerSource source_term = EulerSource::none;

  State from_primitive(const EulerPrimitive& w) const {
    return {w.rho, w.rho * w.u, w.rho * w.v, w.p / (gamma - 1.0) + 0.5 * w.rho * (w.u * w.u + w.v * w.v)};
  }
  EulerPrimitive to_primitive(const State& s) const {
    return {s[0], s[1] / s[0], s[2] / s[0], pressure(s)};
  }
  double pressure(const State& s) const {
    return (gamma - 1.0) * (s[3] - 0.5 * (s[1] * s[1] + s[2] * s[2]) / s[0]);
  }

  State flux(const State& s, Axis a) const {
    const double u = s[1] / s[0];
    const double v = s[2] / s[0];
    const double p = pressure(s);
    if (a == Axis::x) return {s[1], s[1] * u + p, s[1] * v, u * (s[3] + p)};
    return {s[2], s[2] * u, s[2] * v + p, v * (s[3] + p)};
  }

  State source(const State&, double x, double y) const {
    if (source_term == EulerSource::none) return {0.0, 0.0, 0.0, 0.0};
    const double c = std::cos(x + y);
    return {0.4 * c, 0.6 * c, 0.6 * c, 1.8 * c};
  }

  double sound_speed(const State& s) const {
    const double p = pressure(s);
    if (!(s[0] > 0.0) || !(p > 0.0)) throw DivergenceError("non-physical Euler state");
    return std::sqrt(gamma * p / s[0]);
  }
  double max_speed(const State& s, Axis a) const {
    const double vn = (a == Axis::x ? s[1] : s[2]) / s[0];
    return std::abs(vn) + sound_speed(s);
  }

  std::array<double, 4> eigenvalues(const State& s, Axis a) const {
    const double c = sound_speed(s);
    const double vn = (a == Axis::x ? s[1] : s[2]) / s[0];
    return {vn - c, vn, vn, vn + c};
  }

  /// Fields ordered (vn - c, vn, shear, vn + c).
  Eigensystem<4> eigensystem(const State& s, Axis a) const {
    const double c = sound_speed(s);
    const double u = s[1] / s[0];
    const double v = s[2] / s[0];
    const double h = (s[3] + pressure(s)) / s[0];
    const double g1 = gamma - 1.0;
    const double q2 = 0.5 * (u * u + v * v);
    const double b = g1 / (c * c);
    Eigensystem<4> e;
    if (a == Axis::x) {
      e.right = {{{1.0, 1.0, 0.0, 1.0},
                  {u - c, u, 0.0, u + c},
                  {v, v, 1.0, v},
                  {h - u * c, q2, v, h + u * c}}};
      e.left = {{{0.5 * (b * q2 + u / c), -0.5 * (b * u + 1.0 / c), -0.5 * b * v, 0.5 * b},
                 {1.0 - b * q2, b * u, b * v, -b},
                 {-v, 0.0, 1.0, 0.0},
                 {0.5 * (b * q2 - u / c), -0.5 * (b * u - 1.0 / c), -0.5 * b * v, 0.5 * b}}};
    } else {
      e.right = {{{1.0, 1.0, 0.0, 1.0},
                  {u, u, 1.0, u},
                  {v - c, v, 0.0, v + c},
                  {h - v * c, q2, u, h + v * c}}};
      e.left = {{{0.5 * (b * q2 + v / c), -0.5 * b * u, -0.5 * (b * v + 1.0 / c), 0.5 * b},
                 {1.0 - b * q2, b * u, b * v, -b},
                 {-u, 1.0, 0.0, 0.0},
                 {0.5 * (b * q2 - v / c), -0.5 * b * u, -0.5 * (b * v - 1.0 / c), 0.5 * b}}};
    }
    return e;
  }

  State reflect(const State& s, Axis a) const {
    State r = s;
    r[a == Axis::x ? 1 : 2] = -r[a == Axis::x ? 1 : 2];
    return r;
  }

  State roe_average(const State& a, const State& b) const {
    const double ra = std::sqrt(a[0]);
    const double rb = std::sqrt(b[0]);
    const double w = ra + rb;
    const double u = (a[1] / ra + b[1] / rb) / w;
    const double v = (a[2] / ra + b[2] / rb) / w;
    const double h = ((a[3] + pressure(a)) / ra + (b[3] + pressure(b)) / rb) / w;
    const double rho = ra * rb;
    const double p = (gamma - 1.0) / gamma * rho * (h - 0.5 * (u * u + v * v));
    return from_primitive({rho, u, v, p});
  }
};

// ---------------------------------------------------------------------------
// Model registry

enum class ModelId { burgers1d_src, shallow_water1d, burgers2d_src, euler2d_src, euler2d_nosrc, euler1d, euler2d };

inline std::string_view to_string(ModelId id) {
  switch (id) {
    case ModelId::burgers1d_src: return "burgers1d_src";
    case ModelId::shallow_water1d: return "shallow_water1d";
    case ModelId::burgers2d_src: return "burgers2d_src";
    case ModelId::euler2d_src: return "euler2d_src";
    case ModelId::euler2d_nosrc: return "euler2d_nosrc";
    case ModelId::euler1d: return "euler1d";
    case ModelId::euler2d: return "euler2d";
  }
  return "unknown";
}

/// Column names for the conserved components.
inline std::vector<std::string> component_names(ModelId id) {
  switch (id) {
    case ModelId::burgers1d_src:
    case ModelId::burgers2d_src: return {"u"};
    case ModelId::shallow_water1d: return {"h", "hu"};
    case ModelId::euler1d: return {"rho", "rho_u", "E"};
    case ModelId::euler2d_src:
    case ModelId::euler2d_nosrc:
    case ModelId::euler2d: return {"rho", "rho_u", "rho_v", "E"};
  }
  return {};
}

inline ModelId model_id_from_string(std::string_view name) {
  for (ModelId id : {ModelId::burgers1d_src, ModelId::shallow_water1d, ModelId::burgers2d_src, ModelId::euler2d_src,
                     ModelId::euler2d_nosrc, ModelId::euler1d, ModelId::euler2d}) {
    if (to_string(id) == name) return id;
  }
  throw std::invalid_argument("unknown model id: " + std::string(name));
}

struct ModelParams {
  double gamma = 1.4;
  double gravity = 9.812;
};

using AnyModel = std::variant<Burgers1D, ShallowWater1D, Burgers2D, Euler1D, Euler2D>;

inline AnyModel make_model(ModelId id, const ModelParams& params = {}) {
  switch (id) {
    case ModelId::burgers1d_src: return Burgers1D{};
    case ModelId::shallow_water1d: return ShallowWater1D{params.gravity};
    case ModelId::burgers2d_src: return Burgers2D{};
    case ModelId::euler2d_src: return Euler2D{params.gamma, EulerSource::cosine};
    case ModelId::euler2d_nosrc:
    case ModelId::euler2d: return Euler2D{params.gamma, EulerSource::none};
    case ModelId::euler1d: return Euler1D{params.gamma};
  }
  throw std::invalid_argument("unknown model id");
}

/// Conserved state as a function of position.
using PointFunction = std::function<std::vector<double>(double x, double y)>;

/// Analytic steady solution in conserved variables, where one is known.
inline std::optional<PointFunction> exact_solution(ModelId id, const ModelParams& params = {}) {
  const double g1 = params.gamma - 1.0;
  switch (id) {
    case ModelId::burgers1d_src:
      return PointFunction([](double x, double) { return std::vector<double>{std::sin(x)}; });
    case ModelId::shallow_water1d:
      return PointFunction(
          [](double x, double) { return std::vector<double>{10.0 - ShallowWater1D::bottom(x), 0.0}; });
    case ModelId::burgers2d_src:
      return PointFunction(
          [](double x, double y) { return std::vector<double>{std::sin((x + y) / std::numbers::sqrt2)}; });
    case ModelId::euler2d_src:
      return PointFunction([g1](double x, double y) {
        const double rho = 1.0 + 0.2 * std::sin(x + y);
        const double p = rho;
        return std::vector<double>{rho, rho, rho, p / g1 + rho};
      });
    case ModelId::euler2d_nosrc:
      return PointFunction([g1](double x, double y) {
        const double rho = 1.0 + 0.2 * std::sin(x - y);
        return std::vector<double>{rho, rho, rho, 1.0 / g1 + rho};
      });
    case ModelId::euler1d:
    case ModelId::euler2d: return std::nullopt;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Shock relations

struct ShockPrimitive {
  double p = 0.0;
  double rho = 0.0;
  double u = 0.0;
};

struct ShockStates {
  ShockPrimitive left;
  ShockPrimitive right;
  std::array<double, 3> left_conserved{};
  std::array<double, 3> right_conserved{};
};

/// Stationary normal shock with upstream (p, rho, u) = (1/(gamma M^2), 1, 1).
inline ShockStates rankine_hugoniot_states(double mach, double gamma = 1.4) {
  if (!(mach > 1.0)) throw std::invalid_argument("upstream Mach number must exceed 1");
  const double m2 = mach * mach;
  ShockStates s;
  s.left = {1.0 / (gamma * m2), 1.0, 1.0};
  const double ratio = (2.0 * gamma * m2 - (gamma - 1.0)) / (gamma + 1.0);
  s.right.p = s.left.p * ratio;
  const double k = (gamma + 1.0) / (gamma - 1.0);
  s.right.rho = s.left.rho * (k * ratio + 1.0) / (k + ratio);
  s.right.u = std::sqrt(gamma * (2.0 + (gamma - 1.0) * m2) * s.right.p /
                        ((2.0 * gamma * m2 + (1.0 - gamma)) * s.right.rho));
  const Euler1D euler{gamma};
  s.left_conserved = euler.from_primitive(s.left.rho, s.left.u, s.left.p);
  s.right_conserved = euler.from_primitive(s.right.rho, s.right.u, s.right.p);
  return s;
}

struct ObliqueShockStates {
  EulerPrimitive upstream;
  EulerPrimitive downstream;
};

/// Stationary oblique shock for a horizontal upstream flow (rho, u, v, p) =
/// (1, 1, 0, 1/(gamma M^2)). `line_angle` is the angle of the shock line with
/// the positive x axis. The normal component goes through the normal-shock
/// jump and the tangential velocity is carried across unchanged.
inline ObliqueShockStates oblique_shock_states(double mach, double line_angle, double gamma = 1.4) {
  const double tx = std::cos(line_angle), ty = std::sin(line_angle);
  double nx = ty, ny = -tx;
  if (nx < 0.0) nx = -nx, ny = -ny;  // normal pointing downstream for u > 0
  ObliqueShockStates s;
  s.upstream = {1.0, 1.0, 0.0, 1.0 / (gamma * mach * mach)};
  const double c1 = std::sqrt(gamma * s.upstream.p / s.upstream.rho);
  const double un = s.upstream.u * nx + s.upstream.v * ny;
  const double ut = s.upstream.u * tx + s.upstream.v * ty;
  const double mn = un / c1;
  if (!(mn > 1.0)) throw std::invalid_argument("normal Mach number must exceed 1");
  const double mn2 = mn * mn;
  const double p_ratio = (2.0 * gamma * mn2 - (gamma - 1.0)) / (gamma + 1.0);
  const double k = (gamma + 1.0) / (gamma - 1.0);
  const double rho_ratio = (k * p_ratio + 1.0) / (k + p_ratio);
  const double un2 = un / rho_ratio;
  s.downstream = {s.upstream.rho * rho_ratio, un2 * nx + ut * tx, un2 * ny + ut * ty, s.upstream.p * p_ratio};
  return s;
}

}  // namespace fsweno
