#pragma once

/// Lax-Friedrichs flux splitting and assembly of the numerical fluxes
/// f_{i+1/2} from a six-point window u_{i-2..i+3} along one grid line.
///
/// Scalar models reconstruct f+ and f- directly. Systems are projected onto
/// the characteristic fields of the flux Jacobian at an interface state,
/// reconstructed field by field, and mapped back with the right eigenvectors.

#include <algorithm>
#include <array>
#include <cmath>
#include <span>

#include "fsweno/grid.hpp"
#include "fsweno/models.hpp"
#include "fsweno/weno.hpp"

namespace fsweno {

/// Lower bound on alpha so the pseudo-time step stays finite.
inline constexpr double kAlphaFloor = 1e-8;

/// Largest component count of any model.
inline constexpr int kMaxFields = 4;

/// One splitting speed per characteristic field.
using FieldSpeeds = std::array<double, kMaxFields>;

/// How systems pick alpha for each characteristic field: the largest
/// |eigenvalue| of any field, or each field's own largest |eigenvalue|.
/// Both are global maxima over the interior.
enum class SplittingSpeed { uniform, per_field };

/// Maximum characteristic speed per direction, overall and per field.
struct WaveSpeeds {
  double alpha_x = kAlphaFloor;
  double alpha_y = 0.0;
  FieldSpeeds field_x{};
  FieldSpeeds field_y{};

  double along(Axis a) const { return a == Axis::x ? alpha_x : alpha_y; }

  FieldSpeeds splitting(Axis a, SplittingSpeed mode) const {
    if (mode == SplittingSpeed::per_field) return a == Axis::x ? field_x : field_y;
    FieldSpeeds s;
    s.fill(along(a));
    return s;
  }
};

/// State used for the eigenvectors at x_{i+1/2}.
enum class InterfaceAverage { arithmetic, roe };

template <class State>
struct SplitFluxPair {
  State fplus{};
  State fminus{};
};

/// f(+/-) = (f(u) +/- alpha u) / 2, componentwise.
template <class State>
SplitFluxPair<State> lf_split(const State& f, const State& u, double alpha) {
  SplitFluxPair<State> s;
  for (std::size_t c = 0; c < f.size(); ++c) {
    s.fplus[c] = 0.5 * (f[c] + alpha * u[c]);
    s.fminus[c] = 0.5 * (f[c] - alpha * u[c]);
  }
  return s;
}

/// Global maxima over interior points, floored at kAlphaFloor.
template <ConservationModel Model>
WaveSpeeds wave_speeds(const Model& model, const Field<Model::components>& field) {
  constexpr int M = Model::components;
  double ax = 0.0, ay = 0.0;
  FieldSpeeds fx{}, fy{};
  field.for_each_interior([&](int, int, const typename Model::State& s) {
    for (double v : s) {
      if (!std::isfinite(v)) throw DivergenceError("non-finite state");
    }
    ax = std::max(ax, model.max_speed(s, Axis::x));
    if constexpr (Model::dims == 2) ay = std::max(ay, model.max_speed(s, Axis::y));
    if constexpr (CharacteristicModel<Model>) {
      const auto lx = model.eigenvalues(s, Axis::x);
      for (int k = 0; k < M; ++k) fx[k] = std::max(fx[k], std::abs(lx[k]));
      if constexpr (Model::dims == 2) {
        const auto ly = model.eigenvalues(s, Axis::y);
        for (int k = 0; k < M; ++k) fy[k] = std::max(fy[k], std::abs(ly[k]));
      }
    }
  });
  WaveSpeeds w;
  w.alpha_x = std::max(ax, kAlphaFloor);
  w.alpha_y = Model::dims == 2 ? std::max(ay, kAlphaFloor) : 0.0;
  if constexpr (CharacteristicModel<Model>) {
    for (int k = 0; k < M; ++k) {
      w.field_x[k] = std::max(fx[k], kAlphaFloor);
      if constexpr (Model::dims == 2) w.field_y[k] = std::max(fy[k], kAlphaFloor);
    }
  } else {
    w.field_x.fill(w.alpha_x);
    w.field_y.fill(w.alpha_y);
  }
  return w;
}

template <ConservationModel Model>
using Window = std::array<typename Model::State, 6>;

/// Numerical flux at x_{i+1/2} from the window u_{i-2}, ..., u_{i+3}, with
/// splitting speed alpha[k] for characteristic field k (alpha[0] for scalars).
template <ConservationModel Model>
typename Model::State numerical_flux(const Model& model, const Window<Model>& w, const FieldSpeeds& speeds,
                                     Axis axis, const ReconstructionConfig& cfg,
                                     InterfaceAverage average = InterfaceAverage::arithmetic) {
  constexpr int M = Model::components;
  using State = typename Model::State;

  std::array<State, 6> flux;
  for (int k = 0; k < 6; ++k) flux[k] = model.flux(w[k], axis);

  State out{};
  if constexpr (M == 1) {
    const double alpha = speeds[0];
    std::array<double, 5> plus, minus;
    for (int k = 0; k < 5; ++k) plus[k] = 0.5 * (flux[k][0] + alpha * w[k][0]);
    for (int k = 0; k < 5; ++k) minus[k] = 0.5 * (flux[k + 1][0] - alpha * w[k + 1][0]);
    out[0] = reconstruct_face_value(plus, Side::left_biased, cfg) + reconstruct_face_value(minus, Side::right_biased, cfg);
  } else {
    static_assert(CharacteristicModel<Model>, "systems need an eigen-decomposition");
    State mid;
    if (average == InterfaceAverage::roe) {
      mid = model.roe_average(w[2], w[3]);
    } else {
      for (int c = 0; c < M; ++c) mid[c] = 0.5 * (w[2][c] + w[3][c]);
    }
    const Eigensystem<M> eig = model.eigensystem(mid, axis);

    State hat{};
    for (int field = 0; field < M; ++field) {
      const auto& l = eig.left[field];
      std::array<double, 6> wc, fc;
      for (int k = 0; k < 6; ++k) {
        double sw = 0.0, sf = 0.0;
        for (int c = 0; c < M; ++c) {
          sw += l[c] * w[k][c];
          sf += l[c] * flux[k][c];
        }
        wc[k] = sw;
        fc[k] = sf;
      }
      std::array<double, 5> plus, minus;
      const double af = speeds[field];
      for (int k = 0; k < 5; ++k) plus[k] = 0.5 * (fc[k] + af * wc[k]);
      for (int k = 0; k < 5; ++k) minus[k] = 0.5 * (fc[k + 1] - af * wc[k + 1]);
      hat[field] =
          reconstruct_face_value(plus, Side::left_biased, cfg) + reconstruct_face_value(minus, Side::right_biased, cfg);
    }
    for (int c = 0; c < M; ++c) {
      double s = 0.0;
      for (int field = 0; field < M; ++field) s += eig.right[c][field] * hat[field];
      out[c] = s;
    }
  }
  return out;
}

/// Same speed for every field.
template <ConservationModel Model>
typename Model::State numerical_flux(const Model& model, const Window<Model>& w, double alpha, Axis axis,
                                     const ReconstructionConfig& cfg,
                                     InterfaceAverage average = InterfaceAverage::arithmetic) {
  FieldSpeeds speeds;
  speeds.fill(alpha);
  return numerical_flux(model, w, speeds, axis, cfg, average);
}

}  // namespace fsweno
