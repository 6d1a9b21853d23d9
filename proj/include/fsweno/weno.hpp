#pragma once

/// Fifth-order multi-resolution WENO reconstruction of an interface value.
///
/// Five consecutive values are identified with cell averages h_{i-2..i+2} of
/// some function h. Three nested central stencils of 1, 3 and 5 cells give
/// candidate polynomials q1, q2, q3 of degree 0, 2 and 4. These are rewritten
/// hierarchically as p1, p2, p3 so that the linear weights recombine them into
/// q3 exactly, and WENO-Z weights select among them at x_{i+1/2}.
///
/// All polynomials are expressed in the scaled variable xi = (x - x_i) / dx,
/// which makes coefficients and smoothness indicators independent of dx.

#include <algorithm>
#include <array>
#include <cmath>
#include <span>
#include <stdexcept>

namespace fsweno {

/// Lowest-level smoothness indicator. p1 is constant, so its own derivative
/// recipe would give zero; the indicator is lifted from neighbouring jumps.
enum class Beta1Strategy {
  /// ((h_{i+1} - h_{i-1}) / 2)^2, the slope of the central linear fit
  central_slope,
  /// min((h_i - h_{i-1})^2, (h_{i+1} - h_i)^2)
  min_one_sided,
};

/// Which polynomial family the derivative-based indicators are measured on.
enum class SmoothnessBasis {
  /// p2, p3 from the hierarchical decomposition
  equivalent,
  /// q2, q3 straight from the stencil fits
  candidate,
};

struct ReconstructionConfig {
  double gamma12 = 1.0 / 11.0;
  double gamma22 = 10.0 / 11.0;
  double gamma13 = 1.0 / 111.0;
  double gamma23 = 10.0 / 111.0;
  double gamma33 = 100.0 / 111.0;
  double epsilon = 1e-6;
  Beta1Strategy beta1 = Beta1Strategy::central_slope;
  SmoothnessBasis basis = SmoothnessBasis::candidate;

  void validate() const {
    constexpr double tol = 1e-14;
    if (std::abs(gamma12 + gamma22 - 1.0) > tol || std::abs(gamma13 + gamma23 + gamma33 - 1.0) > tol) {
      throw std::invalid_argument("linear weights of each level must sum to one");
    }
    if (gamma22 == 0.0 || gamma33 == 0.0) {
      throw std::invalid_argument("gamma22 and gamma33 must be non-zero");
    }
    if (!(epsilon > 0.0)) {
      throw std::invalid_argument("epsilon must be positive");
    }
  }
};

/// Coefficients of c0 + c1 xi + ... + c4 xi^4; unused high-order slots are zero.
using Poly = std::array<double, 5>;

inline double evaluate(const Poly& c, double xi) {
  return c[0] + xi * (c[1] + xi * (c[2] + xi * (c[3] + xi * c[4])));
}

struct CandidatePolynomials {
  Poly q1{};
  Poly q2{};
  Poly q3{};
};

/// Polynomials whose averages over the 1-, 3- and 5-cell central stencils
/// reproduce the inputs exactly.
inline CandidatePolynomials candidate_polynomials(std::span<const double, 5> h) {
  const double hm2 = h[0], hm1 = h[1], h0 = h[2], hp1 = h[3], hp2 = h[4];
  CandidatePolynomials q;
  q.q1 = {h0, 0.0, 0.0, 0.0, 0.0};

  const double a2 = 0.5 * (hp1 - 2.0 * h0 + hm1);
  q.q2 = {h0 - a2 / 12.0, 0.5 * (hp1 - hm1), a2, 0.0, 0.0};

  q.q3 = {
      (2134.0 * h0 - 116.0 * (hm1 + hp1) + 9.0 * (hm2 + hp2)) / 1920.0,
      (34.0 * (hp1 - hm1) - 5.0 * (hp2 - hm2)) / 48.0,
      (12.0 * (hm1 + hp1) - 22.0 * h0 - (hm2 + hp2)) / 16.0,
      (2.0 * (hm1 - hp1) + (hp2 - hm2)) / 12.0,
      (6.0 * h0 - 4.0 * (hm1 + hp1) + (hm2 + hp2)) / 24.0,
  };
  return q;
}

struct EquivalentPolynomials {
  Poly p1{};
  Poly p2{};
  Poly p3{};
};

/// p1 = q1, p2 = (q2 - g12 p1) / g22, p3 = (q3 - g13 p1 - g23 p2) / g33.
inline EquivalentPolynomials hierarchical_decomposition(const CandidatePolynomials& q,
                                                        const ReconstructionConfig& cfg) {
  EquivalentPolynomials p;
  p.p1 = q.q1;
  for (int k = 0; k < 5; ++k) {
    p.p2[k] = (q.q2[k] - cfg.gamma12 * p.p1[k]) / cfg.gamma22;
    p.p3[k] = (q.q3[k] - cfg.gamma13 * p.p1[k] - cfg.gamma23 * p.p2[k]) / cfg.gamma33;
  }
  return p;
}

/// Sum over derivative orders a >= 1 of the integral over the central cell of
/// (d^a p / dxi^a)^2, in closed form for polynomials up to degree 4.
inline double polynomial_smoothness(const Poly& c) {
  const double c1 = c[1], c2 = c[2], c3 = c[3], c4 = c[4];
  return c1 * c1 + 0.5 * c1 * c3 + (13.0 / 3.0) * c2 * c2 + 4.2 * c2 * c4 + (3129.0 / 80.0) * c3 * c3 +
         (87617.0 / 140.0) * c4 * c4;
}

inline double beta1_indicator(std::span<const double, 5> h, Beta1Strategy strategy) {
  if (strategy == Beta1Strategy::min_one_sided) {
    const double dl = h[2] - h[1];
    const double dr = h[3] - h[2];
    return std::min(dl * dl, dr * dr);
  }
  const double s = 0.5 * (h[3] - h[1]);
  return s * s;
}

inline std::array<double, 3> smoothness_indicators(const EquivalentPolynomials& p, std::span<const double, 5> h,
                                                   const ReconstructionConfig& cfg) {
  return {beta1_indicator(h, cfg.beta1), polynomial_smoothness(p.p2), polynomial_smoothness(p.p3)};
}

inline std::array<double, 3> smoothness_indicators(const CandidatePolynomials& q, std::span<const double, 5> h,
                                                   const ReconstructionConfig& cfg) {
  return {beta1_indicator(h, cfg.beta1), polynomial_smoothness(q.q2), polynomial_smoothness(q.q3)};
}

struct NonlinearWeights {
  std::array<double, 3> omega{};
  double tau = 0.0;
};

/// WENO-Z weights built on the three-level linear weights.
inline NonlinearWeights nonlinear_weights(const std::array<double, 3>& beta, const ReconstructionConfig& cfg) {
  NonlinearWeights w;
  const double spread = 0.5 * (std::abs(beta[2] - beta[0]) + std::abs(beta[2] - beta[1]));
  w.tau = spread * spread;
  const std::array<double, 3> gamma{cfg.gamma13, cfg.gamma23, cfg.gamma33};
  double sum = 0.0;
  for (int l = 0; l < 3; ++l) {
    w.omega[l] = gamma[l] * (1.0 + w.tau / (cfg.epsilon + beta[l]));
    sum += w.omega[l];
  }
  for (double& o : w.omega) o /= sum;
  return w;
}

struct ReconstructionWorkspace {
  CandidatePolynomials q;
  EquivalentPolynomials p;
  std::array<double, 3> beta{};
  NonlinearWeights weights;
  double value = 0.0;
};

/// Value at x_{i+1/2} from cells i-2..i+2, with every intermediate kept.
inline ReconstructionWorkspace reconstruct_detailed(std::span<const double, 5> h, const ReconstructionConfig& cfg) {
  ReconstructionWorkspace ws;
  ws.q = candidate_polynomials(h);
  ws.p = hierarchical_decomposition(ws.q, cfg);
  ws.beta = cfg.basis == SmoothnessBasis::candidate ? smoothness_indicators(ws.q, h, cfg)
                                                     : smoothness_indicators(ws.p, h, cfg);
  ws.weights = nonlinear_weights(ws.beta, cfg);
  const auto& om = ws.weights.omega;
  ws.value = om[0] * evaluate(ws.p.p1, 0.5) + om[1] * evaluate(ws.p.p2, 0.5) + om[2] * evaluate(ws.p.p3, 0.5);
  return ws;
}

enum class Side {
  /// Upwind for right-going waves: value at x_{i+1/2} from cells i-2..i+2.
  left_biased,
  /// Mirror image: value at the left face of the window's last-but-two cell,
  /// i.e. x_{i+1/2} from cells i-1..i+3.
  right_biased,
};

inline double reconstruct_face_value(std::span<const double, 5> h, Side side, const ReconstructionConfig& cfg) {
  if (side == Side::left_biased) return reconstruct_detailed(h, cfg).value;
  const std::array<double, 5> mirrored{h[4], h[3], h[2], h[1], h[0]};
  return reconstruct_detailed(mirrored, cfg).value;
}

inline double reconstruct_face_value(const std::array<double, 5>& h, Side side, const ReconstructionConfig& cfg) {
  return reconstruct_face_value(std::span<const double, 5>(h), side, cfg);
}

}  // namespace fsweno
