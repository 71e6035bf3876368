#pragma once

#include <array>
#include <cmath>

#include "hmw/errors.hpp"
#include "hmw/rational.hpp"

namespace hmw::nc {

/// Deformation parameters of the planar noncommutative algebra:
///   [x^_1, x^_2] = i theta,  [p^_1, p^_2] = i theta_bar,  [x^_nu, p^_nu] = i.
/// theta_bar is never free: theta_bar = 4 alpha^2 (1 - alpha^2) / theta, and
/// alpha = 1 forces theta_bar = 0 (plain noncommutative space).
///
/// Scalar S is double for numerics or Rational for exact constraint checks.
template <class S>
struct DeformParams {
  S theta{};
  S alpha{};
  S theta_bar{};

  static DeformParams commutative() { return {S(0), S(1), S(0)}; }

  static DeformParams from_theta_alpha(S theta, S alpha) {
    if (alpha == S(0)) throw ConfigError("nc.alpha must be nonzero");
    if (theta == S(0)) {
      if (alpha != S(1)) {
        throw ConfigError("nc.theta = 0 requires nc.alpha = 1 (theta_bar undefined otherwise)");
      }
      return {theta, alpha, S(0)};
    }
    if (alpha == S(1)) return {theta, alpha, S(0)};
    S a2 = alpha * alpha;
    S tb = S(4) * a2 * (S(1) - a2) / theta;
    return {theta, alpha, tb};
  }
};

using NCParams = DeformParams<double>;
using NCParamsQ = DeformParams<Rational>;

/// Solve theta_bar = 4 a^2 (1 - a^2) / theta for alpha in (0, 1], taking the
/// branch continuous with the commutative limit (alpha -> 1 as theta_bar -> 0).
/// Rejects pairs with no such solution.
inline NCParams params_from_theta_thetabar(double theta, double theta_bar) {
  if (theta_bar == 0.0) return NCParams::from_theta_alpha(theta, 1.0);
  if (theta == 0.0) {
    throw ConfigError("nc.theta_bar != 0 requires nc.theta != 0");
  }
  double prod = theta * theta_bar;  // = 4 a^2 (1 - a^2), range (0, 1] for a in (0,1)
  if (prod < 0.0 || prod > 1.0) {
    throw ConfigError("nc: theta*theta_bar outside (0, 1], no alpha in (0, 1] exists");
  }
  double a2 = 0.5 * (1.0 + std::sqrt(1.0 - prod));
  return {theta, std::sqrt(a2), theta_bar};
}

/// Formal degree-one element of the canonical algebra:
///   coeff[0] x_1 + coeff[1] x_2 + coeff[2] p_1 + coeff[3] p_2 + i * central.
/// The commutator of two such forms is always central, so the deformed
/// relations can be verified by exact linear algebra.
template <class S>
struct LinearForm {
  std::array<S, 4> coeff{};  // x1, x2, p1, p2
  S central{};               // coefficient of the central element i

  static LinearForm x(int nu) {
    LinearForm f;
    f.coeff[static_cast<std::size_t>(nu - 1)] = S(1);
    return f;
  }
  static LinearForm p(int nu) {
    LinearForm f;
    f.coeff[static_cast<std::size_t>(1 + nu)] = S(1);
    return f;
  }

  friend LinearForm operator+(const LinearForm& a, const LinearForm& b) {
    LinearForm c;
    for (std::size_t i = 0; i < 4; ++i) c.coeff[i] = a.coeff[i] + b.coeff[i];
    c.central = a.central + b.central;
    return c;
  }
  friend LinearForm operator-(const LinearForm& a, const LinearForm& b) {
    LinearForm c;
    for (std::size_t i = 0; i < 4; ++i) c.coeff[i] = a.coeff[i] - b.coeff[i];
    c.central = a.central - b.central;
    return c;
  }
  friend LinearForm operator*(const S& s, const LinearForm& a) {
    LinearForm c;
    for (std::size_t i = 0; i < 4; ++i) c.coeff[i] = s * a.coeff[i];
    c.central = s * a.central;
    return c;
  }
};

/// Central part of [a, b] divided by i, from [x_nu, p_lam] = i delta_{nu lam}.
template <class S>
S commutator_central(const LinearForm<S>& a, const LinearForm<S>& b) {
  S c{};
  for (std::size_t nu = 0; nu < 2; ++nu) {
    c = c + a.coeff[nu] * b.coeff[nu + 2] - a.coeff[nu + 2] * b.coeff[nu];
  }
  return c;
}

/// The shifted variables as canonical linear forms (nu = 1, 2):
///   x^_nu = alpha x_nu - Theta_{nu lam} p^lam / (2 alpha)
///   p^_nu = alpha p_nu + ThetaBar_{nu lam} x^lam / (2 alpha)
/// with Theta_{12} = theta, ThetaBar_{12} = theta_bar (antisymmetric).
template <class S>
struct BoppShift {
  std::array<LinearForm<S>, 2> x;
  std::array<LinearForm<S>, 2> p;
};

template <class S>
BoppShift<S> bopp_shift(const DeformParams<S>& params) {
  if (params.alpha == S(0)) throw ConfigError("nc.alpha must be nonzero");
  using F = LinearForm<S>;
  S half_t = params.theta / (S(2) * params.alpha);
  S half_tb = params.theta_bar / (S(2) * params.alpha);
  BoppShift<S> s;
  s.x[0] = params.alpha * F::x(1) - half_t * F::p(2);
  s.x[1] = params.alpha * F::x(2) + half_t * F::p(1);
  s.p[0] = params.alpha * F::p(1) + half_tb * F::x(2);
  s.p[1] = params.alpha * F::p(2) - half_tb * F::x(1);
  return s;
}

/// Central coefficients of the three deformed commutators. For valid params
/// delta_eff == 1 identically (the theta_bar constraint is exactly the
/// condition making it so).
template <class S>
struct DeformedCommutators {
  S theta_eff{};      // [x^_1, x^_2] / i
  S theta_bar_eff{};  // [p^_1, p^_2] / i
  S delta_eff{};      // [x^_1, p^_1] / i
};

template <class S>
DeformedCommutators<S> deformed_commutators(const DeformParams<S>& params) {
  BoppShift<S> s = bopp_shift(params);
  return {commutator_central(s.x[0], s.x[1]),
          commutator_central(s.p[0], s.p[1]),
          commutator_central(s.x[0], s.p[0])};
}

}  // namespace hmw::nc
