#pragma once

#include <array>

#include "hmw/matrix10.hpp"

namespace hmw::kemmer {

/// Spacetime metric diag(+1, -1, -1, -1). The algebra checks run in the full
/// 3+1 signature: the beta set carries four spacetime indices and the
/// pseudo-vector contraction below uses the four-index Levi-Civita symbol.
struct Metric4 {
  static constexpr int sign(int nu) { return nu == 0 ? 1 : -1; }
  constexpr int operator()(int a, int b) const { return a == b ? sign(a) : 0; }
};

/// Totally antisymmetric symbol with eps_{0123} = +1.
struct Epsilon4 {
  constexpr int operator()(int a, int b, int c, int d) const {
    // parity via explicit inversion count; duplicates give 0
    int p[4] = {a, b, c, d};
    int sgn = 1;
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) {
        if (p[i] == p[j]) return 0;
        if (p[i] > p[j]) sgn = -sgn;
      }
    }
    return sgn;
  }
};

/// The four 10x10 beta matrices with upper spacetime index.
struct BetaSet {
  std::array<ExactMatrix10, 4> upper;
};

/// Canonical spin-one representation, built from the 3x3 spin blocks S^j and
/// the row selectors K^j. Basis order: three 3-blocks then the scalar slot.
const BetaSet& canonical_betas();

/// beta^nu. Throws std::out_of_range unless nu in 0..3.
ExactMatrix10 beta(int nu);

/// beta_nu = g_{nu nu} beta^nu (no sum).
ExactMatrix10 beta_lower(int nu);

/// beta_n beta_l beta_r + beta_r beta_l beta_n - (beta_n g_{lr} + beta_r g_{nl}).
/// Zero for every index triple when the set satisfies the Kemmer relation.
ExactMatrix10 kemmer_residual(const BetaSet& set, int nu, int lam, int rho);
ExactMatrix10 kemmer_residual(int nu, int lam, int rho);

/// S_{lam rho} = (beta_lam beta_rho - beta_rho beta_lam) / 2.
ExactMatrix10 spin_tensor(int lam, int rho);

/// xi_nu = (i/2) eps_{nu lam rho sig} beta^lam beta^rho beta^sig
/// (sum over the six permutations of the complementary indices).
ExactMatrix10 xi(int nu);

struct XiSpectrum {
  int minus_one = 0;
  int zero = 0;
  int plus_one = 0;
};

/// Eigenvalue multiplicities of xi_3, obtained exactly: xi_3^3 = xi_3 makes it
/// diagonalizable with eigenvalues in {-1, 0, +1}, so
///   n_0  = 10 - rank(xi_3),  n_+1 = rank(xi_3^2 + xi_3),  n_-1 = rank(xi_3^2 - xi_3),
/// cross-checked against trace(xi_3) = n_+1 - n_-1.
XiSpectrum xi3_spectrum();

}  // namespace hmw::kemmer
