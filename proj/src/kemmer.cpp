#include "hmw/kemmer.hpp"

#include <stdexcept>

namespace hmw::kemmer {

namespace {

using C = ExactComplex;

const C kOne{Rational(1)};
const C kI{Rational(0), Rational(1)};

// 3x3 spin blocks (S^j)_{kl} = -i eps_{jkl}, written out as displayed.
struct Block3 {
  C e[3][3];
};

Block3 spin_block(int j) {
  Block3 b{};
  switch (j) {
    case 1:
      b.e[1][2] = -kI;
      b.e[2][1] = kI;
      break;
    case 2:
      b.e[0][2] = kI;
      b.e[2][0] = -kI;
      break;
    case 3:
      b.e[0][1] = -kI;
      b.e[1][0] = kI;
      break;
    default:
      throw std::out_of_range("spin block index");
  }
  return b;
}

void put_block(ExactMatrix10& m, int row0, int col0, const Block3& b, bool negate) {
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      m(row0 + r, col0 + c) = negate ? -b.e[r][c] : b.e[r][c];
    }
  }
}

ExactMatrix10 make_beta0() {
  ExactMatrix10 m;
  for (int i = 0; i < 3; ++i) {
    m(i, 6 + i) = kOne;
    m(6 + i, i) = kOne;
  }
  return m;
}

ExactMatrix10 make_betaj(int j) {
  ExactMatrix10 m;
  Block3 s = spin_block(j);
  put_block(m, 3, 6, s, /*negate=*/false);
  put_block(m, 6, 3, s, /*negate=*/true);
  // K^j selects component j: -i K^{j dagger} in the last column,
  // -i K^j in the last row.
  m(j - 1, 9) = -kI;
  m(9, j - 1) = -kI;
  return m;
}

}  // namespace

const BetaSet& canonical_betas() {
  static const BetaSet set{
      {make_beta0(), make_betaj(1), make_betaj(2), make_betaj(3)}};
  return set;
}

ExactMatrix10 beta(int nu) {
  if (nu < 0 || nu > 3) throw std::out_of_range("beta index must be 0..3");
  return canonical_betas().upper[static_cast<std::size_t>(nu)];
}

ExactMatrix10 beta_lower(int nu) {
  ExactMatrix10 b = beta(nu);
  return Metric4::sign(nu) > 0 ? b : -b;
}

ExactMatrix10 kemmer_residual(const BetaSet& set, int nu, int lam, int rho) {
  if (nu < 0 || nu > 3 || lam < 0 || lam > 3 || rho < 0 || rho > 3) {
    throw std::out_of_range("kemmer_residual index must be 0..3");
  }
  Metric4 g;
  auto lower = [&](int n) {
    const ExactMatrix10& b = set.upper[static_cast<std::size_t>(n)];
    return Metric4::sign(n) > 0 ? b : -b;
  };
  ExactMatrix10 bn = lower(nu), bl = lower(lam), br = lower(rho);
  ExactMatrix10 lhs = bn * bl * br + br * bl * bn;
  ExactMatrix10 rhs;
  if (g(lam, rho) != 0) rhs += C{Rational(g(lam, rho))} * bn;
  if (g(nu, lam) != 0) rhs += C{Rational(g(nu, lam))} * br;
  return lhs - rhs;
}

ExactMatrix10 kemmer_residual(int nu, int lam, int rho) {
  return kemmer_residual(canonical_betas(), nu, lam, rho);
}

ExactMatrix10 spin_tensor(int lam, int rho) {
  ExactMatrix10 bl = beta_lower(lam), br = beta_lower(rho);
  return C{Rational(1, 2)} * (bl * br - br * bl);
}

ExactMatrix10 xi(int nu) {
  if (nu < 0 || nu > 3) throw std::out_of_range("xi index must be 0..3");
  Epsilon4 eps;
  const auto& b = canonical_betas().upper;
  ExactMatrix10 sum;
  int rest[3];
  int k = 0;
  for (int i = 0; i < 4; ++i) {
    if (i != nu) rest[k++] = i;
  }
  // six permutations of the complementary index triple
  int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (auto& p : perms) {
    int a = rest[p[0]], c = rest[p[1]], d = rest[p[2]];
    int s = eps(nu, a, c, d);
    ExactMatrix10 prod = b[static_cast<std::size_t>(a)] *
                         b[static_cast<std::size_t>(c)] *
                         b[static_cast<std::size_t>(d)];
    if (s > 0) {
      sum += prod;
    } else {
      sum -= prod;
    }
  }
  return C{Rational(0), Rational(1, 2)} * sum;
}

XiSpectrum xi3_spectrum() {
  ExactMatrix10 x = xi(3);
  ExactMatrix10 x2 = x * x;
  int r = exact_rank(x);
  int n_plus = exact_rank(x2 + x);
  int n_minus = exact_rank(x2 - x);
  ExactComplex tr = x.trace();
  // consistency of the two routes: rank split and trace
  if (n_plus + n_minus != r || !tr.im.is_zero() ||
      tr.re != Rational(n_plus - n_minus)) {
    throw std::logic_error("xi3 spectrum routes disagree");
  }
  return XiSpectrum{n_minus, ExactMatrix10::kDim - r, n_plus};
}

}  // namespace hmw::kemmer
