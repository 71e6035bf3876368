#pragma once

#include <array>
#include <string>

#include "hmw/exact_complex.hpp"

namespace hmw {

/// 10x10 matrix over exact complex rationals. Equality, products, commutators
/// and rank are all exact; there is no floating point anywhere in this type.
class ExactMatrix10 {
 public:
  static constexpr int kDim = 10;

  ExactMatrix10() = default;  // zero matrix

  static ExactMatrix10 identity() {
    ExactMatrix10 m;
    for (int i = 0; i < kDim; ++i) m(i, i) = Rational(1);
    return m;
  }

  ExactComplex& operator()(int r, int c) { return e_[idx(r, c)]; }
  const ExactComplex& operator()(int r, int c) const { return e_[idx(r, c)]; }

  friend ExactMatrix10 operator+(const ExactMatrix10& a, const ExactMatrix10& b) {
    ExactMatrix10 c;
    for (int i = 0; i < kDim * kDim; ++i) c.e_[i] = a.e_[i] + b.e_[i];
    return c;
  }
  friend ExactMatrix10 operator-(const ExactMatrix10& a, const ExactMatrix10& b) {
    ExactMatrix10 c;
    for (int i = 0; i < kDim * kDim; ++i) c.e_[i] = a.e_[i] - b.e_[i];
    return c;
  }
  ExactMatrix10 operator-() const {
    ExactMatrix10 c;
    for (int i = 0; i < kDim * kDim; ++i) c.e_[i] = -e_[i];
    return c;
  }
  friend ExactMatrix10 operator*(const ExactMatrix10& a, const ExactMatrix10& b) {
    ExactMatrix10 c;
    for (int i = 0; i < kDim; ++i) {
      for (int k = 0; k < kDim; ++k) {
        const ExactComplex& aik = a(i, k);
        if (aik.is_zero()) continue;  // beta matrices are sparse
        for (int j = 0; j < kDim; ++j) {
          const ExactComplex& bkj = b(k, j);
          if (bkj.is_zero()) continue;
          c(i, j) += aik * bkj;
        }
      }
    }
    return c;
  }
  friend ExactMatrix10 operator*(const ExactComplex& s, const ExactMatrix10& a) {
    ExactMatrix10 c;
    for (int i = 0; i < kDim * kDim; ++i) c.e_[i] = s * a.e_[i];
    return c;
  }
  ExactMatrix10& operator+=(const ExactMatrix10& b) { return *this = *this + b; }
  ExactMatrix10& operator-=(const ExactMatrix10& b) { return *this = *this - b; }

  friend bool operator==(const ExactMatrix10&, const ExactMatrix10&) = default;

  [[nodiscard]] bool is_zero() const {
    for (const auto& x : e_) {
      if (!x.is_zero()) return false;
    }
    return true;
  }

  [[nodiscard]] ExactComplex trace() const {
    ExactComplex t;
    for (int i = 0; i < kDim; ++i) t += (*this)(i, i);
    return t;
  }

 private:
  static constexpr int idx(int r, int c) { return r * kDim + c; }
  std::array<ExactComplex, kDim * kDim> e_{};
};

inline ExactMatrix10 commutator(const ExactMatrix10& a, const ExactMatrix10& b) {
  return a * b - b * a;
}

/// Rank over the exact complex-rational field (Gaussian elimination with
/// exact division, so the result is a true rank, not a numerical estimate).
int exact_rank(ExactMatrix10 m);

/// Debug dump: entries rendered as "a+bi" exact-rational strings.
std::array<std::array<std::string, 10>, 10> to_string_grid(const ExactMatrix10& m);

}  // namespace hmw
