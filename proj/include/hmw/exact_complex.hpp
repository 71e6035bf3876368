#pragma once

#include <string>

#include "hmw/rational.hpp"

namespace hmw {

/// Complex number with exact rational real and imaginary parts.
struct ExactComplex {
  Rational re;
  Rational im;

  constexpr ExactComplex() = default;
  constexpr ExactComplex(Rational r) : re(r) {}  // NOLINT: implicit by design
  constexpr ExactComplex(Rational r, Rational i) : re(r), im(i) {}

  static ExactComplex unit_i() { return {Rational(0), Rational(1)}; }

  [[nodiscard]] bool is_zero() const { return re.is_zero() && im.is_zero(); }
  [[nodiscard]] ExactComplex conj() const { return {re, -im}; }

  friend ExactComplex operator+(const ExactComplex& a, const ExactComplex& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend ExactComplex operator-(const ExactComplex& a, const ExactComplex& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend ExactComplex operator*(const ExactComplex& a, const ExactComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  ExactComplex operator-() const { return {-re, -im}; }
  ExactComplex& operator+=(const ExactComplex& b) { return *this = *this + b; }
  ExactComplex& operator-=(const ExactComplex& b) { return *this = *this - b; }
  ExactComplex& operator*=(const ExactComplex& b) { return *this = *this * b; }

  [[nodiscard]] ExactComplex inverse() const {
    Rational n = re * re + im * im;
    if (n.is_zero()) throw std::domain_error("inverse of complex zero");
    return {re / n, -im / n};
  }
  friend ExactComplex operator/(const ExactComplex& a, const ExactComplex& b) {
    return a * b.inverse();
  }

  friend bool operator==(const ExactComplex&, const ExactComplex&) = default;

  /// "a+bi" with exact rational parts: "0", "1", "-i", "1/2-3/2i".
  [[nodiscard]] std::string to_string() const {
    if (is_zero()) return "0";
    std::string s;
    if (!re.is_zero()) s = re.to_string();
    if (!im.is_zero()) {
      std::string mag;
      if (im == Rational(1)) {
        mag = "i";
      } else if (im == Rational(-1)) {
        mag = "-i";
      } else {
        mag = im.to_string() + "i";
      }
      if (!s.empty() && mag[0] != '-') s += "+";
      s += mag;
    }
    return s;
  }
};

}  // namespace hmw
