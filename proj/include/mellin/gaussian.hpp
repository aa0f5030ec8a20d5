#pragma once

// Gaussian numbers a + b i over an exact field (used with T = Rational).

#include <complex>
#include <string>

#include "mellin/rational.hpp"

namespace mellin {

template <class T>
struct Gaussian {
  T re{};
  T im{};

  Gaussian() = default;
  Gaussian(T real) : re(std::move(real)) {}  // NOLINT(implicit)
  Gaussian(T real, T imag) : re(std::move(real)), im(std::move(imag)) {}

  static Gaussian i() { return Gaussian(T(0), T(1)); }

  [[nodiscard]] Gaussian conj() const { return Gaussian(re, -im); }
  [[nodiscard]] T norm() const { return re * re + im * im; }
  [[nodiscard]] bool is_zero() const { return re == T{} && im == T{}; }

  Gaussian& operator+=(const Gaussian& o) { re += o.re; im += o.im; return *this; }
  Gaussian& operator-=(const Gaussian& o) { re -= o.re; im -= o.im; return *this; }
  Gaussian& operator*=(const Gaussian& o) {
    T r = re * o.re - im * o.im;
    T m = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(m);
    return *this;
  }
  Gaussian& operator/=(const Gaussian& o) {
    const T d = o.norm();
    Gaussian q = *this * o.conj();
    re = q.re / d;
    im = q.im / d;
    return *this;
  }

  friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
  friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
  friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
  friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
  friend Gaussian operator-(const Gaussian& a) { return Gaussian(-a.re, -a.im); }
  friend bool operator==(const Gaussian& a, const Gaussian& b) { return a.re == b.re && a.im == b.im; }
};

using GaussianRational = Gaussian<Rational>;

inline std::complex<double> to_complex(const GaussianRational& z) {
  return {z.re.to_double(), z.im.to_double()};
}

/// i^k for integer k >= 0.
inline GaussianRational i_power(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {Rational(1), Rational(0)};
    case 1: return {Rational(0), Rational(1)};
    case 2: return {Rational(-1), Rational(0)};
    default: return {Rational(0), Rational(-1)};
  }
}

inline std::string to_string(const GaussianRational& z) {
  if (z.im.is_zero()) return z.re.str();
  if (z.re.is_zero()) return z.im.str() + "i";
  return z.re.str() + (z.im.sign() < 0 ? "" : "+") + z.im.str() + "i";
}

}  // namespace mellin
