#pragma once

/**
 * @file polynomial.hpp
 * @brief Dense univariate polynomials over an exact coefficient ring.
 *
 * Coefficients are stored lowest power first with no trailing zeros, so the
 * zero polynomial has an empty coefficient list and degree -1. Division,
 * gcd and content removal need a field (Rational, GaussianRational).
 */

#include <algorithm>
#include <complex>
#include <initializer_list>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mellin/gaussian.hpp"
#include "mellin/rational.hpp"

namespace mellin {

template <class T>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }
  explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial constant(T value) { return Polynomial(std::vector<T>{std::move(value)}); }
  /// slope * s + intercept
  static Polynomial linear(T slope, T intercept) {
    return Polynomial(std::vector<T>{std::move(intercept), std::move(slope)});
  }
  static Polynomial monomial(T value, int power) {
    std::vector<T> c(static_cast<std::size_t>(power) + 1);
    c.back() = std::move(value);
    return Polynomial(std::move(c));
  }
  static Polynomial variable() { return linear(T(1), T(0)); }

  [[nodiscard]] int degree() const { return static_cast<int>(c_.size()) - 1; }
  [[nodiscard]] bool is_zero() const { return c_.empty(); }
  [[nodiscard]] std::span<const T> coefficients() const { return c_; }
  [[nodiscard]] T coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(k)] : T{};
  }
  [[nodiscard]] const T& leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial& operator*=(const T& scalar) {
    for (auto& x : c_) x *= scalar;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(r));
  }
  friend Polynomial operator*(Polynomial a, const T& scalar) { return a *= scalar; }
  friend Polynomial operator*(const T& scalar, Polynomial a) { return a *= scalar; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  [[nodiscard]] Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<T> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * T(static_cast<int>(k));
    return Polynomial(std::move(d));
  }

  /// Horner evaluation at a point of any ring that accepts T coefficients.
  template <class U>
  [[nodiscard]] U evaluate(const U& x) const {
    U acc{};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + U(*it);
    return acc;
  }

  /// P(c1 * s + c0)
  [[nodiscard]] Polynomial compose_linear(const T& c1, const T& c0) const {
    return compose(linear(c1, c0));
  }

  [[nodiscard]] Polynomial compose(const Polynomial& inner) const {
    Polynomial acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inner + constant(*it);
    return acc;
  }

  template <class U, class F>
  [[nodiscard]] Polynomial<U> map(F&& f) const {
    std::vector<U> out;
    out.reserve(c_.size());
    for (const auto& x : c_) out.push_back(f(x));
    return Polynomial<U>(std::move(out));
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == T{}) c_.pop_back();
  }

  std::vector<T> c_;
};

using QPolynomial = Polynomial<Rational>;

/// Euclidean division over a field: a = q*b + r with deg r < deg b.
template <class T>
std::pair<Polynomial<T>, Polynomial<T>> divmod(const Polynomial<T>& a, const Polynomial<T>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<T> rem(a.coefficients().begin(), a.coefficients().end());
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial<T>{}, a};
  std::vector<T> quot(static_cast<std::size_t>(a.degree() - db) + 1);
  const T lead = b.leading();
  for (int k = a.degree(); k >= db; --k) {
    const T q = rem[static_cast<std::size_t>(k)] / lead;
    quot[static_cast<std::size_t>(k - db)] = q;
    if (q == T{}) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= q * b.coeff(j);
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Polynomial<T>(std::move(quot)), Polynomial<T>(std::move(rem))};
}

template <class T>
Polynomial<T> make_monic(const Polynomial<T>& p) {
  if (p.is_zero()) return p;
  return p * (T(1) / p.leading());
}

/// Monic greatest common divisor via Euclidean remainders.
template <class T>
Polynomial<T> poly_gcd(Polynomial<T> a, Polynomial<T> b) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd(0, 0) is undefined");
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = make_monic(r);
  }
  return make_monic(a);
}

/// Scales p by a positive rational so its coefficients are coprime integers.
inline QPolynomial primitive_part(const QPolynomial& p) {
  if (p.is_zero()) return p;
  mpz_class lcm_den = 1, gcd_num = 0;
  for (const auto& c : p.coefficients()) {
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.denominator().get_mpz_t());
    mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), c.numerator().get_mpz_t());
  }
  return p * Rational(lcm_den, gcd_num);
}

template <class T>
std::string coefficient_text(const T& c) {
  if constexpr (std::is_same_v<T, Rational>) return c.str();
  else if constexpr (std::is_same_v<T, GaussianRational>) return "(" + to_string(c) + ")";
  else return "(" + c.str() + ")";
}

/// Ascending-power text such as "1 - 2 s + 2 s^2".
template <class T>
std::string to_string(const Polynomial<T>& p, const std::string& var = "s") {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= p.degree(); ++k) {
    const T c = p.coeff(k);
    if (c == T{}) continue;
    std::string text = coefficient_text(c);
    bool negative = false;
    if constexpr (std::is_same_v<T, Rational>) {
      negative = c.sign() < 0;
      if (negative) text = (-c).str();
    }
    if (first) os << (negative ? "-" : "");
    else os << (negative ? " - " : " + ");
    first = false;
    const bool unit = (text == "1");
    if (k == 0) os << text;
    else {
      if (!unit) os << text << ' ';
      os << var;
      if (k > 1) os << '^' << k;
    }
  }
  return os.str();
}

/// Real and imaginary coefficient parts of a Gaussian-rational polynomial.
inline std::pair<QPolynomial, QPolynomial> split_parts(const Polynomial<GaussianRational>& p) {
  return {p.map<Rational>([](const GaussianRational& z) { return z.re; }),
          p.map<Rational>([](const GaussianRational& z) { return z.im; })};
}

inline Polynomial<GaussianRational> to_gaussian(const QPolynomial& p) {
  return p.map<GaussianRational>([](const Rational& q) { return GaussianRational(q); });
}

/// Floating evaluation; coefficients are converted through long double.
inline std::complex<long double> evaluate_complex(const QPolynomial& p, std::complex<long double> x) {
  std::complex<long double> acc{0.0L, 0.0L};
  const auto c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + it->to_long_double();
  return acc;
}

inline long double evaluate_real(const QPolynomial& p, long double x) {
  long double acc = 0.0L;
  const auto c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + it->to_long_double();
  return acc;
}

}  // namespace mellin
