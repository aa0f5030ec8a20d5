#pragma once

/**
 * @file exact_scalar.hpp
 * @brief The ring of finite sums q * sqrt(2)^d * pi^(b/2), plus the field Q(sqrt 2).
 *
 * ExactScalar keys each term on (d, b) with d in {0, 1} and b an integer.
 * Integer powers of 2 are folded into the rational coefficient, so two
 * scalars are equal exactly when their term maps are equal.
 */

#include <cmath>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "mellin/rational.hpp"

namespace mellin {

class ExactScalar {
 public:
  using Key = std::pair<int, int>;  // (sqrt2 flag, half-exponent of pi)

  ExactScalar() = default;
  ExactScalar(const Rational& q) { add_term(0, 0, q); }  // NOLINT(implicit)
  template <std::integral I>
  ExactScalar(I q) : ExactScalar(Rational(q)) {}  // NOLINT(implicit)

  /// q * sqrt(2)^sqrt2_flag * pi^(pi_half / 2)
  static ExactScalar monomial(const Rational& q, int sqrt2_flag, int pi_half) {
    ExactScalar s;
    s.add_term(sqrt2_flag, pi_half, q);
    return s;
  }
  static ExactScalar sqrt2() { return monomial(Rational(1), 1, 0); }
  /// pi^(k/2)
  static ExactScalar pi_half_power(int k) { return monomial(Rational(1), 0, k); }
  /// 2^(k/2), any integer k.
  static ExactScalar two_half_power(int k) {
    const int whole = (k >= 0) ? k / 2 : -((-k + 1) / 2);
    const int frac = k - 2 * whole;
    return monomial(pow(Rational(2), whole), frac, 0);
  }

  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] const std::map<Key, Rational>& terms() const { return terms_; }
  [[nodiscard]] bool is_monomial() const { return terms_.size() == 1; }

  /// Rational part if this scalar has no sqrt2 or pi content.
  [[nodiscard]] bool is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Key{0, 0});
  }

  [[nodiscard]] long double to_long_double() const {
    long double v = 0.0L;
    for (const auto& [key, q] : terms_) {
      long double t = q.to_long_double();
      if (key.first == 1) t *= std::sqrt(2.0L);
      t *= std::pow(std::numbers::pi_v<long double>, static_cast<long double>(key.second) / 2.0L);
      v += t;
    }
    return v;
  }
  [[nodiscard]] double to_double() const { return static_cast<double>(to_long_double()); }

  /// Inverse of a single-term scalar.
  [[nodiscard]] ExactScalar inverse() const {
    if (!is_monomial()) throw std::domain_error("ExactScalar: only monomials are invertible");
    const auto& [key, q] = *terms_.begin();
    Rational c = q.inverse();
    if (key.first == 1) c /= Rational(2);  // 1/sqrt2 = sqrt2/2
    return monomial(c, key.first, -key.second);
  }

  ExactScalar& operator+=(const ExactScalar& o) {
    for (const auto& [key, q] : o.terms_) add_term(key.first, key.second, q);
    return *this;
  }
  ExactScalar& operator-=(const ExactScalar& o) {
    for (const auto& [key, q] : o.terms_) add_term(key.first, key.second, -q);
    return *this;
  }
  ExactScalar& operator*=(const ExactScalar& o) { return *this = *this * o; }

  friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
  friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
  friend ExactScalar operator-(const ExactScalar& a) {
    ExactScalar r;
    for (const auto& [key, q] : a.terms_) r.terms_.emplace(key, -q);
    return r;
  }
  friend ExactScalar operator*(const ExactScalar& a, const ExactScalar& b) {
    ExactScalar r;
    for (const auto& [ka, qa] : a.terms_) {
      for (const auto& [kb, qb] : b.terms_) {
        Rational q = qa * qb;
        int flag = ka.first + kb.first;
        if (flag == 2) {
          q *= Rational(2);
          flag = 0;
        }
        r.add_term(flag, ka.second + kb.second, q);
      }
    }
    return r;
  }
  friend bool operator==(const ExactScalar& a, const ExactScalar& b) { return a.terms_ == b.terms_; }

  [[nodiscard]] std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, q] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << q.str();
      if (key.first == 1) os << "*sqrt(2)";
      if (key.second != 0) {
        os << "*pi^" << (key.second % 2 == 0 ? std::to_string(key.second / 2)
                                              : "(" + std::to_string(key.second) + "/2)");
      }
    }
    return os.str();
  }

 private:
  void add_term(int flag, int pi_half, const Rational& q) {
    if (q.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(Key{flag, pi_half}, q);
    if (!inserted) {
      it->second += q;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  std::map<Key, Rational> terms_;
};

/// Elements a + b sqrt(2) of the field Q(sqrt 2).
struct Sqrt2Value {
  Rational a;
  Rational b;

  Sqrt2Value() = default;
  Sqrt2Value(Rational rational_part) : a(std::move(rational_part)) {}  // NOLINT(implicit)
  Sqrt2Value(Rational rational_part, Rational sqrt2_part)
      : a(std::move(rational_part)), b(std::move(sqrt2_part)) {}

  static Sqrt2Value sqrt2() { return {Rational(0), Rational(1)}; }

  [[nodiscard]] bool is_zero() const { return a.is_zero() && b.is_zero(); }
  [[nodiscard]] Sqrt2Value conjugate() const { return {a, -b}; }
  [[nodiscard]] Rational field_norm() const { return a * a - Rational(2) * b * b; }
  [[nodiscard]] double to_double() const { return a.to_double() + b.to_double() * std::sqrt(2.0); }

  friend Sqrt2Value operator+(const Sqrt2Value& x, const Sqrt2Value& y) { return {x.a + y.a, x.b + y.b}; }
  friend Sqrt2Value operator-(const Sqrt2Value& x, const Sqrt2Value& y) { return {x.a - y.a, x.b - y.b}; }
  friend Sqrt2Value operator-(const Sqrt2Value& x) { return {-x.a, -x.b}; }
  friend Sqrt2Value operator*(const Sqrt2Value& x, const Sqrt2Value& y) {
    return {x.a * y.a + Rational(2) * x.b * y.b, x.a * y.b + x.b * y.a};
  }
  friend Sqrt2Value operator/(const Sqrt2Value& x, const Sqrt2Value& y) {
    const Rational n = y.field_norm();  // nonzero for y != 0 since sqrt2 is irrational
    if (n.is_zero()) throw std::domain_error("Sqrt2Value: division by zero");
    const Sqrt2Value num = x * y.conjugate();
    return {num.a / n, num.b / n};
  }
  friend bool operator==(const Sqrt2Value&, const Sqrt2Value&) = default;
};

}  // namespace mellin
