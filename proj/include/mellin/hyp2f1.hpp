#pragma once

/**
 * @file hyp2f1.hpp
 * @brief Terminating Gauss hypergeometric series 2F1(-n, b; c; z) as exact
 *        polynomials in s, where b is linear in s.
 *
 * Terms are accumulated through the ratio
 *   t_{k+1} / t_k = (-n + k)(b + k) z / ((c + k)(k + 1)),
 * so only one polynomial multiplication happens per term.
 */

#include <stdexcept>
#include <string>
#include <utility>

#include "mellin/polynomial.hpp"

namespace mellin {

/// slope * s + intercept
struct LinearForm {
  Rational slope;
  Rational intercept;

  [[nodiscard]] QPolynomial as_poly() const { return QPolynomial::linear(slope, intercept); }
  [[nodiscard]] Rational at(const Rational& s) const { return slope * s + intercept; }
  friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

struct Terminating2F1 {
  int n = 0;
  LinearForm b;
  Rational c;
  Rational z{2};
};

class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Rejects c in {0, -1, ..., -(n-1)}, where (c)_k vanishes inside the series.
template <class T>
void require_no_denominator_pole(int n, const T& c) {
  for (int k = 0; k < n; ++k) {
    if (c + T(k) == T{}) {
      throw PoleError("2F1 denominator parameter hits a pole: c + " + std::to_string(k) + " = 0");
    }
  }
}

/// 2F1(-n, b(s); c; z) over any exact field T, with b a polynomial in s (normally linear).
template <class T>
Polynomial<T> hyp2f1_series(int n, const Polynomial<T>& b, const T& c, const T& z) {
  if (n < 0) throw std::domain_error("2F1: first parameter must be a nonpositive integer");
  require_no_denominator_pole(n, c);
  Polynomial<T> term = Polynomial<T>::constant(T(1));
  Polynomial<T> sum = term;
  for (int k = 0; k < n; ++k) {
    const T scale = T(k - n) * z / ((c + T(k)) * T(k + 1));
    term = term * (b + Polynomial<T>::constant(T(k))) * scale;
    sum += term;
  }
  return sum;
}

inline QPolynomial hyp2f1_poly(const Terminating2F1& t) {
  return hyp2f1_series<Rational>(t.n, t.b.as_poly(), t.c, t.z);
}

/// Direct summation of 2F1(-n, b; c; z) with rational b.
inline Rational hyp2f1_value(int n, const Rational& b, const Rational& c, const Rational& z) {
  require_no_denominator_pole(n, c);
  Rational sum(0);
  for (int k = 0; k <= n; ++k) {
    sum += rising(Rational(-n), k) * rising(b, k) / (rising(c, k) * factorial(k)) * pow(z, k);
  }
  return sum;
}

/// 2F1(-n, b; c; 2) == (-1)^n 2F1(-n, c - b; c; 2) as polynomials in s.
inline bool pfaff_terminating_check(int n, const LinearForm& b, const Rational& c) {
  const QPolynomial lhs = hyp2f1_poly({n, b, c, Rational(2)});
  const LinearForm reflected{-b.slope, c - b.intercept};
  const QPolynomial rhs = hyp2f1_poly({n, reflected, c, Rational(2)}) * sign_power(n);
  return lhs == rhs;
}

/// Evaluates 2F1(-n, -m; c; 2) and 2F1(-m, -n; c; 2); the two must agree.
inline std::pair<Rational, Rational> symmetry_reciprocity_core(int n, int m, const Rational& c) {
  return {hyp2f1_value(n, Rational(-m), c, Rational(2)), hyp2f1_value(m, Rational(-n), c, Rational(2))};
}

}  // namespace mellin
