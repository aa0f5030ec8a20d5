#pragma once

// Pochhammer products as polynomials in s, and signed Stirling numbers.

#include <vector>

#include "mellin/polynomial.hpp"

namespace mellin {

/// prod_{j<k} (slope*s + intercept + j), degree k when slope != 0.
template <class T>
Polynomial<T> rising_linear(const T& slope, const T& intercept, int k) {
  if (k < 0) throw std::domain_error("rising_linear: negative length");
  Polynomial<T> result = Polynomial<T>::constant(T(1));
  for (int j = 0; j < k; ++j) result *= Polynomial<T>::linear(slope, intercept + T(j));
  return result;
}

/// (s + shift)_k
inline QPolynomial pochhammer_poly(const Rational& shift, int k) {
  return rising_linear(Rational(1), shift, k);
}

inline QPolynomial pochhammer_poly(HalfInteger shift, int k) {
  return pochhammer_poly(shift.to_rational(), k);
}

/// Signed Stirling number of the first kind s(k, j); zero outside 0 <= j <= k.
inline Rational stirling_first(int k, int j) {
  if (k < 0 || j < 0 || j > k) return Rational(0);
  // Row recurrence s(m+1, i) = s(m, i-1) - m s(m, i), s(0, 0) = 1.
  std::vector<mpz_class> row{1};
  for (int m = 0; m < k; ++m) {
    std::vector<mpz_class> next(row.size() + 1, 0);
    for (std::size_t i = 0; i < row.size(); ++i) {
      next[i + 1] += row[i];
      next[i] -= row[i] * m;
    }
    row = std::move(next);
  }
  return Rational(row[static_cast<std::size_t>(j)]);
}

}  // namespace mellin
