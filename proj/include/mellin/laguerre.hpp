#pragma once

/**
 * @file laguerre.hpp
 * @brief Mellin transforms of the Laguerre functions x^(a/2) e^(-x/2) L_n^a(x).
 *
 *   M_n^a(s) = 2^(s + a/2) Gamma(s + a/2) P_n^a(s),
 *   P_n^a(s) = ((1 + a)_n / n!) 2F1(-n, s + a/2; a + 1; 2).
 *
 * Every identity check below compares exact polynomials (or exact GammaForm
 * residuals) and never falls back to floating point.
 */

#include <string>
#include <vector>

#include "mellin/gamma_form.hpp"
#include "mellin/hyp2f1.hpp"
#include "mellin/pochhammer.hpp"
#include "mellin/relation_report.hpp"

namespace mellin::laguerre {

inline void require_alpha(const Rational& alpha) {
  if (alpha <= Rational(-1)) throw std::domain_error("Laguerre parameter must satisfy alpha > -1, got " + alpha.str());
}

inline void require_degree(int n) {
  if (n < 0) throw std::domain_error("Laguerre degree must be nonnegative");
}

/// (1 + alpha)_n / n!
inline Rational normalizer(int n, const Rational& alpha) { return rising(Rational(1) + alpha, n) / factorial(n); }

inline QPolynomial build_P(int n, const Rational& alpha) {
  require_degree(n);
  require_alpha(alpha);
  const Terminating2F1 series{n, LinearForm{Rational(1), alpha / Rational(2)}, alpha + Rational(1), Rational(2)};
  return hyp2f1_poly(series) * normalizer(n, alpha);
}

/// 2^(s + a/2) Gamma(s + a/2) P_n^a(s), normalized.
inline GammaForm build_M(int n, const Rational& alpha) {
  GammaForm g;
  g.two = {Rational(1), alpha / Rational(2)};
  g.gamma_shift = alpha / Rational(2);
  g.poly = build_P(n, alpha);
  return g.normalized();
}

struct LaguerreMellin {
  int n = 0;
  Rational alpha;
  QPolynomial P;
  GammaForm gamma_form;
};

inline LaguerreMellin make_laguerre_mellin(int n, const Rational& alpha) {
  return {n, alpha, build_P(n, alpha), build_M(n, alpha)};
}

/// Coefficients of L_n^a(x) = sum_k (-1)^k binom(n + a, n - k) x^k / k!.
inline QPolynomial laguerre_poly(int n, const Rational& alpha) {
  require_degree(n);
  std::vector<Rational> c;
  for (int k = 0; k <= n; ++k) {
    // binom(n + a, n - k) = (k + 1 + a)_{n-k} / (n - k)!
    const Rational binom = rising(Rational(k + 1) + alpha, n - k) / factorial(n - k);
    c.push_back(sign_power(k) * binom / factorial(k));
  }
  return QPolynomial(std::move(c));
}

/// L_n^a(x) by the three-term recurrence
///   k L_k = (2k - 1 + a - x) L_{k-1} - (k - 1 + a) L_{k-2}.
template <class T>
T laguerre_value(int n, const Rational& alpha, const T& x) {
  require_degree(n);
  T prev(Rational(1));
  if (n == 0) return prev;
  T cur = T(Rational(1) + alpha) - x;
  for (int k = 2; k <= n; ++k) {
    T next = (T(Rational(2 * k - 1) + alpha) - x) * cur - T(Rational(k - 1) + alpha) * prev;
    next = next * T(Rational(1, k));
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// P_n^a(s) == (-1)^n P_n^a(1 - s)
inline bool functional_equation_check(int n, const Rational& alpha) {
  const QPolynomial p = build_P(n, alpha);
  return (p - p.compose_linear(Rational(-1), Rational(1)) * sign_power(n)).is_zero();
}

/// ((1+a)_m/m!) P_n^a(-m - a/2) == ((1+a)_n/n!) P_m^a(-n - a/2)
inline bool reciprocity_check(int n, int m, const Rational& alpha) {
  const Rational half = alpha / Rational(2);
  const Rational lhs = normalizer(m, alpha) * build_P(n, alpha).evaluate(Rational(-m) - half);
  const Rational rhs = normalizer(n, alpha) * build_P(m, alpha).evaluate(Rational(-n) - half);
  return lhs == rhs;
}

/// Derivative formula: ((1+a)_n/n!) sum_k (-n)_k/(1+a)_k (s+a/2)_k 2^k/k! sum_{j<k} 1/(s+a/2+j),
/// with (s + a/2)_k times the inner harmonic sum expanded as a polynomial.
inline QPolynomial derivative_formula_poly(int n, const Rational& alpha) {
  require_alpha(alpha);
  const Rational half = alpha / Rational(2);
  QPolynomial sum;
  for (int k = 1; k <= n; ++k) {
    QPolynomial harmonic;  // sum_j prod_{i != j} (s + a/2 + i)
    for (int j = 0; j < k; ++j) {
      QPolynomial prod = QPolynomial::constant(Rational(1));
      for (int i = 0; i < k; ++i) {
        if (i != j) prod *= QPolynomial::linear(Rational(1), half + Rational(i));
      }
      harmonic += prod;
    }
    const Rational coeff =
        rising(Rational(-n), k) / rising(Rational(1) + alpha, k) * pow(Rational(2), k) / factorial(k);
    sum += harmonic * coeff;
  }
  return sum * normalizer(n, alpha);
}

inline bool derivative_formula_check(int n, const Rational& alpha) {
  return derivative_formula_poly(n, alpha) == build_P(n, alpha).derivative();
}

/// Stirling-number form with (s + a/2)^j powers.
inline QPolynomial stirling_form_poly(int n, const Rational& alpha) {
  require_alpha(alpha);
  const QPolynomial shifted_var = QPolynomial::linear(Rational(1), alpha / Rational(2));
  std::vector<QPolynomial> powers{QPolynomial::constant(Rational(1))};
  for (int j = 1; j <= n; ++j) powers.push_back(powers.back() * shifted_var);
  QPolynomial sum;
  for (int k = 0; k <= n; ++k) {
    QPolynomial inner;
    for (int j = 0; j <= k; ++j) inner += powers[static_cast<std::size_t>(j)] * (sign_power(k + j) * stirling_first(k, j));
    sum += inner * (rising(Rational(-n), k) / rising(Rational(1) + alpha, k) * pow(Rational(2), k) / factorial(k));
  }
  return sum * normalizer(n, alpha);
}

inline bool stirling_form_check(int n, const Rational& alpha) {
  return stirling_form_poly(n, alpha) == build_P(n, alpha);
}

/// Termwise integration of the Laguerre power series:
///   (1+a)_n sum_k (-1)^k 2^k (s + a/2)_k / (k! (n-k)! (1+a)_k).
inline QPolynomial power_series_form(int n, const Rational& alpha) {
  require_alpha(alpha);
  QPolynomial sum;
  for (int k = 0; k <= n; ++k) {
    const Rational c = sign_power(k) * pow(Rational(2), k) /
                       (factorial(k) * factorial(n - k) * rising(Rational(1) + alpha, k));
    sum += pochhammer_poly(alpha / Rational(2), k) * c;
  }
  return sum * rising(Rational(1) + alpha, n);
}

/// Coefficient of t^n in (1 - t)^-(a/2 - s + 1) (1 + t)^-(a/2 + s):
///   sum_l (a/2 - s + 1)_l (a/2 + s)_{n-l} (-1)^{n-l} / (l! (n-l)!).
inline QPolynomial convolution_form(int n, const Rational& alpha) {
  require_alpha(alpha);
  const Rational half = alpha / Rational(2);
  QPolynomial sum;
  for (int l = 0; l <= n; ++l) {
    const QPolynomial a = rising_linear(Rational(-1), half + Rational(1), l);
    const QPolynomial b = rising_linear(Rational(1), half, n - l);
    sum += a * b * (sign_power(n - l) / (factorial(l) * factorial(n - l)));
  }
  return sum;
}

inline bool gf_convolution_check(int n, const Rational& alpha) {
  return convolution_form(n, alpha) == build_P(n, alpha);
}

/// L_m^b(2x) == sum_k binom(b + m, m - k) 2^k (-1)^(m-k) L_k^b(x) at a rational x.
inline bool scaling_identity_check(int m, const Rational& beta, const Rational& x) {
  const Rational lhs = laguerre_value(m, beta, Rational(2) * x);
  Rational rhs(0);
  for (int k = 0; k <= m; ++k) {
    const Rational binom = rising(Rational(k + 1) + beta, m - k) / factorial(m - k);
    rhs += binom * pow(Rational(2), k) * sign_power(m - k) * laguerre_value(k, beta, x);
  }
  return lhs == rhs;
}

/// (-i)^n P_n^(lambda)(i/2 - i s; pi/2) with lambda = (1 + a)/2, built from
///   P_n^(lambda)(x; phi) = ((2 lambda)_n / n!) e^(i n phi) 2F1(-n, lambda + i x; 2 lambda; 1 - e^(-2 i phi)).
inline Polynomial<GaussianRational> meixner_pollaczek_form(int n, const Rational& alpha) {
  require_alpha(alpha);
  using GP = Polynomial<GaussianRational>;
  const GaussianRational i = GaussianRational::i();
  const Rational lambda = (Rational(1) + alpha) / Rational(2);
  const GP x = GP::linear(-i, i * GaussianRational(Rational(1, 2)));  // i/2 - i s
  const GP b = GP::constant(GaussianRational(lambda)) + x * i;
  // e^(-i pi) = -1, so the argument 1 - e^(-2 i phi) is 2 at phi = pi/2.
  const GaussianRational z = GaussianRational(Rational(1)) - i_power(2);
  const GP series = hyp2f1_series<GaussianRational>(n, b, GaussianRational(Rational(2) * lambda), z);
  const GaussianRational lead = i_power(3 * n) * i_power(n) *  // (-i)^n e^(i n pi/2)
                                GaussianRational(rising(Rational(2) * lambda, n) / factorial(n));
  return series * lead;
}

inline bool meixner_pollaczek_check(int n, const Rational& alpha) {
  return meixner_pollaczek_form(n, alpha) == to_gaussian(build_P(n, alpha));
}

/// Contiguous relations in n for M_n^a and P_n^a.
///
///  M_sum:   (M_n(s) + M_{n+1}(s))/2 = (a/2 + s - 1)(M_{n+1}(s-1) - M_n(s-1))
///  M_shift: (1 + (a/2 + s)/n) M_n(s) = M_n(s+1)/(2n) + (1 + a/n) M_{n-1}(s),   n >= 1
///  P_sum:   P_n(s) + P_{n+1}(s) = P_{n+1}(s-1) - P_n(s-1)
///  P_shift: (1 + (a/2 + s)/n) P_n(s) = (s + a/2) P_n(s+1)/n + (1 + a/n) P_{n-1}(s),   n >= 1
///
/// P_sum and P_shift are M_sum and M_shift divided by 2^(s + a/2) Gamma(s + a/2).
/// Variants with stray factors (s + a/2) and (s + a/2 + 1) go into printed_forms.
inline RecursionReport recursion_checks(int n, const Rational& alpha) {
  require_degree(n);
  require_alpha(alpha);
  RecursionReport report;
  const Rational half = alpha / Rational(2);
  const Rational one(1);
  const GammaForm mn = build_M(n, alpha);
  const GammaForm mn1 = build_M(n + 1, alpha);
  const QPolynomial pn = build_P(n, alpha);
  const QPolynomial pn1 = build_P(n + 1, alpha);
  const QPolynomial s_half = QPolynomial::linear(one, half);              // s + a/2
  const QPolynomial s_half_m1 = QPolynomial::linear(one, half - one);     // s + a/2 - 1

  report.relations.push_back(gamma_relation(
      "M_sum", {mn.times(ExactScalar(Rational(1, 2))), mn1.times(ExactScalar(Rational(1, 2))),
              mn1.shifted(-one).times(-s_half_m1), mn.shifted(-one).times(s_half_m1)}));

  const QPolynomial p_sum = pn + pn1 - pn1.compose_linear(one, -one) + pn.compose_linear(one, -one);
  report.relations.push_back(poly_relation("P_sum", p_sum));
  report.printed_forms.push_back(poly_relation(
      "P_sum", s_half * (pn + pn1) - s_half_m1 * (pn1.compose_linear(one, -one) - pn.compose_linear(one, -one))));

  if (n >= 1) {
    const Rational inv_n(1, n);
    const GammaForm mprev = build_M(n - 1, alpha);
    const QPolynomial lhs_factor = QPolynomial::constant(one) + s_half * inv_n;  // 1 + (a/2 + s)/n
    const Rational tail = one + alpha * inv_n;
    report.relations.push_back(gamma_relation(
        "M_shift", {mn.times(lhs_factor), mn.shifted(one).times(ExactScalar(-inv_n / Rational(2))),
                mprev.times(ExactScalar(-tail))}));

    const QPolynomial pprev = build_P(n - 1, alpha);
    const QPolynomial shifted_up = pn.compose_linear(one, one);
    report.relations.push_back(
        poly_relation("P_shift", lhs_factor * pn - s_half * shifted_up * inv_n - pprev * tail));
    report.printed_forms.push_back(poly_relation(
        "P_shift", lhs_factor * pn - QPolynomial::linear(one, half + one) * shifted_up * inv_n - pprev * tail));
  }
  return report;
}

}  // namespace mellin::laguerre
