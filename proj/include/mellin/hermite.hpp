#pragma once

/**
 * @file hermite.hpp
 * @brief Mellin transforms of f_n(x) = (8 pi)^(-n/2) H_n(sqrt(2 pi) x) e^(-pi x^2).
 *
 * With M_n(s) = 2 int_0^inf f_n(x) x^(s-1) dx, every M_n is carried in
 * gamma-parity normal form  c * pi^(-s/2) * Gamma((s + e)/2) * R(s),  e = n mod 2:
 *
 *   M_{2m}(s)   = pi^(-s/2) Gamma(s/2)       * (8 pi)^(-m) (-1)^m (2m)!/m! * G_m(s)
 *   M_{2m+1}(s) = pi^(-s/2) Gamma((s+1)/2)   * 2^(5/2) (8 pi)^(-m-1/2) (-1)^m (m+1/2) (2m)!/m! * H_m(s)
 *
 * with G_m(s) = 2F1(-m, s/2; 1/2; 2) and H_m(s) = 2F1(-m, s/2 + 1/2; 3/2; 2).
 */

#include <string>

#include "mellin/gamma_form.hpp"
#include "mellin/hyp2f1.hpp"
#include "mellin/laguerre.hpp"
#include "mellin/relation_report.hpp"

namespace mellin::hermite {

inline void require_index(int n) {
  if (n < 0) throw std::domain_error("Hermite index must be nonnegative");
}

/// G_m(s) = 2F1(-m, s/2; 1/2; 2)
inline QPolynomial reduced_even(int m) {
  require_index(m);
  return hyp2f1_poly({m, LinearForm{Rational(1, 2), Rational(0)}, Rational(1, 2), Rational(2)});
}

/// H_m(s) = 2F1(-m, s/2 + 1/2; 3/2; 2)
inline QPolynomial reduced_odd(int m) {
  require_index(m);
  return hyp2f1_poly({m, LinearForm{Rational(1, 2), Rational(1, 2)}, Rational(3, 2), Rational(2)});
}

/// (8 pi)^(-k/2) for any integer k >= 0.
inline ExactScalar eight_pi_power(int k) {
  return ExactScalar::two_half_power(-3 * k) * ExactScalar::pi_half_power(-k);
}

/// (8 pi)^(-m) (-1)^m (2m)!/m!
inline ExactScalar even_prefactor(int m) {
  return eight_pi_power(2 * m) * ExactScalar(sign_power(m) * factorial(2 * m) / factorial(m));
}

/// 2^(5/2) (8 pi)^(-m-1/2) (-1)^m (m + 1/2) (2m)!/m!
inline ExactScalar odd_prefactor(int m) {
  return ExactScalar::two_half_power(5) * eight_pi_power(2 * m + 1) *
         ExactScalar(sign_power(m) * (Rational(m) + Rational(1, 2)) * factorial(2 * m) / factorial(m));
}

struct EvenFactor {
  ExactScalar prefactor;
  QPolynomial reduced;

  /// p_m(s) as a polynomial with ExactScalar coefficients.
  [[nodiscard]] Polynomial<ExactScalar> full() const {
    return reduced.map<ExactScalar>([&](const Rational& q) { return prefactor * ExactScalar(q); });
  }
};

inline EvenFactor build_p_even(int m) { return {even_prefactor(m), reduced_even(m)}; }

/// M_{2m+1} in gamma-parity normal form.
inline GammaForm build_p_odd(int m) {
  GammaForm g;
  g.scalar = odd_prefactor(m);
  g.pi = {Rational(-1, 2), Rational(0)};
  g.gamma_scale = Rational(1, 2);
  g.gamma_shift = Rational(1, 2);
  g.poly = reduced_odd(m);
  return g.normalized();
}

inline GammaForm build_M(int n) {
  require_index(n);
  if (n % 2 == 1) return build_p_odd(n / 2);
  GammaForm g;
  g.scalar = even_prefactor(n / 2);
  g.pi = {Rational(-1, 2), Rational(0)};
  g.gamma_scale = Rational(1, 2);
  g.poly = reduced_even(n / 2);
  return g.normalized();
}

/// M_n from the Laguerre transform with alpha = -1/2 (even n) or 1/2 (odd n):
///   M_n(s) = (8 pi)^(-n/2) (2 pi)^(-s/2) (-1)^m 2^n m! M_m^alpha(s/2 + 1/4),  m = floor(n/2),
/// obtained from the Hermite-Laguerre bridge and the substitution x = y^2.
inline GammaForm build_M_via_laguerre(int n) {
  require_index(n);
  const int m = n / 2;
  const Rational alpha = (n % 2 == 0) ? Rational(-1, 2) : Rational(1, 2);
  return laguerre::build_M(m, alpha)
      .substituted(Rational(1, 2), Rational(1, 4))
      .times_two_power(Rational(-1, 2), Rational(0))
      .times_pi_power(Rational(-1, 2), Rational(0))
      .times(eight_pi_power(n) * ExactScalar(sign_power(m) * pow(Rational(2), n) * factorial(m)))
      .normalized();
}

struct HermiteMellin {
  int n = 0;
  int parity = 0;
  QPolynomial reduced_poly;
  ExactScalar prefactor;
  GammaForm gamma_form;
};

inline HermiteMellin make_hermite_mellin(int n) {
  require_index(n);
  const int m = n / 2;
  const bool odd = (n % 2) == 1;
  return {n, n % 2, odd ? reduced_odd(m) : reduced_even(m), odd ? odd_prefactor(m) : even_prefactor(m), build_M(n)};
}

/// Physicists' Hermite polynomial by H_k = 2u H_{k-1} - 2(k-1) H_{k-2}.
inline QPolynomial hermite_poly(int n) {
  require_index(n);
  QPolynomial prev = QPolynomial::constant(Rational(1));
  if (n == 0) return prev;
  QPolynomial cur = QPolynomial::linear(Rational(2), Rational(0));
  const QPolynomial two_u = cur;
  for (int k = 2; k <= n; ++k) {
    QPolynomial next = two_u * cur - prev * Rational(2 * (k - 1));
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

struct BridgeReport {
  bool even_holds = false;    // L_m^{-1/2}(x) = (-1)^m H_{2m}(sqrt x) / (2^{2m} m!)
  bool odd_holds = false;     // L_m^{1/2}(x) = (-1)^m H_{2m+1}(sqrt x) / (sqrt x 2^{2m+1} m!)
  bool gamma_even = false;    // M_{2m} agrees with the alpha = -1/2 Laguerre route
  bool gamma_odd = false;     // M_{2m+1} agrees with the alpha = 1/2 Laguerre route
  std::string mismatch;

  [[nodiscard]] bool all() const { return even_holds && odd_holds && gamma_even && gamma_odd; }
};

namespace detail {

/// Coefficients of u^(2k + offset) of p, as a polynomial in x = u^2; fails if the other parity is present.
inline bool take_parity(const QPolynomial& p, int offset, QPolynomial& out) {
  std::vector<Rational> c;
  for (int k = 0; k <= p.degree(); ++k) {
    if ((k - offset) % 2 != 0 || k < offset) {
      if (!p.coeff(k).is_zero()) return false;
      continue;
    }
    c.push_back(p.coeff(k));
  }
  out = QPolynomial(std::move(c));
  return true;
}

inline std::string first_mismatch(const QPolynomial& a, const QPolynomial& b) {
  for (int k = 0; k <= std::max(a.degree(), b.degree()); ++k) {
    if (a.coeff(k) != b.coeff(k)) {
      return "x^" + std::to_string(k) + ": " + a.coeff(k).str() + " vs " + b.coeff(k).str();
    }
  }
  return {};
}

}  // namespace detail

inline BridgeReport bridge_check(int m) {
  require_index(m);
  BridgeReport r;
  const Rational sign = sign_power(m);

  QPolynomial even_x;
  const QPolynomial h_even = hermite_poly(2 * m);
  if (detail::take_parity(h_even, 0, even_x)) {
    const QPolynomial lhs = laguerre::laguerre_poly(m, Rational(-1, 2));
    const QPolynomial rhs = even_x * (sign / (pow(Rational(2), 2 * m) * factorial(m)));
    r.even_holds = lhs == rhs;
    if (!r.even_holds) r.mismatch = "even bridge " + detail::first_mismatch(lhs, rhs);
  } else {
    r.mismatch = "H_{2m} has odd powers";
  }

  QPolynomial odd_x;
  const QPolynomial h_odd = hermite_poly(2 * m + 1);
  if (detail::take_parity(h_odd, 1, odd_x)) {
    const QPolynomial lhs = laguerre::laguerre_poly(m, Rational(1, 2));
    const QPolynomial rhs = odd_x * (sign / (pow(Rational(2), 2 * m + 1) * factorial(m)));
    r.odd_holds = lhs == rhs;
    if (!r.odd_holds && r.mismatch.empty()) r.mismatch = "odd bridge " + detail::first_mismatch(lhs, rhs);
  } else if (r.mismatch.empty()) {
    r.mismatch = "H_{2m+1} has even powers";
  }

  auto same = [](const GammaForm& a, const GammaForm& b) {
    try {
      return gamma_identity_residual({a, b.times(ExactScalar(-1))}).is_zero();
    } catch (const StructuralMismatch&) {
      return false;
    }
  };
  r.gamma_even = same(build_M(2 * m), build_M_via_laguerre(2 * m));
  r.gamma_odd = same(build_M(2 * m + 1), build_M_via_laguerre(2 * m + 1));
  if (r.mismatch.empty() && !(r.gamma_even && r.gamma_odd)) r.mismatch = "GammaForm routes disagree";
  return r;
}

struct ReciprocityReport {
  bool even_functional = false;   // p_k(s) = (-1)^k p_k(1 - s) for k in {n, m}
  bool odd_functional = false;    // H_k(s) = (-1)^k H_k(1 - s) for k in {n, m}
  bool even_reciprocity = false;  // c_m p_n(-2m) = c_n p_m(-2n)
  bool odd_reciprocity = false;   // H_n(-2m-1) = H_m(-2n-1)

  [[nodiscard]] bool all() const { return even_functional && odd_functional && even_reciprocity && odd_reciprocity; }
};

inline ReciprocityReport hermite_functional_reciprocity(int n, int m) {
  ReciprocityReport r;
  auto even_fe = [](int k) {
    const Polynomial<ExactScalar> p = build_p_even(k).full();
    const Polynomial<ExactScalar> reflected =
        p.compose_linear(ExactScalar(-1), ExactScalar(1)) * ExactScalar(sign_power(k));
    return p == reflected;
  };
  auto odd_fe = [](int k) {
    const QPolynomial h = reduced_odd(k);
    return h == h.compose_linear(Rational(-1), Rational(1)) * sign_power(k);
  };
  r.even_functional = even_fe(n) && even_fe(m);
  r.odd_functional = odd_fe(n) && odd_fe(m);

  const EvenFactor pn = build_p_even(n), pm = build_p_even(m);
  const ExactScalar lhs = even_prefactor(m) * pn.prefactor * ExactScalar(pn.reduced.evaluate(Rational(-2 * m)));
  const ExactScalar rhs = even_prefactor(n) * pm.prefactor * ExactScalar(pm.reduced.evaluate(Rational(-2 * n)));
  r.even_reciprocity = lhs == rhs;

  r.odd_reciprocity = reduced_odd(n).evaluate(Rational(-2 * m - 1)) == reduced_odd(m).evaluate(Rational(-2 * n - 1));
  return r;
}

/// C_k^lambda(x) by k C_k = 2x(k + lambda - 1) C_{k-1} - (k + 2 lambda - 2) C_{k-2}.
inline Sqrt2Value gegenbauer(int k, const Rational& lambda, const Sqrt2Value& x) {
  Sqrt2Value prev(Rational(1));
  if (k == 0) return prev;
  Sqrt2Value cur = Sqrt2Value(Rational(2) * lambda) * x;
  for (int j = 2; j <= k; ++j) {
    const Sqrt2Value next = (Sqrt2Value(Rational(2)) * x * Sqrt2Value(Rational(j - 1) + lambda) * cur -
                             Sqrt2Value(Rational(j - 2) + Rational(2) * lambda) * prev) *
                            Sqrt2Value(Rational(1, j));
    prev = cur;
    cur = next;
  }
  return cur;
}

/// 2F1(-m, s/2; 1/2; 2) == (-1)^m (s/2) B(s/2 - m, m + 1) C_{2m}^(s/2 - m)(sqrt 2) at a rational s,
/// with B(s/2 - m, m + 1) = m! / (s/2 - m)_{m+1}.
inline bool gegenbauer_check(int m, const Rational& s) {
  require_index(m);
  const Rational half_s = s / Rational(2);
  const Rational lambda = half_s - Rational(m);
  const Rational poch = rising(lambda, m + 1);
  if (poch.is_zero()) {
    throw PoleError("gegenbauer_check: (s/2 - m)_{m+1} vanishes at s = " + s.str());
  }
  const Sqrt2Value lhs(reduced_even(m).evaluate(s));
  const Rational beta = factorial(m) / poch;
  const Sqrt2Value rhs =
      Sqrt2Value(sign_power(m) * half_s * beta) * gegenbauer(2 * m, lambda, Sqrt2Value::sqrt2());
  return lhs == rhs;
}

/// Recursions in n for the Hermite transforms, checked in gamma-parity normal form:
///
///   three_term: M_n(s) = M_{n-1}(s+1) - ((n-1)/(4 pi)) M_{n-2}(s),   n >= 2
///   raising:    M_n(s) = (2 pi/(n+1)) [M_{n+1}(s+1) - ((s-1)/(2 pi)) M_{n+1}(s-1)]
///
/// three_term follows from H_n = 2u H_{n-1} - 2(n-1) H_{n-2}, raising from
/// H_n = H'_{n+1}/(2(n+1)) and integration by parts. Variants with leading factors
/// 1/sqrt(2 pi) and 1/(4(n+1)) are recorded in printed_forms.
inline RecursionReport hermite_recursions(int n) {
  require_index(n);
  RecursionReport report;
  const Rational one(1);
  const GammaForm mn = build_M(n);
  const ExactScalar inv_pi = ExactScalar::pi_half_power(-2);
  const ExactScalar two_pi = ExactScalar(2) * ExactScalar::pi_half_power(2);
  const ExactScalar inv_sqrt_2pi = ExactScalar::two_half_power(-1) * ExactScalar::pi_half_power(-1);

  if (n >= 2) {
    const GammaForm up = build_M(n - 1).shifted(one);
    const GammaForm down = build_M(n - 2).times(ExactScalar(Rational(n - 1, 4)) * inv_pi);
    report.relations.push_back(gamma_relation("three_term", {mn, up.times(ExactScalar(-1)), down}));
    report.printed_forms.push_back(gamma_relation("three_term", {mn, up.times(-inv_sqrt_2pi), down}));
  }

  const GammaForm next = build_M(n + 1);
  const GammaForm plus = next.shifted(one);
  const GammaForm minus = next.shifted(-one).times(QPolynomial::linear(one, -one));  // (s - 1) M_{n+1}(s-1)
  report.relations.push_back(gamma_relation(
      "raising", {mn, plus.times(-two_pi * ExactScalar(Rational(1, n + 1))),
             minus.times(ExactScalar(Rational(1, n + 1)))}));
  const ExactScalar printed = ExactScalar(Rational(1, 4 * (n + 1)));
  report.printed_forms.push_back(gamma_relation(
      "raising", {mn, plus.times(-printed), minus.times(printed * ExactScalar(Rational(1, 2)) * inv_pi)}));
  return report;
}

}  // namespace mellin::hermite
