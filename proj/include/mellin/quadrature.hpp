#pragma once

/**
 * @file quadrature.hpp
 * @brief Numerical ground truth for the closed forms: direct Mellin quadrature
 *        of Laguerre and Hermite functions, the parabolic cylinder function,
 *        the Hermite generating function, and hydrogenic radial transforms.
 *
 * Every Mellin integral int_0^inf x^(p-1) g(x) dx with g entire is split at a:
 * on [0, a] the Taylor series of g is integrated termwise,
 *   sum_k g_k a^(p+k) / (p+k),
 * which handles the x^(p-1) endpoint behaviour exactly; [a, inf) is mapped to
 * [0, 1) and integrated by adaptive Gauss-Kronrod.
 */

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "mellin/complex_gamma.hpp"
#include "mellin/hermite.hpp"
#include "mellin/integrate.hpp"
#include "mellin/laguerre.hpp"

namespace mellin::oracle {

inline constexpr double kPiD = std::numbers::pi;

struct MellinQuadrature {
  Complex value;
  double error = 0.0;  // quadrature error estimate of the tail part
  bool converged = false;
};

/// int_0^inf x^(p-1) g(x) dx given the Taylor coefficients of g at 0, the split point a,
/// g itself, and x_max beyond which |x^(p-1) g(x)| is below the double range.
template <class G>
MellinQuadrature mellin_integral(Complex p, const std::vector<long double>& taylor, double a, G g, double x_max) {
  const ComplexLD pl(p.real(), p.imag());
  const long double log_a = std::log(static_cast<long double>(a));
  ComplexLD head = 0.0L;
  for (std::size_t k = 0; k < taylor.size(); ++k) {
    const ComplexLD e = pl + static_cast<long double>(k);
    if (std::abs(e) == 0.0L) throw std::domain_error("mellin_integral: exponent hits zero");
    head += taylor[k] * std::exp(e * log_a) / e;
  }
  auto integrand = [&](double x) -> Complex {
    if (x > x_max) return {0.0, 0.0};
    const double gx = g(x);
    if (gx == 0.0) return {0.0, 0.0};
    return std::exp((p - 1.0) * std::log(x)) * gx;
  };
  const auto tail = integrate_to_infinity<Complex>(integrand, a, 0.0, 1e-13);
  return {Complex(static_cast<double>(head.real()), static_cast<double>(head.imag())) + tail.value, tail.error,
          tail.converged};
}

/// L_n^a(x) by the three-term recurrence in double precision.
inline double laguerre_double(int n, double a, double x) {
  double prev = 1.0;
  if (n == 0) return prev;
  double cur = 1.0 + a - x;
  for (int k = 2; k <= n; ++k) {
    const double next = ((2.0 * k - 1.0 + a - x) * cur - (k - 1.0 + a) * prev) / k;
    prev = cur;
    cur = next;
  }
  return cur;
}

/// Physicists' H_n(u) by the three-term recurrence.
inline double hermite_double(int n, double u) {
  double prev = 1.0;
  if (n == 0) return prev;
  double cur = 2.0 * u;
  for (int k = 2; k <= n; ++k) {
    const double next = 2.0 * u * cur - 2.0 * (k - 1.0) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

namespace detail {

/// Taylor coefficients (exact, then rounded) of e^(-lambda x) Q(x) up to x^K.
inline std::vector<long double> exp_times_poly_taylor(const Rational& lambda, const QPolynomial& q, int extra_terms) {
  const int K = q.degree() + extra_terms;
  std::vector<Rational> e(static_cast<std::size_t>(K) + 1);
  e[0] = Rational(1);
  for (int j = 1; j <= K; ++j) e[static_cast<std::size_t>(j)] = e[static_cast<std::size_t>(j) - 1] * (-lambda) / Rational(j);
  std::vector<long double> out;
  for (int k = 0; k <= K; ++k) {
    Rational c(0);
    for (int i = 0; i <= std::min(k, q.degree()); ++i) c += q.coeff(i) * e[static_cast<std::size_t>(k - i)];
    out.push_back(c.to_long_double());
  }
  return out;
}

/// Smallest x >= start (by doubling) where exp(log_bound(x)) is below 1e-320.
template <class B>
double negligible_beyond(B log_bound, double start) {
  double x = std::max(start, 1.0);
  while (log_bound(x) > -737.0) x *= 1.25;
  return x;
}

inline double coefficient_l1(const QPolynomial& q) {
  double s = 0.0;
  for (const auto& c : q.coefficients()) s += std::abs(c.to_double());
  return s;
}

}  // namespace detail

/// int_0^inf x^(s + alpha/2 - 1) e^(-x/2) L_n^alpha(x) dx.
inline MellinQuadrature mellin_quadrature_laguerre(int n, const Rational& alpha, Complex s) {
  laguerre::require_alpha(alpha);
  const Complex p = s + 0.5 * alpha.to_double();
  if (p.real() <= 0.0) throw std::domain_error("mellin_quadrature_laguerre: Re(s + alpha/2) must be positive");
  const QPolynomial L = laguerre::laguerre_poly(n, alpha);
  const double a = alpha.to_double();
  const double log_c = std::log(detail::coefficient_l1(L));
  const double x_max = detail::negligible_beyond(
      [&](double x) { return (p.real() - 1.0 + n) * std::log(x) - 0.5 * x + log_c; }, 2.0);
  return mellin_integral(
      p, detail::exp_times_poly_taylor(Rational(1, 2), L, 40), 1.0,
      [&](double x) { return std::exp(-0.5 * x) * laguerre_double(n, a, x); }, x_max);
}

/// f_n(x) = (8 pi)^(-n/2) H_n(sqrt(2 pi) x) e^(-pi x^2)
inline double hermite_function(int n, double x) {
  return std::pow(8.0 * kPiD, -0.5 * n) * hermite_double(n, std::sqrt(2.0 * kPiD) * x) * std::exp(-kPiD * x * x);
}

/// 2 int_0^inf f_n(x) x^(s-1) dx.
inline MellinQuadrature mellin_quadrature_hermite(int n, Complex s) {
  hermite::require_index(n);
  if (s.real() <= 0.0) throw std::domain_error("mellin_quadrature_hermite: Re s must be positive");
  const QPolynomial H = hermite::hermite_poly(n);
  const long double pi = std::numbers::pi_v<long double>;
  const long double root = std::sqrt(2.0L * pi);
  const long double norm = std::pow(8.0L * pi, -0.5L * n);
  const int K = n + 80;
  std::vector<long double> h(static_cast<std::size_t>(K) + 1, 0.0L), gauss(static_cast<std::size_t>(K) + 1, 0.0L);
  for (int k = 0; k <= n; ++k) h[static_cast<std::size_t>(k)] = norm * H.coeff(k).to_long_double() * std::pow(root, k);
  long double term = 1.0L;
  for (int j = 0; 2 * j <= K; ++j) {
    gauss[static_cast<std::size_t>(2 * j)] = term;
    term *= -pi / (j + 1);
  }
  std::vector<long double> taylor(static_cast<std::size_t>(K) + 1, 0.0L);
  for (int k = 0; k <= K; ++k) {
    for (int i = 0; i <= std::min(k, n); ++i) taylor[static_cast<std::size_t>(k)] += h[static_cast<std::size_t>(i)] * gauss[static_cast<std::size_t>(k - i)];
  }
  const double log_c = std::log(detail::coefficient_l1(H)) - 0.5 * n * std::log(8.0 * kPiD);
  const double x_max = detail::negligible_beyond(
      [&](double x) {
        return (s.real() - 1.0) * std::log(x) + n * std::log(std::max(1.0, std::sqrt(2.0 * kPiD) * x)) -
               kPiD * x * x + log_c;
      },
      1.0);
  auto r = mellin_integral(s, taylor, 0.5, [&](double x) { return hermite_function(n, x); }, x_max);
  r.value *= 2.0;
  r.error *= 2.0;
  return r;
}

// ---------------------------------------------------------------------------
// Parabolic cylinder function

struct ParabolicCylinder {
  Complex value;
  Complex even_part;         // the 1F1(-nu/2; 1/2; z^2/2) term, even in z
  Complex odd_part;          // the 1F1((1-nu)/2; 3/2; z^2/2) term, odd in z
  double kummer_deviation;   // relative change when both 1F1 are replaced by their Kummer transforms
};

/// 1F1(a; b; z) by its Taylor series.
inline ComplexLD hyp1f1(ComplexLD a, long double b, long double z, int max_terms = 2000) {
  ComplexLD term = 1.0L, sum = 1.0L;
  for (int k = 0; k < max_terms; ++k) {
    term *= (a + static_cast<long double>(k)) * z / ((b + k) * (k + 1.0L));
    sum += term;
    if (std::abs(term) <= 1e-21L * std::abs(sum) && std::abs(z) < k + 1.0L) return sum;
  }
  throw std::runtime_error("hyp1f1: series did not converge within " + std::to_string(max_terms) + " terms");
}

/// D_nu(z) = 2^(nu/2) e^(-z^2/4) [ sqrt(pi)/Gamma((1-nu)/2) 1F1(-nu/2; 1/2; z^2/2)
///                                 - sqrt(2 pi) z / Gamma(-nu/2) 1F1((1-nu)/2; 3/2; z^2/2) ]
inline ParabolicCylinder parabolic_cylinder(Complex nu, double z) {
  const ComplexLD v(nu.real(), nu.imag());
  const long double zl = z, x = 0.5L * zl * zl;
  const long double pi = std::numbers::pi_v<long double>;
  const Complex r1 = reciprocal_gamma(0.5 * (1.0 - nu));
  const Complex r2 = reciprocal_gamma(-0.5 * nu);
  const ComplexLD c1 = std::sqrt(pi) * ComplexLD(r1.real(), r1.imag());
  const ComplexLD c2 = -std::sqrt(2.0L * pi) * zl * ComplexLD(r2.real(), r2.imag());
  const ComplexLD scale = std::exp(0.5L * v * std::log(2.0L) - zl * zl / 4.0L);

  const ComplexLD f1 = hyp1f1(-0.5L * v, 0.5L, x);
  const ComplexLD f2 = hyp1f1(0.5L * (1.0L - v), 1.5L, x);
  // Kummer: 1F1(a; b; x) = e^x 1F1(b - a; b; -x)
  const ComplexLD k1 = std::exp(x) * hyp1f1(0.5L + 0.5L * v, 0.5L, -x);
  const ComplexLD k2 = std::exp(x) * hyp1f1(1.5L - 0.5L * (1.0L - v), 1.5L, -x);

  const ComplexLD even = scale * c1 * f1, odd = scale * c2 * f2;
  const ComplexLD direct = even + odd;
  const ComplexLD kummer = scale * (c1 * k1 + c2 * k2);
  auto cd = [](ComplexLD w) { return Complex(static_cast<double>(w.real()), static_cast<double>(w.imag())); };
  const long double denom = std::max(std::abs(direct), 1e-300L);
  return {cd(direct), cd(even), cd(odd), static_cast<double>(std::abs(direct - kummer) / denom)};
}

// ---------------------------------------------------------------------------
// Generating function of the Hermite Mellin transforms

/// The exact Gaussian-rational value of a complex double.
inline GaussianRational exact_point(Complex s) {
  return {Rational::from_double(s.real()), Rational::from_double(s.imag())};
}

struct GeneratingFunctionCheck {
  Complex partial_sum;   // sum_{n <= N} M_n(s) t^n / n!
  Complex closed_form;   // 2 (2 pi)^(-s/2) Gamma(s) D_{-s}(-t / sqrt(2 pi))
  double residual = 0.0;  // relative
  double truncation = 0.0;  // |last term| / |closed form|
  Complex even_sum, even_closed;  // even-n part of the sum and the even part of D
};

/// sum_n M_n(s) t^n / n! = 2 (2 pi)^(-s/2) Gamma(s) D_{-s}(-2t / sqrt(8 pi))
inline GeneratingFunctionCheck generating_function_check(Complex s, double t, int N) {
  if (s.real() <= 0.0) throw std::domain_error("generating_function_check: Re s must be positive");
  if (N < 0) throw std::domain_error("generating_function_check: N must be nonnegative");
  const GaussianRational point = exact_point(s);
  GeneratingFunctionCheck g;
  double factor = 1.0;  // t^n / n!
  Complex last;
  for (int n = 0; n <= N; ++n) {
    if (n > 0) factor *= t / n;
    const Complex term = hermite::build_M(n).evaluate(point) * factor;
    g.partial_sum += term;
    if (n % 2 == 0) g.even_sum += term;
    last = term;
  }
  const double arg = -t / std::sqrt(2.0 * kPiD);
  const ParabolicCylinder d = parabolic_cylinder(-s, arg);
  const Complex pre = 2.0 * std::exp(-0.5 * s * std::log(2.0 * kPiD)) * complex_gamma(s);
  g.closed_form = pre * d.value;
  g.even_closed = pre * d.even_part;
  g.residual = std::abs(g.partial_sum - g.closed_form) / std::abs(g.closed_form);
  g.truncation = std::abs(last) / std::abs(g.closed_form);
  return g;
}

// ---------------------------------------------------------------------------
// Hydrogenic atoms in D dimensions

struct HydrogenState {
  int n_principal = 1;
  int ell = 0;
  int D = 3;

  [[nodiscard]] Rational eta() const { return Rational(n_principal) + Rational(D - 3, 2); }
  [[nodiscard]] Rational alpha_eff() const { return Rational(2 * ell + D - 2); }
  [[nodiscard]] int degree_eff() const { return n_principal - ell - 1; }

  void validate() const {
    if (n_principal < 1) throw std::domain_error("hydrogen: principal quantum number must be >= 1");
    if (ell < 0 || ell > n_principal - 1) throw std::domain_error("hydrogen: need 0 <= l <= n - 1");
    if (D < 2) throw std::domain_error("hydrogen: dimension must be >= 2");
    if (alpha_eff() <= Rational(-1)) throw std::domain_error("hydrogen: 2l + D - 2 must exceed -1");
  }
};

/// The polynomial factor P_{n-l-1}^{2l+D-2}(s) of the radial Mellin transform.
inline QPolynomial hydrogen_mellin_factor(const HydrogenState& st) {
  st.validate();
  return laguerre::build_P(st.degree_eff(), st.alpha_eff());
}

/// (eta/2)^(s + alpha/2) M_{n-l-1}^alpha(s), the radial transform with kappa = 1.
inline Complex hydrogen_mellin(const HydrogenState& st, Complex s) {
  st.validate();
  const Complex p = s + 0.5 * st.alpha_eff().to_double();
  if (p.real() <= 0.0) throw std::domain_error("hydrogen_mellin: Re(s + l + D/2 - 1) must be positive");
  const Complex scale = std::exp(p * std::log(0.5 * st.eta().to_double()));
  return scale * laguerre::build_M(st.degree_eff(), st.alpha_eff()).evaluate(exact_point(s));
}

/// int_0^inf r^l e^(-r/eta) L_{n-l-1}^{2l+D-2}(2r/eta) r^(s - D/2 - 1) r^(D-1) dr, integrated in r directly.
inline MellinQuadrature hydrogen_quadrature(const HydrogenState& st, Complex s) {
  st.validate();
  const Rational eta = st.eta(), alpha = st.alpha_eff();
  const int N = st.degree_eff();
  const Complex p = s + 0.5 * alpha.to_double();
  if (p.real() <= 0.0) throw std::domain_error("hydrogen_quadrature: Re(s + l + D/2 - 1) must be positive");
  const QPolynomial L = laguerre::laguerre_poly(N, alpha).compose_linear(Rational(2) / eta, Rational(0));
  const double eta_d = eta.to_double(), a = alpha.to_double();
  const double log_c = std::log(detail::coefficient_l1(L));
  const double x_max = detail::negligible_beyond(
      [&](double x) { return (p.real() - 1.0 + N) * std::log(x) - x / eta_d + log_c; }, 2.0);
  return mellin_integral(
      p, detail::exp_times_poly_taylor(Rational(1) / eta, L, 40), 0.5 * eta_d,
      [&](double r) { return std::exp(-r / eta_d) * laguerre_double(N, a, 2.0 * r / eta_d); }, x_max);
}

}  // namespace mellin::oracle
