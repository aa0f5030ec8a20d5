#pragma once

/**
 * @file gamma_form.hpp
 * @brief Closed forms  c * 2^(u s + u0) * pi^(v s + v0) * Gamma(a s + g) * P(s).
 *
 * normalized() folds every half-integer part of the 2 and pi exponents into
 * the ExactScalar c (leaving intercepts in [0, 1/2)) and absorbs the integer
 * excess of a shift g >= 1 into P through Gamma(z + 1) = z Gamma(z).
 * Argument shifts can push g below zero; identities between such terms are
 * checked by rebasing every term onto the smallest shift present, which keeps
 * all factors polynomial.
 */

#include <complex>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "mellin/complex_gamma.hpp"
#include "mellin/exact_scalar.hpp"
#include "mellin/pochhammer.hpp"
#include "mellin/polynomial.hpp"

namespace mellin {

/// base^(slope * s + intercept)
struct ExpLinear {
  Rational slope;
  Rational intercept;
  friend bool operator==(const ExpLinear&, const ExpLinear&) = default;
};

class StructuralMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct GammaForm {
  ExactScalar scalar{1};
  ExpLinear two;
  ExpLinear pi;
  Rational gamma_scale{1};
  Rational gamma_shift{0};
  QPolynomial poly = QPolynomial::constant(Rational(1));

  [[nodiscard]] GammaForm normalized() const {
    GammaForm g = *this;
    const long k2 = (g.two.intercept * Rational(2)).floor().get_si();
    g.two.intercept -= Rational(k2, 2);
    g.scalar = g.scalar * ExactScalar::two_half_power(static_cast<int>(k2));
    const long kp = (g.pi.intercept * Rational(2)).floor().get_si();
    g.pi.intercept -= Rational(kp, 2);
    g.scalar = g.scalar * ExactScalar::pi_half_power(static_cast<int>(kp));
    if (g.gamma_shift >= Rational(1)) {
      const long k = g.gamma_shift.floor().get_si();
      g.rebase(g.gamma_shift - Rational(k));
    }
    return g;
  }

  /// Lowers the gamma shift to target (same class mod 1) via Gamma(z + k) = (z)_k Gamma(z).
  void rebase(const Rational& target) {
    const Rational diff = gamma_shift - target;
    if (!diff.is_integer() || diff.sign() < 0) {
      throw StructuralMismatch("GammaForm: cannot rebase shift " + gamma_shift.str() + " to " + target.str());
    }
    poly *= rising_linear(gamma_scale, target, static_cast<int>(diff.floor().get_si()));
    gamma_shift = target;
  }

  /// The same function of s + delta.
  [[nodiscard]] GammaForm shifted(const Rational& delta) const { return substituted(Rational(1), delta); }

  /// The same function of a*s + b.
  [[nodiscard]] GammaForm substituted(const Rational& a, const Rational& b) const {
    GammaForm g = *this;
    g.two = {two.slope * a, two.slope * b + two.intercept};
    g.pi = {pi.slope * a, pi.slope * b + pi.intercept};
    g.gamma_shift = gamma_scale * b + gamma_shift;
    g.gamma_scale = gamma_scale * a;
    g.poly = poly.compose_linear(a, b);
    return g;
  }

  [[nodiscard]] GammaForm times(const ExactScalar& c) const {
    GammaForm g = *this;
    g.scalar = g.scalar * c;
    return g;
  }
  [[nodiscard]] GammaForm times(const QPolynomial& p) const {
    GammaForm g = *this;
    g.poly *= p;
    return g;
  }
  /// Multiplies by 2^(slope s + intercept).
  [[nodiscard]] GammaForm times_two_power(const Rational& slope, const Rational& intercept) const {
    GammaForm g = *this;
    g.two.slope += slope;
    g.two.intercept += intercept;
    return g;
  }
  [[nodiscard]] GammaForm times_pi_power(const Rational& slope, const Rational& intercept) const {
    GammaForm g = *this;
    g.pi.slope += slope;
    g.pi.intercept += intercept;
    return g;
  }

  [[nodiscard]] bool same_structure(const GammaForm& o) const {
    return two.slope == o.two.slope && pi.slope == o.pi.slope && gamma_scale == o.gamma_scale;
  }

  /// Everything except the polynomial factor, at a floating point s.
  [[nodiscard]] std::complex<double> transcendental_part(std::complex<double> s) const {
    using oracle::Complex;
    const Complex two_exp = s * two.slope.to_double() + two.intercept.to_double();
    const Complex pi_exp = s * pi.slope.to_double() + pi.intercept.to_double();
    const Complex arg = s * gamma_scale.to_double() + gamma_shift.to_double();
    return scalar.to_double() * std::exp(two_exp * std::log(2.0)) *
           std::exp(pi_exp * std::log(std::numbers::pi)) * oracle::complex_gamma(arg);
  }

  [[nodiscard]] std::complex<double> evaluate(std::complex<double> s) const {
    const auto p = evaluate_complex(poly, {s.real(), s.imag()});
    return transcendental_part(s) * std::complex<double>(static_cast<double>(p.real()), static_cast<double>(p.imag()));
  }

  /// Exact polynomial evaluation at a Gaussian-rational point; only the
  /// transcendental prefactor is floating.
  [[nodiscard]] std::complex<double> evaluate(const GaussianRational& s) const {
    const GaussianRational p = to_gaussian(poly).evaluate(s);
    return transcendental_part(to_complex(s)) * to_complex(p);
  }

  [[nodiscard]] std::string str() const {
    std::ostringstream os;
    os << "(" << scalar.str() << ")";
    auto exp_text = [](const ExpLinear& e) {
      return "(" + e.slope.str() + " s + " + e.intercept.str() + ")";
    };
    if (two.slope.sign() != 0 || two.intercept.sign() != 0) os << " * 2^" << exp_text(two);
    if (pi.slope.sign() != 0 || pi.intercept.sign() != 0) os << " * pi^" << exp_text(pi);
    os << " * Gamma(" << gamma_scale.str() << " s + " << gamma_shift.str() << ")";
    os << " * [" << to_string(poly) << "]";
    return os.str();
  }

  friend bool operator==(const GammaForm& a, const GammaForm& b) {
    return a.scalar == b.scalar && a.two == b.two && a.pi == b.pi && a.gamma_scale == b.gamma_scale &&
           a.gamma_shift == b.gamma_shift && a.poly == b.poly;
  }
};

/// Sum of the terms reduced to one common 2^(.) pi^(.) Gamma(.) factor; the
/// identity  sum(terms) = 0  holds exactly iff the returned polynomial is zero.
/// Throws StructuralMismatch when the terms cannot share a common factor.
inline Polynomial<ExactScalar> gamma_identity_residual(std::span<const GammaForm> terms) {
  if (terms.empty()) return {};
  std::vector<GammaForm> norm;
  norm.reserve(terms.size());
  for (const auto& t : terms) norm.push_back(t.normalized());
  const GammaForm& ref = norm.front();
  Rational base = ref.gamma_shift;
  for (const auto& t : norm) {
    if (!t.same_structure(ref)) {
      throw StructuralMismatch("GammaForm exponent slopes differ: " + t.str() + " vs " + ref.str());
    }
    if (!(t.two.intercept == ref.two.intercept) || !(t.pi.intercept == ref.pi.intercept)) {
      throw StructuralMismatch("GammaForm exponent intercepts differ by a non half-integer: " + t.str() +
                               " vs " + ref.str());
    }
    if (!(t.gamma_shift - ref.gamma_shift).is_integer()) {
      throw StructuralMismatch("GammaForm shifts differ by a non-integer: " + t.str() + " vs " + ref.str());
    }
    if (t.gamma_shift < base) base = t.gamma_shift;
  }
  Polynomial<ExactScalar> residual;
  for (auto& t : norm) {
    t.rebase(base);
    const ExactScalar c = t.scalar;
    residual += t.poly.map<ExactScalar>([&](const Rational& q) { return c * ExactScalar(q); });
  }
  return residual;
}

inline Polynomial<ExactScalar> gamma_identity_residual(std::initializer_list<GammaForm> terms) {
  return gamma_identity_residual(std::span<const GammaForm>(terms.begin(), terms.size()));
}

}  // namespace mellin
