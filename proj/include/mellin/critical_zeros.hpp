#pragma once

/**
 * @file critical_zeros.hpp
 * @brief Exact certification that the polynomial factors have only simple
 *        zeros, all on Re s = 1/2, with interlacing between consecutive degrees.
 *
 * A factor with P(s) = (-1)^n P(1 - s) and real coefficients satisfies
 * P(1/2 + it) = (-1)^n conj(P(1/2 + it)), so rho(t) = Re or Im of P(1/2 + it)
 * is a real polynomial of degree n. If Sturm counting finds n distinct real
 * roots of rho, then every zero of P lies on the critical line and is simple.
 */

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "mellin/complex_gamma.hpp"
#include "mellin/hermite.hpp"
#include "mellin/integrate.hpp"
#include "mellin/laguerre.hpp"
#include "mellin/sturm.hpp"

namespace mellin::zeros {

enum class Family { laguerre, hermite_even, hermite_odd_reduced };

inline std::string family_name(Family f) {
  switch (f) {
    case Family::laguerre: return "laguerre";
    case Family::hermite_even: return "hermite_even";
    case Family::hermite_odd_reduced: return "hermite_odd_reduced";
  }
  return "unknown";
}

/// The factor whose zeros are certified: P_n^alpha, G_n or H_n (alpha ignored for Hermite).
inline QPolynomial factor_poly(Family f, int n, const Rational& alpha) {
  switch (f) {
    case Family::laguerre: return laguerre::build_P(n, alpha);
    case Family::hermite_even: return hermite::reduced_even(n);
    case Family::hermite_odd_reduced: return hermite::reduced_odd(n);
  }
  throw std::invalid_argument("unknown family");
}

class StructuralFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct CriticalLinePoly {
  Family family = Family::laguerre;
  int n = 0;
  Rational alpha;
  QPolynomial rho;
  bool imaginary_part = false;  // true when rho = Im P(1/2 + it)
};

/// P(1/2 + it) as a Gaussian-rational polynomial in t.
inline Polynomial<GaussianRational> on_critical_line(const QPolynomial& p) {
  return to_gaussian(p).compose_linear(GaussianRational(Rational(0), Rational(1)), GaussianRational(Rational(1, 2)));
}

inline CriticalLinePoly critical_line_poly(Family family, int n, const Rational& alpha) {
  const auto [re, im] = split_parts(on_critical_line(factor_poly(family, n, alpha)));
  const bool odd = (n % 2) == 1;
  const QPolynomial& discarded = odd ? re : im;
  if (!discarded.is_zero()) {
    throw StructuralFailure(family_name(family) + " n=" + std::to_string(n) + " alpha=" + alpha.str() +
                            ": complementary part on the critical line is " + to_string(discarded, "t"));
  }
  return {family, n, alpha, odd ? im : re, odd};
}

/// True when p(-t) = (-1)^parity p(t).
inline bool has_parity(const QPolynomial& p, int parity) {
  for (int k = 0; k <= p.degree(); ++k) {
    if ((k - parity) % 2 != 0 && !p.coeff(k).is_zero()) return false;
  }
  return true;
}

struct ZeroCertificate {
  Family family = Family::laguerre;
  int n = 0;
  Rational alpha;
  int degree = 0;
  QPolynomial rho;
  bool imaginary_part = false;
  std::vector<RootInterval> intervals;
  bool squarefree = false;
  std::vector<double> roots;
  int count = 0;

  [[nodiscard]] bool certified() const {
    if (!squarefree || count != degree) return false;
    for (std::size_t k = 1; k < intervals.size(); ++k) {
      const RootInterval& a = intervals[k - 1];
      const RootInterval& b = intervals[k];
      const bool disjoint = b.is_exact() ? a.hi < b.lo : a.hi <= b.lo;
      if (!disjoint) return false;
    }
    return true;
  }
};

namespace detail {

/// Bisection to a tight rational bracket, then Newton steps in long double kept inside it.
inline double refine_to_double(const QPolynomial& rho, const RootInterval& iv) {
  if (iv.is_exact()) return iv.lo.to_double();
  const RootInterval tight = refine_root(rho, iv, Rational(mpz_class(1), mpz_class(1) << 60));
  if (tight.is_exact()) return tight.lo.to_double();
  const long double lo = tight.lo.to_long_double(), hi = tight.hi.to_long_double();
  const QPolynomial d = rho.derivative();
  long double t = 0.5L * (lo + hi);
  for (int k = 0; k < 4; ++k) {
    const long double slope = evaluate_real(d, t);
    if (slope == 0.0L) break;
    const long double next = t - evaluate_real(rho, t) / slope;
    if (!(next >= lo && next <= hi)) break;
    t = next;
  }
  return static_cast<double>(t);
}

}  // namespace detail

inline ZeroCertificate certify_zeros(const CriticalLinePoly& cp) {
  if (cp.rho.is_zero()) throw std::domain_error("certify_zeros: rho is the zero polynomial");
  ZeroCertificate c;
  c.family = cp.family;
  c.n = cp.n;
  c.alpha = cp.alpha;
  c.degree = cp.rho.degree();
  c.rho = cp.rho;
  c.imaginary_part = cp.imaginary_part;
  c.squarefree = c.degree < 1 || poly_gcd(cp.rho, cp.rho.derivative()).degree() == 0;
  c.intervals = sturm_isolate(cp.rho);
  for (const auto& iv : c.intervals) {
    c.count += iv.multiplicity;
    c.roots.push_back(detail::refine_to_double(cp.rho, iv));
  }
  return c;
}

inline ZeroCertificate certify_zeros(Family family, int n, const Rational& alpha) {
  return certify_zeros(critical_line_poly(family, n, alpha));
}

struct InterlacingResult {
  bool holds = false;
  int refinements = 0;
  std::string detail;
};

/// Checks that the n roots of rho_n separate the n + 1 roots of rho_{n+1}.
inline InterlacingResult interlacing_check(Family family, int n, const Rational& alpha) {
  InterlacingResult r;
  const QPolynomial lower = critical_line_poly(family, n, alpha).rho;
  const QPolynomial upper = critical_line_poly(family, n + 1, alpha).rho;
  if (poly_gcd(lower, upper).degree() != 0) {
    r.detail = "common root between degrees " + std::to_string(n) + " and " + std::to_string(n + 1);
    return r;
  }
  std::vector<RootInterval> iv = sturm_isolate(upper);
  if (static_cast<int>(iv.size()) != n + 1) {
    r.detail = "degree " + std::to_string(n + 1) + " has " + std::to_string(iv.size()) + " real roots";
    return r;
  }
  const SturmChain lower_chain(lower.degree() >= 1 ? lower : QPolynomial::variable());
  const bool lower_constant = lower.degree() < 1;

  // Shrink every interval of rho_{n+1} until it holds no root of rho_n.
  for (auto& v : iv) {
    for (int guard = 0; !lower_constant && !v.is_exact() && lower_chain.count(v.lo, v.hi) > 0; ++guard) {
      if (guard > 400) {
        r.detail = "persistent overlap near " + v.lo.str();
        return r;
      }
      v = refine_root(upper, v, v.width() / Rational(2));
      ++r.refinements;
    }
  }
  int previous_sign = 0;
  for (std::size_t k = 0; k < iv.size(); ++k) {
    if (k > 0) {
      const int between = lower_constant ? 0 : lower_chain.count(iv[k - 1].hi, iv[k].lo);
      if (between != 1) {
        r.detail = "gap " + std::to_string(k) + " holds " + std::to_string(between) + " roots of degree " +
                   std::to_string(n);
        return r;
      }
    }
    const int s = sign_at(lower, iv[k].hi);
    if (s == 0 || (previous_sign != 0 && s == previous_sign)) {
      r.detail = "no sign alternation of degree " + std::to_string(n) + " at root " + std::to_string(k);
      return r;
    }
    previous_sign = s;
  }
  r.holds = true;
  return r;
}

struct OrthogonalityResult {
  std::complex<double> value;
  double cutoff = 0.0;       // integration range is (-cutoff, cutoff)
  double tail_bound = 0.0;   // estimate of the neglected integral
  double error = 0.0;        // quadrature error estimate
  bool converged = false;
};

/// int P_n(1/2 + it) conj(P_m(1/2 + it)) 2^(alpha + 1) |Gamma(1/2 + alpha/2 + it)|^2 dt over the real line.
inline OrthogonalityResult orthogonality_quadrature(int n, int m, const Rational& alpha) {
  laguerre::require_alpha(alpha);
  const QPolynomial pn = laguerre::build_P(n, alpha), pm = laguerre::build_P(m, alpha);
  const double a = alpha.to_double();
  const double sigma = 0.5 + 0.5 * a;
  const double weight_scale = std::pow(2.0, a + 1.0);
  auto integrand = [&](double t) {
    const std::complex<long double> s(0.5L, t);
    const auto vn = evaluate_complex(pn, s), vm = evaluate_complex(pm, s);
    const auto prod = vn * std::conj(vm);
    const double w = weight_scale * oracle::abs_gamma_squared({sigma, t});
    return std::complex<double>(static_cast<double>(prod.real()) * w, static_cast<double>(prod.imag()) * w);
  };
  auto envelope = [&](double t) {
    const std::complex<long double> s(0.5L, t);
    return static_cast<double>(std::abs(evaluate_complex(pn, s)) * std::abs(evaluate_complex(pm, s))) *
           weight_scale * oracle::abs_gamma_squared({sigma, t});
  };

  double peak = 0.0;
  for (double t = 0.0; t <= 40.0; t += 0.25) peak = std::max(peak, envelope(t));
  // Past the polynomial growth region the envelope decays like e^(-pi t); stop where it is negligible.
  double cutoff = std::max(8.0, (n + m + a + 2.0) * 2.0 / std::numbers::pi);
  while (envelope(cutoff) > 1e-15 * peak && cutoff < 400.0) cutoff += 2.0;
  OrthogonalityResult r;
  r.cutoff = cutoff;
  // Two tails, each bounded by envelope(T) / (pi - (n + m + 2 sigma - 1) / T) for the decaying envelope.
  const double rate = std::numbers::pi - (n + m + 2.0 * sigma - 1.0) / cutoff;
  r.tail_bound = rate > 0.0 ? 2.0 * envelope(cutoff) / rate : INFINITY;
  const auto q = oracle::integrate<std::complex<double>>(integrand, -cutoff, cutoff, 1e-14 * peak, 1e-12, 4000,
                                                         static_cast<int>(2.0 * cutoff));
  r.value = q.value;
  r.error = q.error;
  r.converged = q.converged;
  return r;
}

}  // namespace mellin::zeros
