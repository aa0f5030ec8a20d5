// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "mellin/critical_zeros.hpp"
#include "mellin/hermite.hpp"
#include "mellin/laguerre.hpp"
#include "mellin/quadrature.hpp"

using namespace mellin;
using oracle::Complex;

namespace {

// Pinned limits.
constexpr double kFunctionalSeconds = 10.0;
constexpr double kReciprocitySeconds = 10.0;
constexpr double kZerosSeconds = 60.0;
constexpr double kOracleTol = 1e-8;
constexpr double kHydrogenTol = 1e-8;
constexpr double kGfTol = 1e-6;
constexpr double kOrthogonalityTol = 1e-6;
constexpr double kSpecificValueTol = 1e-12;

const std::vector<Rational> kAlphas{Rational(-1, 2), Rational(0), Rational(1, 2), Rational(1), Rational(3, 2),
                                    Rational(7, 3)};
const std::vector<Rational> kOracleAlphas{Rational(-1, 2), Rational(0), Rational(1, 2), Rational(1),
                                          Rational(3, 2), Rational(2), Rational(7, 3)};
const std::vector<Rational> kZeroAlphas{Rational(-1, 2), Rational(0), Rational(1, 2), Rational(1), Rational(5, 2)};

std::vector<Complex> s_samples() {
  std::vector<Complex> out;
  for (double re : {0.3, 1.0, 2.6}) {
    for (double im : {0.0, 1.0, -1.0, 5.0, -5.0}) out.emplace_back(re, im);
  }
  return out;
}

struct Outcome {
  bool pass = true;
  int cases = 0;
  std::string note;
  double worst = 0.0;

  void expect(bool ok, const std::string& what) {
    ++cases;
    if (!ok && pass) note = "first failure: " + what;
    pass = pass && ok;
  }
  void residual(double r, double tol, const std::string& what) {
    worst = std::max(worst, std::isfinite(r) ? r : INFINITY);
    expect(r < tol, what);
  }
};

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

std::string label(int n, const Rational& a) { return "n=" + std::to_string(n) + " alpha=" + a.str(); }

double rel(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }

bool report(int id, const std::string& title, const std::function<Outcome()>& body, double time_limit = 0.0) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.pass = false;
    o.note = std::string("exception: ") + e.what();
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (time_limit > 0.0 && seconds >= time_limit) {
    o.pass = false;
    o.note += (o.note.empty() ? "" : "; ") + std::string("runtime ") + sci(seconds) + " s over limit";
  }
  std::printf("criterion %2d %-4s %-26s %6d cases  %7.2f s", id, o.pass ? "PASS" : "FAIL", title.c_str(), o.cases,
              seconds);
  if (o.worst > 0.0) std::printf("  max %s", sci(o.worst).c_str());
  if (time_limit > 0.0) std::printf("  (limit %.0f s)", time_limit);
  if (!o.note.empty()) std::printf("  %s", o.note.c_str());
  std::printf("\n");
  std::fflush(stdout);
  return o.pass;
}

Outcome functional_equations() {
  Outcome o;
  for (const auto& a : kAlphas) {
    for (int n = 0; n <= 24; ++n) o.expect(laguerre::functional_equation_check(n, a), label(n, a));
  }
  for (int m = 0; m <= 12; ++m) {
    o.expect(hermite::hermite_functional_reciprocity(m, m).even_functional, "p_m m=" + std::to_string(m));
  }
  return o;
}

Outcome reciprocity() {
  Outcome o;
  for (const auto& a : kAlphas) {
    for (int n = 0; n <= 16; ++n) {
      for (int m = 0; m <= 16; ++m) o.expect(laguerre::reciprocity_check(n, m, a), label(n, a) + " m=" + std::to_string(m));
    }
  }
  for (int n = 0; n <= 16; ++n) {
    for (int m = 0; m <= 16; ++m) {
      const auto r = hermite::hermite_functional_reciprocity(n, m);
      const std::string k = "hermite n=" + std::to_string(n) + " m=" + std::to_string(m);
      o.expect(r.odd_reciprocity, k + " odd");
      if (n <= 12 && m <= 12) o.expect(r.even_reciprocity, k + " even");
    }
  }
  return o;
}

Outcome expansions() {
  Outcome o;
  for (const auto& a : kAlphas) {
    for (int n = 0; n <= 16; ++n) {
      o.expect(laguerre::derivative_formula_check(n, a), "derivative " + label(n, a));
      o.expect(laguerre::stirling_form_check(n, a), "stirling " + label(n, a));
      o.expect(laguerre::gf_convolution_check(n, a), "convolution " + label(n, a));
    }
  }
  return o;
}

Outcome recursions() {
  Outcome o;
  for (const auto& a : kAlphas) {
    for (int n = 0; n <= 20; ++n) {
      for (const auto& r : laguerre::recursion_checks(n, a).relations) o.expect(r.holds, r.name + " " + label(n, a));
    }
  }
  for (int n = 0; n <= 20; ++n) {
    for (const auto& r : hermite::hermite_recursions(n).relations) o.expect(r.holds, r.name + " n=" + std::to_string(n));
  }
  return o;
}

Outcome zero_certification() {
  Outcome o;
  using zeros::Family;
  for (const auto& a : kZeroAlphas) {
    for (int n = 0; n <= 20; ++n) {
      const auto c = zeros::certify_zeros(Family::laguerre, n, a);
      o.expect(c.certified() && c.count == n && c.squarefree, "certificate " + label(n, a));
      if (n < 20) o.expect(zeros::interlacing_check(Family::laguerre, n, a).holds, "interlacing " + label(n, a));
    }
  }
  for (Family f : {Family::hermite_even, Family::hermite_odd_reduced}) {
    for (int m = 0; m <= 12; ++m) {
      const auto c = zeros::certify_zeros(f, m, Rational(0));
      const std::string k = zeros::family_name(f) + " m=" + std::to_string(m);
      o.expect(c.certified() && c.count == m, "certificate " + k);
      if (m < 12) o.expect(zeros::interlacing_check(f, m, Rational(0)).holds, "interlacing " + k);
    }
  }
  return o;
}

Outcome oracle_agreement() {
  Outcome o;
  const auto samples = s_samples();
  for (const auto& a : kOracleAlphas) {
    for (int n = 0; n <= 10; ++n) {
      for (const auto& s : samples) {
        const Complex closed = laguerre::build_M(n, a).evaluate(oracle::exact_point(s));
        o.residual(rel(oracle::mellin_quadrature_laguerre(n, a, s).value, closed), kOracleTol, "laguerre " + label(n, a));
      }
    }
  }
  for (int n = 0; n <= 14; ++n) {
    for (const auto& s : samples) {
      const Complex closed = hermite::build_M(n).evaluate(oracle::exact_point(s));
      o.residual(rel(oracle::mellin_quadrature_hermite(n, s).value, closed), kOracleTol,
                 "hermite n=" + std::to_string(n));
    }
  }
  return o;
}

Outcome hydrogen() {
  Outcome o;
  const std::vector<oracle::HydrogenState> states{{1, 0, 3}, {2, 0, 3}, {3, 1, 3}, {2, 0, 2}, {4, 1, 5}, {3, 0, 9}};
  for (const auto& st : states) {
    const std::string k = "state (" + std::to_string(st.n_principal) + "," + std::to_string(st.ell) + "," +
                          std::to_string(st.D) + ")";
    for (const auto& s : s_samples()) {
      o.residual(rel(oracle::hydrogen_quadrature(st, s).value, oracle::hydrogen_mellin(st, s)), kHydrogenTol, k);
    }
    const auto c = zeros::certify_zeros(zeros::Family::laguerre, st.degree_eff(), st.alpha_eff());
    o.expect(c.certified() && c.squarefree && c.count == st.n_principal - st.ell - 1, k + " zeros");
  }
  return o;
}

Outcome generating_function() {
  Outcome o;
  for (Complex s : {Complex(0.7, 0.0), Complex(1.3, 0.0), Complex(2.4, 0.0), Complex(0.5, 3.0)}) {
    for (double t : {0.1, -0.1, 0.3, -0.3, 0.5, -0.5}) {
      o.residual(oracle::generating_function_check(s, t, 40).residual, kGfTol, "t=" + std::to_string(t));
    }
  }
  return o;
}

Outcome orthogonality() {
  Outcome o;
  for (const Rational& a : {Rational(0), Rational(1, 2)}) {
    std::vector<double> norms;
    for (int n = 0; n <= 8; ++n) norms.push_back(std::abs(zeros::orthogonality_quadrature(n, n, a).value));
    for (int n = 0; n <= 8; ++n) {
      for (int m = n + 1; m <= 8; ++m) {
        const double off = std::abs(zeros::orthogonality_quadrature(n, m, a).value);
        o.residual(off / std::sqrt(norms[static_cast<std::size_t>(n)] * norms[static_cast<std::size_t>(m)]),
                   kOrthogonalityTol, label(n, a) + " m=" + std::to_string(m));
      }
    }
  }
  return o;
}

Outcome specific_values() {
  Outcome o;
  const QPolynomial one_minus_two_s{Rational(1), Rational(-2)};
  for (const auto& a : kAlphas) o.expect(laguerre::build_P(1, a) == one_minus_two_s, "P_1 alpha=" + a.str());
  for (const auto& a : kZeroAlphas) o.expect(laguerre::build_P(1, a) == one_minus_two_s, "P_1 alpha=" + a.str());
  const QPolynomial p2 = laguerre::build_P(2, Rational(0));
  o.expect(p2 == QPolynomial{Rational(1), Rational(-2), Rational(2)}, "P_2^0 coefficients");
  for (const Rational& im : {Rational(1, 2), Rational(-1, 2)}) {
    o.expect(to_gaussian(p2).evaluate(GaussianRational(Rational(1, 2), im)).is_zero(), "P_2^0 root");
  }
  const double target = 1.0 / std::numbers::pi;
  o.residual(std::abs(hermite::build_M(0).evaluate(Complex(2.0, 0.0)) - target), kSpecificValueTol, "M_0(2) closed");
  o.residual(std::abs(oracle::mellin_quadrature_hermite(0, {2.0, 0.0}).value - target), kSpecificValueTol,
             "M_0(2) quadrature");
  return o;
}

}  // namespace

int main() {
  bool ok = true;
  ok &= report(1, "functional equations", functional_equations, kFunctionalSeconds);
  ok &= report(2, "reciprocity", reciprocity, kReciprocitySeconds);
  ok &= report(3, "expansions", expansions);
  ok &= report(4, "recursions", recursions);
  ok &= report(5, "zero certification", zero_certification, kZerosSeconds);
  ok &= report(6, "oracle agreement", oracle_agreement);
  ok &= report(7, "hydrogen", hydrogen);
  ok &= report(8, "generating function", generating_function);
  ok &= report(9, "orthogonality", orthogonality);
  ok &= report(10, "specific values", specific_values);
  std::printf("acceptance: %s\n", ok ? "PASS" : "FAIL");
  return ok ? 0 : 1;
}
