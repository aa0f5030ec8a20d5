#include <gtest/gtest.h>

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <vector>

#include "generators.hpp"
#include "mellin/exact_scalar.hpp"
#include "mellin/gaussian.hpp"
#include "mellin/pochhammer.hpp"
#include "mellin/polynomial.hpp"
#include "mellin/rational.hpp"
#include "mellin/sturm.hpp"

using namespace mellin;

namespace {

constexpr int kDraws = 200;

/// Determinant over Q by fraction-exact Gaussian elimination.
Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      const Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

/// Sylvester resultant of a and b, both of positive degree.
Rational resultant(const QPolynomial& a, const QPolynomial& b) {
  const int da = a.degree(), db = b.degree();
  const int size = da + db;
  std::vector<std::vector<Rational>> m(static_cast<std::size_t>(size), std::vector<Rational>(static_cast<std::size_t>(size)));
  for (int r = 0; r < db; ++r) {
    for (int k = 0; k <= da; ++k) m[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + k)] = a.coeff(da - k);
  }
  for (int r = 0; r < da; ++r) {
    for (int k = 0; k <= db; ++k) m[static_cast<std::size_t>(db + r)][static_cast<std::size_t>(r + k)] = b.coeff(db - k);
  }
  return determinant(std::move(m));
}

/// Roots of p from the eigenvalues of its companion matrix.
std::vector<std::complex<double>> companion_roots(const QPolynomial& p) {
  const int n = p.degree();
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) c(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) c(i, n - 1) = -(p.coeff(i) / p.leading()).to_double();
  Eigen::EigenSolver<Eigen::MatrixXd> es(c);
  std::vector<std::complex<double>> out;
  for (int i = 0; i < n; ++i) out.push_back(es.eigenvalues()(i));
  return out;
}

QPolynomial from_roots(const std::vector<Rational>& roots) {
  QPolynomial p = QPolynomial::constant(Rational(1));
  for (const auto& r : roots) p *= QPolynomial::linear(Rational(1), -r);
  return p;
}

}  // namespace

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(Rational::parse("3/6").str(), "1/2");
  EXPECT_EQ(Rational::parse("-4/2").str(), "-2");
  EXPECT_EQ(Rational::parse("7").str(), "7");
  EXPECT_EQ(Rational::parse("+5/-10").str(), "-1/2");
  EXPECT_THROW(Rational::parse(""), std::invalid_argument);
  EXPECT_THROW(Rational::parse("1/"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("a/2"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("1 /2"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("1/0"), std::domain_error);
}

TEST(Rational, DivisionByZeroThrows) {
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
  EXPECT_THROW(Rational(0).inverse(), std::domain_error);
}

TEST(Rational, FromDoubleIsExact) {
  EXPECT_EQ(Rational::from_double(0.5), Rational(1, 2));
  EXPECT_EQ(Rational::from_double(-3.25), Rational(-13, 4));
  EXPECT_EQ(Rational::from_double(0.1).to_double(), 0.1);
  EXPECT_THROW(Rational::from_double(INFINITY), std::domain_error);
}

TEST(Rational, FieldAxiomsOnRandomDraws) {
  gen::Source src(101);
  for (int k = 0; k < kDraws; ++k) {
    const Rational a = src.rational(), b = src.rational(), c = src.rational();
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, Rational(0));
    if (!b.is_zero()) { EXPECT_EQ((a / b) * b, a); }
  }
}

TEST(Rational, FloorAndOrdering) {
  EXPECT_EQ(Rational(-7, 2).floor(), -4);
  EXPECT_EQ(Rational(7, 2).floor(), 3);
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_EQ(binomial(10, 3), Rational(120));
  EXPECT_EQ(factorial(6), Rational(720));
  EXPECT_EQ(rising(Rational(1, 2), 3), Rational(15, 8));
}

TEST(ExactScalar, RingAxiomsOnRandomDraws) {
  gen::Source src(202);
  for (int k = 0; k < kDraws; ++k) {
    const ExactScalar a = src.scalar(), b = src.scalar(), c = src.scalar();
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
    const double lhs = (a * b).to_double(), rhs = a.to_double() * b.to_double();
    EXPECT_NEAR(lhs, rhs, 1e-12 * (1.0 + std::abs(rhs)));
  }
}

TEST(ExactScalar, MonomialInverse) {
  gen::Source src(203);
  for (int k = 0; k < kDraws; ++k) {
    Rational q = src.rational();
    if (q.is_zero()) q = Rational(1);
    const ExactScalar m = ExactScalar::monomial(q, src.integer(0, 1), src.integer(-5, 5));
    EXPECT_EQ(m * m.inverse(), ExactScalar(1));
  }
  EXPECT_THROW((ExactScalar(1) + ExactScalar::sqrt2()).inverse(), std::domain_error);
}

TEST(ExactScalar, PowersOfTwoAndPi) {
  EXPECT_EQ(ExactScalar::sqrt2() * ExactScalar::sqrt2(), ExactScalar(2));
  EXPECT_EQ(ExactScalar::two_half_power(-3), ExactScalar::monomial(Rational(1, 4), 1, 0));
  EXPECT_EQ(ExactScalar::two_half_power(5) * ExactScalar::two_half_power(-5), ExactScalar(1));
  EXPECT_NEAR(ExactScalar::pi_half_power(3).to_double(), std::pow(M_PI, 1.5), 1e-13);
  EXPECT_EQ(ExactScalar::pi_half_power(2).str(), "1*pi^1");
}

TEST(Sqrt2Value, FieldOperations) {
  gen::Source src(204);
  for (int k = 0; k < kDraws; ++k) {
    const Sqrt2Value x(src.rational(), src.rational()), y(src.rational(), src.rational());
    if (y.is_zero()) continue;
    EXPECT_EQ((x / y) * y, x);
    EXPECT_EQ(x * y, y * x);
  }
  EXPECT_EQ(Sqrt2Value::sqrt2() * Sqrt2Value::sqrt2(), Sqrt2Value(Rational(2)));
}

TEST(Gaussian, FieldAxiomsOnRandomDraws) {
  gen::Source src(205);
  for (int k = 0; k < kDraws; ++k) {
    const GaussianRational a = src.gaussian(), b = src.gaussian(), c = src.gaussian();
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    if (!b.is_zero()) { EXPECT_EQ((a / b) * b, a); }
  }
  EXPECT_EQ(GaussianRational::i() * GaussianRational::i(), GaussianRational(Rational(-1)));
  EXPECT_EQ(i_power(7), -GaussianRational::i());
}

TEST(Polynomial, Examples) {
  const QPolynomial p{Rational(1), Rational(-2), Rational(2)};
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(to_string(p), "1 - 2 s + 2 s^2");
  EXPECT_EQ(p.evaluate(Rational(1, 2)), Rational(1, 2));
  EXPECT_EQ(p.derivative(), (QPolynomial{Rational(-2), Rational(4)}));
  EXPECT_EQ(QPolynomial().degree(), -1);
  EXPECT_EQ(to_string(QPolynomial()), "0");
  EXPECT_EQ(p.compose_linear(Rational(-1), Rational(1)), p);
}

TEST(Polynomial, RingAxiomsOnRandomDraws) {
  gen::Source src(301);
  for (int k = 0; k < kDraws; ++k) {
    const QPolynomial a = src.polynomial(6), b = src.polynomial(6), c = src.polynomial(6);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_TRUE((a - a).is_zero());
    const Rational x = src.rational();
    EXPECT_EQ((a * b).evaluate(x), a.evaluate(x) * b.evaluate(x));
    EXPECT_EQ(a.compose(b).evaluate(x), a.evaluate(b.evaluate(x)));
    if (!a.is_zero() && !b.is_zero()) { EXPECT_EQ((a * b).degree(), a.degree() + b.degree()); }
  }
}

TEST(Polynomial, DivisionIdentityOnRandomDraws) {
  gen::Source src(302);
  for (int k = 0; k < kDraws; ++k) {
    const QPolynomial a = src.polynomial(8);
    QPolynomial b = src.polynomial(4);
    if (b.is_zero()) b = QPolynomial::constant(Rational(3));
    const auto [q, r] = divmod(a, b);
    EXPECT_EQ(q * b + r, a);
    EXPECT_LT(r.degree(), std::max(b.degree(), 0));
  }
  EXPECT_THROW(divmod(QPolynomial{Rational(1)}, QPolynomial()), std::domain_error);
}

TEST(Polynomial, GcdDividesAndMatchesResultant) {
  gen::Source src(303);
  for (int k = 0; k < kDraws / 2; ++k) {
    QPolynomial common = src.polynomial(2);
    const bool share = k % 2 == 0 && common.degree() >= 1;
    if (!share) common = QPolynomial::constant(Rational(1));
    QPolynomial a = src.polynomial(4) * common, b = src.polynomial(4) * common;
    if (a.degree() < 1 || b.degree() < 1) continue;
    const QPolynomial g = poly_gcd(a, b);
    EXPECT_TRUE(divmod(a, g).second.is_zero());
    EXPECT_TRUE(divmod(b, g).second.is_zero());
    EXPECT_EQ(g.degree() > 0, resultant(a, b).is_zero());
    if (share) { EXPECT_GE(g.degree(), common.degree()); }
  }
}

TEST(Polynomial, PrimitivePartHasCoprimeIntegerCoefficients) {
  const QPolynomial p{Rational(2, 3), Rational(-4, 9), Rational(8, 15)};
  const QPolynomial q = primitive_part(p);
  EXPECT_EQ(q, (QPolynomial{Rational(30), Rational(-20), Rational(24)}) * Rational(1, 2));
  EXPECT_GT((q.leading() / p.leading()).sign(), 0);
}

TEST(Pochhammer, ProductDefinition) {
  gen::Source src(401);
  for (int k = 0; k < 60; ++k) {
    const Rational shift = src.rational(), x = src.rational();
    const int len = src.integer(0, 8);
    EXPECT_EQ(pochhammer_poly(shift, len).evaluate(x), rising(x + shift, len));
  }
  EXPECT_EQ(pochhammer_poly(HalfInteger::half(1), 2), (QPolynomial{Rational(3, 4), Rational(2), Rational(1)}));
  EXPECT_THROW(rising_linear(Rational(1), Rational(0), -1), std::domain_error);
}

TEST(Stirling, SumsToRisingFactorial) {
  // (x)_k = sum_j (-1)^(k-j) s(k, j) x^j
  for (int k = 0; k <= 12; ++k) {
    QPolynomial sum;
    for (int j = 0; j <= k; ++j) sum += QPolynomial::monomial(sign_power(k - j) * stirling_first(k, j), j);
    EXPECT_EQ(sum, pochhammer_poly(Rational(0), k)) << "k = " << k;
  }
  EXPECT_EQ(stirling_first(4, 2), Rational(11));
  EXPECT_EQ(stirling_first(5, 1), Rational(24));
  EXPECT_EQ(stirling_first(3, 5), Rational(0));
}

TEST(Sturm, SqrtTwo) {
  const QPolynomial p{Rational(-2), Rational(0), Rational(1)};
  const auto iv = sturm_isolate(p);
  ASSERT_EQ(iv.size(), 2u);
  const auto tight = refine_root(p, iv[1], Rational(1, 1000000));
  EXPECT_LT(tight.lo.to_double(), std::sqrt(2.0));
  EXPECT_GE(tight.hi.to_double(), std::sqrt(2.0));
  EXPECT_EQ(SturmChain(p).count_real(), 2);
}

TEST(Sturm, RepeatedRootHasMultiplicityTwo) {
  const QPolynomial p = from_roots({Rational(1), Rational(1)});
  const auto iv = sturm_isolate(p);
  ASSERT_EQ(iv.size(), 1u);
  EXPECT_EQ(iv[0].multiplicity, 2);
  EXPECT_TRUE(iv[0].contains(Rational(1)));
  const auto factors = squarefree_decomposition(p);
  ASSERT_EQ(factors.size(), 1u);
  EXPECT_EQ(factors[0].second, 2);
}

TEST(Sturm, NoRealRoots) {
  EXPECT_TRUE(sturm_isolate(QPolynomial{Rational(1), Rational(0), Rational(1)}).empty());
  EXPECT_TRUE(sturm_isolate(QPolynomial::constant(Rational(5))).empty());
  EXPECT_THROW(sturm_isolate(QPolynomial()), std::domain_error);
}

TEST(Sturm, IsolatesConstructedRootsOnRandomDraws) {
  gen::Source src(501);
  for (int k = 0; k < 80; ++k) {
    std::vector<Rational> roots;
    const int count = src.integer(1, 7);
    for (int j = 0; j < count; ++j) roots.push_back(src.rational(40, 9));
    QPolynomial p = from_roots(roots);
    const int quadratics = src.integer(0, 2);
    for (int j = 0; j < quadratics; ++j) p *= QPolynomial{Rational(src.integer(1, 9)), Rational(0), Rational(1)};
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    const auto iv = sturm_isolate(p);
    ASSERT_EQ(iv.size(), roots.size());
    int total = 0;
    for (std::size_t j = 0; j < iv.size(); ++j) {
      EXPECT_TRUE(iv[j].contains(roots[j]));
      total += iv[j].multiplicity;
      if (j > 0) { EXPECT_LE(iv[j - 1].hi, iv[j].lo); }
    }
    EXPECT_EQ(total, count);
  }
}

TEST(Sturm, CountMatchesCompanionEigenvalues) {
  gen::Source src(502);
  for (int k = 0; k < 60; ++k) {
    std::vector<Rational> roots;
    const int count = src.integer(1, 6);
    for (int j = 0; j < count; ++j) roots.push_back(Rational(src.integer(-30, 30), 4) + Rational(j, 97));
    QPolynomial p = from_roots(roots) * QPolynomial{Rational(src.integer(1, 4)), Rational(1), Rational(1)};
    int real = 0;
    for (const auto& z : companion_roots(p)) real += std::abs(z.imag()) < 1e-7;
    EXPECT_EQ(SturmChain(p).count_real(), real);
  }
}
