#include <gtest/gtest.h>

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

#include "generators.hpp"
#include "mellin/critical_zeros.hpp"

using namespace mellin;
using zeros::Family;

namespace {

/// Real parts of the companion eigenvalues with negligible imaginary part, sorted.
std::vector<double> companion_real_roots(const QPolynomial& p) {
  const int n = p.degree();
  std::vector<double> out;
  if (n < 1) return out;
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) c(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) c(i, n - 1) = -(p.coeff(i) / p.leading()).to_double();
  Eigen::EigenSolver<Eigen::MatrixXd> es(c);
  for (int i = 0; i < n; ++i) {
    const auto z = es.eigenvalues()(i);
    if (std::abs(z.imag()) < 1e-6 * (1.0 + std::abs(z.real()))) out.push_back(z.real());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(CriticalLine, DegreeOneAndTwoExamples) {
  const auto c1 = zeros::critical_line_poly(Family::laguerre, 1, Rational(3, 2));
  EXPECT_TRUE(c1.imaginary_part);
  EXPECT_EQ(c1.rho, (QPolynomial{Rational(0), Rational(-2)}));
  const auto c2 = zeros::critical_line_poly(Family::laguerre, 2, Rational(0));
  EXPECT_FALSE(c2.imaginary_part);
  EXPECT_EQ(c2.rho, (QPolynomial{Rational(1, 2), Rational(0), Rational(-2)}));
  EXPECT_EQ(zeros::critical_line_poly(Family::laguerre, 0, Rational(1)).rho, QPolynomial::constant(Rational(1)));
}

TEST(CriticalLine, RhoHasParityOfDegree) {
  gen::Source src(61);
  for (int k = 0; k < 40; ++k) {
    const Rational a = src.alpha();
    const int n = src.integer(0, 14);
    const auto cp = zeros::critical_line_poly(Family::laguerre, n, a);
    EXPECT_EQ(cp.rho.degree(), n);
    EXPECT_TRUE(zeros::has_parity(cp.rho, n % 2)) << n << " " << a.str();
  }
}

TEST(CriticalLine, AsymmetricPolynomialKeepsBothParts) {
  const auto [re, im] = split_parts(zeros::on_critical_line(QPolynomial::monomial(Rational(1), 2)));
  EXPECT_FALSE(re.is_zero());
  EXPECT_FALSE(im.is_zero());
}

TEST(Certificate, DegreeTwoRootsAreHalf) {
  const auto c = zeros::certify_zeros(Family::laguerre, 2, Rational(0));
  EXPECT_TRUE(c.certified());
  ASSERT_EQ(c.count, 2);
  EXPECT_NEAR(c.roots[0], -0.5, 1e-12);
  EXPECT_NEAR(c.roots[1], 0.5, 1e-12);
}

TEST(Certificate, DegreeZeroIsEmpty) {
  const auto c = zeros::certify_zeros(Family::laguerre, 0, Rational(1));
  EXPECT_TRUE(c.certified());
  EXPECT_EQ(c.count, 0);
  EXPECT_TRUE(c.roots.empty());
}

TEST(Certificate, DegreeThreeMatchesCompanionMatrix) {
  const auto c = zeros::certify_zeros(Family::laguerre, 3, Rational(0));
  ASSERT_EQ(c.intervals.size(), 3u);
  const auto eig = companion_real_roots(c.rho);
  ASSERT_EQ(eig.size(), 3u);
  for (std::size_t k = 0; k < 3; ++k) EXPECT_NEAR(c.roots[k], eig[k], 1e-9);
}

TEST(Certificate, SquarefreeMatchesNonzeroDiscriminant) {
  for (int n = 1; n <= 10; ++n) {
    const QPolynomial rho = zeros::critical_line_poly(Family::laguerre, n, Rational(0)).rho;
    EXPECT_EQ(poly_gcd(rho, rho.derivative()).degree(), 0) << n;
    const auto eig = companion_real_roots(rho);
    ASSERT_EQ(static_cast<int>(eig.size()), n);
    for (std::size_t k = 1; k < eig.size(); ++k) EXPECT_GT(eig[k] - eig[k - 1], 1e-6);
  }
}

TEST(Certificate, GridOfAlphas) {
  for (const Rational& a : {Rational(-1, 2), Rational(0), Rational(1, 2), Rational(1), Rational(5, 2)}) {
    for (int n = 0; n <= 20; ++n) {
      const auto c = zeros::certify_zeros(Family::laguerre, n, a);
      EXPECT_TRUE(c.certified()) << n << " " << a.str();
      EXPECT_EQ(c.count, n);
    }
  }
}

TEST(Certificate, RefinedRootsHaveSmallResidual) {
  for (int n = 1; n <= 12; ++n) {
    const auto c = zeros::certify_zeros(Family::laguerre, n, Rational(1, 2));
    const QPolynomial p = laguerre::build_P(n, Rational(1, 2));
    for (double t : c.roots) {
      const auto v = evaluate_complex(p, {0.5L, static_cast<long double>(t)});
      const auto dv = evaluate_complex(p.derivative(), {0.5L, static_cast<long double>(t)});
      EXPECT_LT(std::abs(v), 1e-12L * std::max(1.0L, std::abs(dv))) << n << " " << t;
    }
  }
}

TEST(Certificate, RootsAreSymmetric) {
  for (int n = 1; n <= 15; ++n) {
    const auto c = zeros::certify_zeros(Family::laguerre, n, Rational(1));
    for (std::size_t k = 0; k < c.roots.size(); ++k) {
      EXPECT_NEAR(c.roots[k], -c.roots[c.roots.size() - 1 - k], 1e-12 * (1.0 + std::abs(c.roots[k])));
    }
  }
}

TEST(Certificate, RandomAlphas) {
  gen::Source src(62);
  for (int k = 0; k < 30; ++k) {
    const Rational a = src.alpha();
    const int n = src.integer(0, 12);
    const auto c = zeros::certify_zeros(Family::laguerre, n, a);
    EXPECT_TRUE(c.certified()) << n << " " << a.str();
  }
}

TEST(Certificate, HermiteFamilies) {
  for (int m = 0; m <= 12; ++m) {
    EXPECT_TRUE(zeros::certify_zeros(Family::hermite_even, m, Rational(0)).certified()) << m;
    EXPECT_TRUE(zeros::certify_zeros(Family::hermite_odd_reduced, m, Rational(0)).certified()) << m;
  }
  const auto c = zeros::certify_zeros(Family::hermite_even, 2, Rational(0));
  ASSERT_EQ(c.count, 2);
  EXPECT_NEAR(c.roots[1], 1.0 / std::sqrt(2.0), 1e-12);
}

TEST(Certificate, RejectsOffLineRoots) {
  zeros::CriticalLinePoly cp;
  cp.rho = QPolynomial{Rational(1), Rational(0), Rational(1)};
  const auto c = zeros::certify_zeros(cp);
  EXPECT_FALSE(c.certified());
  EXPECT_EQ(c.count, 0);
  zeros::CriticalLinePoly doubled;
  doubled.rho = QPolynomial{Rational(0), Rational(0), Rational(1)};
  const auto d = zeros::certify_zeros(doubled);
  EXPECT_FALSE(d.squarefree);
  EXPECT_FALSE(d.certified());
}

TEST(Interlacing, LowDegree) {
  EXPECT_TRUE(zeros::interlacing_check(Family::laguerre, 0, Rational(0)).holds);
  EXPECT_TRUE(zeros::interlacing_check(Family::laguerre, 1, Rational(0)).holds);
}

TEST(Interlacing, Grid) {
  for (const Rational& a : {Rational(-1, 2), Rational(0), Rational(1)}) {
    for (int n = 0; n <= 19; ++n) {
      const auto r = zeros::interlacing_check(Family::laguerre, n, a);
      EXPECT_TRUE(r.holds) << n << " " << a.str() << ": " << r.detail;
    }
  }
  for (int m = 0; m < 12; ++m) {
    EXPECT_TRUE(zeros::interlacing_check(Family::hermite_even, m, Rational(0)).holds) << m;
    EXPECT_TRUE(zeros::interlacing_check(Family::hermite_odd_reduced, m, Rational(0)).holds) << m;
  }
}

TEST(Interlacing, AgreesWithFloatingRoots) {
  for (int n = 1; n <= 10; ++n) {
    const auto lower = zeros::certify_zeros(Family::laguerre, n, Rational(1, 2)).roots;
    const auto upper = zeros::certify_zeros(Family::laguerre, n + 1, Rational(1, 2)).roots;
    for (std::size_t k = 0; k < lower.size(); ++k) {
      EXPECT_LT(upper[k], lower[k]);
      EXPECT_LT(lower[k], upper[k + 1]);
    }
  }
}

TEST(Orthogonality, DiagonalIsPositiveNorm) {
  // The norm is 2 pi Gamma(n + a + 1) / n!.
  for (const Rational& a : {Rational(0), Rational(1, 2)}) {
    for (int n = 0; n <= 5; ++n) {
      const auto r = zeros::orthogonality_quadrature(n, n, a);
      const double norm = 2.0 * std::numbers::pi * std::tgamma(n + a.to_double() + 1.0) / std::tgamma(n + 1.0);
      EXPECT_NEAR(r.value.real(), norm, 1e-9 * norm) << n;
      EXPECT_NEAR(r.value.imag(), 0.0, 1e-12 * norm);
      EXPECT_TRUE(r.converged);
    }
  }
}

TEST(Orthogonality, OffDiagonalVanishes) {
  const auto r = zeros::orthogonality_quadrature(1, 0, Rational(0));
  EXPECT_LT(std::abs(r.value), 1e-6 * 2.0 * std::numbers::pi);
  for (int n = 0; n <= 4; ++n) {
    for (int m = n + 1; m <= 4; ++m) {
      const double scale = 2.0 * std::numbers::pi * std::sqrt(std::tgamma(n + 1.5) * std::tgamma(m + 1.5) /
                                                               (std::tgamma(n + 1.0) * std::tgamma(m + 1.0)));
      EXPECT_LT(std::abs(zeros::orthogonality_quadrature(n, m, Rational(1, 2)).value), 1e-9 * scale);
    }
  }
}
