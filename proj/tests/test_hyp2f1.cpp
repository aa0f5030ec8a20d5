#include <gtest/gtest.h>

#include "generators.hpp"
#include "mellin/hyp2f1.hpp"

using namespace mellin;

namespace {

/// sum_k (-n)_k (b)_k / ((c)_k k!) z^k with b = slope s + intercept evaluated at a rational s.
Rational series_at(int n, const LinearForm& b, const Rational& c, const Rational& z, const Rational& s) {
  const Rational bv = b.slope * s + b.intercept;
  Rational sum(0), term(1);
  for (int k = 0; k <= n; ++k) {
    sum += term;
    if (k == n) break;
    term *= Rational(k - n) * (bv + Rational(k)) * z / ((c + Rational(k)) * Rational(k + 1));
  }
  return sum;
}

Rational nonpole_c(gen::Source& src, int n) {
  for (;;) {
    const Rational c = src.rational(20, 7);
    if (!(c.is_integer() && c <= Rational(0) && c > Rational(-n))) return c;
  }
}

}  // namespace

TEST(Hyp2F1, EmptySeries) {
  EXPECT_EQ(hyp2f1_poly({0, {Rational(1), Rational(0)}, Rational(1), Rational(2)}), QPolynomial::constant(Rational(1)));
}

TEST(Hyp2F1, LinearExample) {
  EXPECT_EQ(hyp2f1_poly({1, {Rational(1), Rational(0)}, Rational(1), Rational(2)}),
            (QPolynomial{Rational(1), Rational(-2)}));
}

TEST(Hyp2F1, QuadraticExample) {
  EXPECT_EQ(hyp2f1_poly({2, {Rational(1, 2), Rational(0)}, Rational(1, 2), Rational(2)}),
            (QPolynomial{Rational(1), Rational(-4, 3), Rational(4, 3)}));
}

TEST(Hyp2F1, PoleInDenominatorThrows) {
  EXPECT_THROW(hyp2f1_poly({3, {Rational(1), Rational(0)}, Rational(-1), Rational(2)}), PoleError);
  EXPECT_THROW(hyp2f1_value(2, Rational(1), Rational(0), Rational(2)), PoleError);
  EXPECT_NO_THROW(hyp2f1_poly({1, {Rational(1), Rational(0)}, Rational(-1), Rational(2)}));
}

TEST(Hyp2F1, MatchesTermwiseSumOnRandomDraws) {
  gen::Source src(11);
  for (int k = 0; k < 150; ++k) {
    const int n = src.integer(0, 10);
    const LinearForm b{src.rational(6, 4), src.rational(10, 6)};
    const Rational c = nonpole_c(src, n), z = src.rational(4, 3), s = src.rational();
    EXPECT_EQ(hyp2f1_poly({n, b, c, z}).evaluate(s), series_at(n, b, c, z, s));
  }
}

TEST(Hyp2F1, DegreeAndLeadingCoefficient) {
  gen::Source src(12);
  for (int k = 0; k < 100; ++k) {
    const int n = src.integer(0, 10);
    Rational slope = src.rational(6, 4);
    if (slope.is_zero()) slope = Rational(1);
    const Rational c = nonpole_c(src, n);
    const QPolynomial p = hyp2f1_poly({n, {slope, src.rational()}, c, Rational(2)});
    ASSERT_EQ(p.degree(), n);
    // (-n)_n slope^n 2^n / ((c)_n n!) = (-2 slope)^n / (c)_n
    EXPECT_EQ(p.leading(), pow(Rational(-2) * slope, n) / rising(c, n));
  }
}

TEST(Hyp2F1, ConstantParameterIsDirectSum) {
  gen::Source src(13);
  for (int k = 0; k < 100; ++k) {
    const int n = src.integer(0, 12);
    const Rational b = src.rational(), c = nonpole_c(src, n), z = src.rational(5, 3);
    const QPolynomial p = hyp2f1_poly({n, {Rational(0), b}, c, z});
    EXPECT_LE(p.degree(), 0);
    EXPECT_EQ(p.evaluate(Rational(0)), hyp2f1_value(n, b, c, z));
  }
}

TEST(Pfaff, Examples) {
  EXPECT_TRUE(pfaff_terminating_check(0, {Rational(1), Rational(0)}, Rational(1)));
  EXPECT_TRUE(pfaff_terminating_check(1, {Rational(1), Rational(0)}, Rational(1)));
  for (const Rational& a : {Rational(-1, 2), Rational(0), Rational(1), Rational(7, 3)}) {
    for (int n = 0; n <= 12; ++n) {
      EXPECT_TRUE(pfaff_terminating_check(n, {Rational(1), a / Rational(2)}, a + Rational(1)))
          << "n = " << n << " alpha = " << a.str();
    }
  }
}

TEST(Pfaff, HoldsOnRandomDraws) {
  gen::Source src(14);
  for (int k = 0; k < 100; ++k) {
    const int n = src.integer(0, 10);
    const LinearForm b{src.rational(6, 5), src.rational(10, 6)};
    EXPECT_TRUE(pfaff_terminating_check(n, b, nonpole_c(src, n)));
  }
}

TEST(Pfaff, FailsAtArgumentOtherThanTwo) {
  // The reflection is special to z = 2; at z = 3 it breaks already for n = 1.
  const QPolynomial lhs = hyp2f1_poly({1, {Rational(1), Rational(0)}, Rational(1), Rational(3)});
  const QPolynomial rhs = -hyp2f1_poly({1, {Rational(-1), Rational(1)}, Rational(1), Rational(3)});
  EXPECT_NE(lhs, rhs);
}

TEST(SymmetryReciprocity, Examples) {
  EXPECT_EQ(symmetry_reciprocity_core(0, 0, Rational(5, 7)), std::make_pair(Rational(1), Rational(1)));
  const auto [a, b] = symmetry_reciprocity_core(2, 1, Rational(1));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, series_at(2, {Rational(0), Rational(-1)}, Rational(1), Rational(2), Rational(0)));
  const auto [c, d] = symmetry_reciprocity_core(3, 5, Rational(3, 2));
  EXPECT_EQ(c, d);
}

TEST(SymmetryReciprocity, HoldsOnRandomDraws) {
  gen::Source src(15);
  for (int k = 0; k < 150; ++k) {
    const int n = src.integer(0, 12), m = src.integer(0, 12);
    const auto [a, b] = symmetry_reciprocity_core(n, m, nonpole_c(src, std::max(n, m)));
    EXPECT_EQ(a, b);
  }
}
