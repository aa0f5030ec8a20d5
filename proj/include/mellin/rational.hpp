#pragma once

/**
 * @file rational.hpp
 * @brief Exact arbitrary-precision rationals and half-integers.
 *
 * Rational is a value type over GMP's mpq_class. It is always kept in lowest
 * terms with a positive denominator, so equality is structural.
 */

#include <cmath>
#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mellin {

class Rational {
 public:
  Rational() = default;

  template <std::integral I>
  Rational(I value) : v_(static_cast<long>(value)) {}  // NOLINT(implicit)

  template <std::integral I, std::integral J>
  Rational(I num, J den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
    v_.canonicalize();
  }

  explicit Rational(const mpz_class& z) : v_(z) {}
  Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  /// The exact binary value of a finite double.
  static Rational from_double(double d) {
    if (!std::isfinite(d)) throw std::domain_error("Rational: non-finite double");
    return Rational(mpq_class(d));
  }

  /// Parses "p", "-p", "p/q". Whitespace is not accepted.
  static Rational parse(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("Rational: empty string");
    const auto slash = text.find('/');
    auto parse_int = [&](std::string_view part) {
      if (part.empty()) throw std::invalid_argument("Rational: malformed '" + std::string(text) + "'");
      std::size_t start = (part.front() == '-' || part.front() == '+') ? 1 : 0;
      if (start == part.size()) throw std::invalid_argument("Rational: malformed '" + std::string(text) + "'");
      for (std::size_t i = start; i < part.size(); ++i) {
        if (part[i] < '0' || part[i] > '9') {
          throw std::invalid_argument("Rational: malformed '" + std::string(text) + "'");
        }
      }
      std::string digits(part.front() == '+' ? part.substr(1) : part);
      return mpz_class(digits, 10);
    };
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
  }

  [[nodiscard]] mpz_class numerator() const { return v_.get_num(); }
  [[nodiscard]] mpz_class denominator() const { return v_.get_den(); }
  [[nodiscard]] const mpq_class& raw() const noexcept { return v_; }

  [[nodiscard]] int sign() const { return sgn(v_); }
  [[nodiscard]] bool is_zero() const { return sgn(v_) == 0; }
  [[nodiscard]] bool is_integer() const { return v_.get_den() == 1; }
  [[nodiscard]] double to_double() const { return v_.get_d(); }
  [[nodiscard]] long double to_long_double() const {
    // Double-double split keeps the extra mantissa bits of long double.
    mpf_class q(v_, 192);
    const double hi = q.get_d();
    mpf_class rest(q - mpf_class(hi, 192), 192);
    return static_cast<long double>(hi) + static_cast<long double>(rest.get_d());
  }

  /// "p" for integers, "p/q" otherwise.
  [[nodiscard]] std::string str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  [[nodiscard]] Rational abs() const { return Rational(mpq_class(::abs(v_))); }
  [[nodiscard]] Rational inverse() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    return Rational(mpq_class(1) / v_);
  }
  /// Largest integer not exceeding the value.
  [[nodiscard]] mpz_class floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return q;
  }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class v_{0};
};

inline Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) return pow(base.inverse(), -exponent);
  Rational result(1), b = base;
  auto e = static_cast<unsigned long>(exponent);
  while (e != 0) {
    if (e & 1UL) result *= b;
    b *= b;
    e >>= 1U;
  }
  return result;
}

inline Rational factorial(int n) {
  if (n < 0) throw std::domain_error("factorial of negative integer");
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(f);
}

/// Rising factorial (a)_k = a(a+1)...(a+k-1) of a rational.
inline Rational rising(const Rational& a, int k) {
  Rational r(1);
  for (int j = 0; j < k; ++j) r *= a + Rational(j);
  return r;
}

inline Rational binomial(int n, int k) {
  if (k < 0 || k > n) return Rational(0);
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(b);
}

inline Rational sign_power(int k) { return (k % 2 == 0) ? Rational(1) : Rational(-1); }

/// k/2 held exactly; closed under addition.
struct HalfInteger {
  int twice_value = 0;

  static constexpr HalfInteger from_int(int k) { return HalfInteger{2 * k}; }
  static constexpr HalfInteger half(int k) { return HalfInteger{k}; }

  [[nodiscard]] Rational to_rational() const { return Rational(twice_value, 2); }
  [[nodiscard]] bool is_integer() const { return twice_value % 2 == 0; }

  friend constexpr HalfInteger operator+(HalfInteger a, HalfInteger b) {
    return HalfInteger{a.twice_value + b.twice_value};
  }
  friend constexpr HalfInteger operator-(HalfInteger a, HalfInteger b) {
    return HalfInteger{a.twice_value - b.twice_value};
  }
  friend constexpr bool operator==(HalfInteger, HalfInteger) = default;
};

}  // namespace mellin

template <>
struct std::hash<mellin::Rational> {
  std::size_t operator()(const mellin::Rational& q) const {
    return std::hash<std::string>{}(q.str());
  }
};
