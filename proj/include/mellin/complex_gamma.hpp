#pragma once

/**
 * @file complex_gamma.hpp
 * @brief Complex Gamma function: reflection to Re z >= 1/2, upward shift to
 *        Re z >= 12, then the Stirling series for log Gamma.
 *
 * Work is carried in long double; results are rounded to double. Relative
 * accuracy is better than 1e-13 for |z| <= 50 away from the poles.
 */

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace mellin::oracle {

using Complex = std::complex<double>;
using ComplexLD = std::complex<long double>;

class GammaPoleError : public std::domain_error {
 public:
  GammaPoleError(const Complex& z, double distance)
      : std::domain_error(describe(z, distance)), distance_(distance) {}
  [[nodiscard]] double distance() const noexcept { return distance_; }

 private:
  static std::string describe(const Complex& z, double distance) {
    std::ostringstream os;
    os << "Gamma pole: z = (" << z.real() << ", " << z.imag() << ") is " << distance
       << " from a nonpositive integer";
    return os.str();
  }
  double distance_;
};

namespace detail {

inline constexpr long double kPi = std::numbers::pi_v<long double>;

// B_{2k} / (2k (2k - 1)), k = 1..8
inline constexpr std::array<long double, 8> kStirling{
    1.0L / 12.0L,       -1.0L / 360.0L, 1.0L / 1260.0L, -1.0L / 1680.0L,
    1.0L / 1188.0L,     -691.0L / 360360.0L, 1.0L / 156.0L, -3617.0L / 122400.0L};

inline ComplexLD stirling_log_gamma(ComplexLD z) {
  const ComplexLD inv = 1.0L / z;
  const ComplexLD inv2 = inv * inv;
  ComplexLD series = 0.0L, power = inv;
  for (long double c : kStirling) {
    series += c * power;
    power *= inv2;
  }
  return (z - 0.5L) * std::log(z) - z + 0.5L * std::log(2.0L * kPi) + series;
}

/// Distance from z to the nearest nonpositive integer (infinite if Re z > 0.5).
inline double pole_distance(const Complex& z) {
  if (z.real() > 0.5) return INFINITY;
  const double nearest = std::round(z.real());
  return std::abs(z - Complex(nearest, 0.0));
}

inline void check_pole(const Complex& z) {
  const double d = pole_distance(z);
  if (d < 1e-14 * std::max(1.0, std::abs(z))) throw GammaPoleError(z, d);
}

/// log Gamma for Re z >= 1/2 (branch of the imaginary part is not tracked).
inline ComplexLD log_gamma_right(ComplexLD z) {
  ComplexLD shift_log = 0.0L;
  while (z.real() < 12.0L) {
    shift_log += std::log(z);
    z += 1.0L;
  }
  return stirling_log_gamma(z) - shift_log;
}

/// log sin(pi z), stable for large |Im z|.
inline ComplexLD log_sin_pi(ComplexLD z) {
  const ComplexLD i(0.0L, 1.0L);
  if (z.imag() > 10.0L) {
    return -i * kPi * z - std::log(2.0L) - i * (kPi / 2.0L) + std::log(1.0L - std::exp(2.0L * i * kPi * z));
  }
  if (z.imag() < -10.0L) {
    return i * kPi * z - std::log(2.0L) - i * (kPi / 2.0L) + std::log(1.0L - std::exp(-2.0L * i * kPi * z));
  }
  return std::log(std::sin(kPi * z));
}

}  // namespace detail

/// log Gamma(z) up to a multiple of 2 pi i in the imaginary part.
inline Complex log_gamma(const Complex& z) {
  detail::check_pole(z);
  const ComplexLD w(z.real(), z.imag());
  if (z.real() >= 0.5) {
    const ComplexLD r = detail::log_gamma_right(w);
    return {static_cast<double>(r.real()), static_cast<double>(r.imag())};
  }
  const ComplexLD r = std::log(detail::kPi) - detail::log_sin_pi(w) - detail::log_gamma_right(1.0L - w);
  return {static_cast<double>(r.real()), static_cast<double>(r.imag())};
}

inline Complex complex_gamma(const Complex& z) {
  detail::check_pole(z);
  ComplexLD w(z.real(), z.imag());
  if (z.real() < 0.5) {
    // Reflection: Gamma(z) = pi / (sin(pi z) Gamma(1 - z)).
    ComplexLD one_minus = 1.0L - w;
    ComplexLD product = 1.0L;
    while (one_minus.real() < 12.0L) {
      product *= one_minus;
      one_minus += 1.0L;
    }
    const ComplexLD g = std::exp(detail::stirling_log_gamma(one_minus)) / product;
    const ComplexLD r = detail::kPi / (std::sin(detail::kPi * w) * g);
    return {static_cast<double>(r.real()), static_cast<double>(r.imag())};
  }
  ComplexLD product = 1.0L;
  while (w.real() < 12.0L) {
    product *= w;
    w += 1.0L;
  }
  const ComplexLD r = std::exp(detail::stirling_log_gamma(w)) / product;
  return {static_cast<double>(r.real()), static_cast<double>(r.imag())};
}

/// 1 / Gamma(z); exactly zero at the poles.
inline Complex reciprocal_gamma(const Complex& z) {
  if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::round(z.real())) return {0.0, 0.0};
  return 1.0 / complex_gamma(z);
}

/// |Gamma(z)|^2 through the log form, so it underflows gracefully far up the imaginary axis.
inline double abs_gamma_squared(const Complex& z) { return std::exp(2.0 * log_gamma(z).real()); }

}  // namespace mellin::oracle
