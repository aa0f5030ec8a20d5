#pragma once

// Adaptive Gauss-Kronrod (7/15) integration on finite and semi-infinite intervals.

#include <array>
#include <cmath>
#include <complex>
#include <queue>
#include <vector>

namespace mellin::oracle {

template <class V>
struct IntegrationResult {
  V value{};
  double error = 0.0;
  int intervals = 0;
  bool converged = false;
};

namespace detail {

// QUADPACK qk15 abscissae and weights; the odd entries of kXgk are the 7-point Gauss nodes.
inline constexpr std::array<double, 8> kXgk{
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kWgk{
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kWg{
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class V>
double magnitude(const V& v) {
  return std::abs(v);
}

template <class V>
struct Panel {
  double a, b;
  V value;
  double error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

template <class V, class F>
Panel<V> gk15(F& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const V fc = f(center);
  V kronrod = fc * kWgk[7];
  V gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const V sum = f(center - dx) + f(center + dx);
    kronrod += sum * kWgk[j];
    if (j % 2 == 1) gauss += sum * kWg[j / 2];
  }
  kronrod *= half;
  gauss *= half;
  return {a, b, kronrod, magnitude(kronrod - gauss)};
}

}  // namespace detail

/// Integrates f over [a, b], bisecting the panel with the largest error estimate
/// until the total estimate is below max(abs_tol, rel_tol * |value|).
template <class V, class F>
IntegrationResult<V> integrate(F f, double a, double b, double abs_tol, double rel_tol, int max_intervals = 4000,
                               int initial_panels = 1) {
  std::priority_queue<detail::Panel<V>> heap;
  V total{};
  double error = 0.0;
  const double step = (b - a) / initial_panels;
  for (int k = 0; k < initial_panels; ++k) {
    const double lo = a + step * k;
    const double hi = (k + 1 == initial_panels) ? b : lo + step;
    auto p = detail::gk15<V>(f, lo, hi);
    total += p.value;
    error += p.error;
    heap.push(p);
  }
  IntegrationResult<V> r;
  while (error > std::max(abs_tol, rel_tol * detail::magnitude(total)) &&
         static_cast<int>(heap.size()) < max_intervals) {
    const auto worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {
      heap.push(worst);
      break;
    }
    const auto left = detail::gk15<V>(f, worst.a, mid);
    const auto right = detail::gk15<V>(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }
  // Re-sum to shed the drift of the running updates.
  V sum{};
  double err = 0.0;
  r.intervals = static_cast<int>(heap.size());
  while (!heap.empty()) {
    sum += heap.top().value;
    err += heap.top().error;
    heap.pop();
  }
  r.value = sum;
  r.error = err;
  r.converged = err <= std::max(abs_tol, rel_tol * detail::magnitude(sum));
  return r;
}

/// Integrates f over [a, inf) through x = a + u / (1 - u).
template <class V, class F>
IntegrationResult<V> integrate_to_infinity(F f, double a, double abs_tol, double rel_tol, int max_intervals = 4000) {
  auto mapped = [&](double u) -> V {
    const double w = 1.0 - u;
    const double x = a + u / w;
    const V fx = f(x);
    if (detail::magnitude(fx) == 0.0) return V{};
    return fx * (1.0 / (w * w));
  };
  return integrate<V>(mapped, 0.0, 1.0, abs_tol, rel_tol, max_intervals, 8);
}

}  // namespace mellin::oracle
