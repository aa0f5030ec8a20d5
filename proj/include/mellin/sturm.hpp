#pragma once

/**
 * @file sturm.hpp
 * @brief Exact real-root counting and isolation for rational polynomials.
 *
 * For a square-free p, the number of distinct roots in the half-open interval
 * (a, b] equals V(a) - V(b), where V counts sign changes along the Sturm chain
 * (zeros skipped). Chains are built from the square-free part and each member
 * is reduced to its primitive part, which only rescales by positive factors.
 */

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "mellin/polynomial.hpp"

namespace mellin {

/// A real root lies in (lo, hi]; lo == hi means the root is exactly lo.
struct RootInterval {
  Rational lo;
  Rational hi;
  int multiplicity = 1;

  [[nodiscard]] bool is_exact() const { return lo == hi; }
  [[nodiscard]] Rational width() const { return hi - lo; }
  [[nodiscard]] bool contains(const Rational& x) const { return is_exact() ? x == lo : (lo < x && x <= hi); }
};

inline int sign_at(const QPolynomial& p, const Rational& x) { return p.evaluate(x).sign(); }

/// Yun's algorithm: returns (factor, multiplicity) pairs with pairwise coprime monic factors.
inline std::vector<std::pair<QPolynomial, int>> squarefree_decomposition(const QPolynomial& f) {
  if (f.is_zero()) throw std::domain_error("squarefree_decomposition: zero polynomial");
  std::vector<std::pair<QPolynomial, int>> out;
  if (f.degree() < 1) return out;
  const QPolynomial fp = f.derivative();
  const QPolynomial a0 = poly_gcd(f, fp);
  QPolynomial b = divmod(f, a0).first;
  QPolynomial c = divmod(fp, a0).first;
  QPolynomial d = c - b.derivative();
  for (int i = 1; b.degree() >= 1; ++i) {
    const QPolynomial a = poly_gcd(b, d);
    if (a.degree() >= 1) out.emplace_back(a, i);
    b = divmod(b, a).first;
    c = divmod(d, a).first;
    d = c - b.derivative();
  }
  return out;
}

inline QPolynomial squarefree_part(const QPolynomial& f) {
  if (f.degree() < 1) return f.is_zero() ? f : QPolynomial::constant(Rational(1));
  return make_monic(divmod(f, poly_gcd(f, f.derivative())).first);
}

/// Strict Cauchy bound: every root has |t| < bound.
inline Rational root_bound(const QPolynomial& p) {
  Rational m(0);
  for (int k = 0; k < p.degree(); ++k) m = std::max(m, (p.coeff(k) / p.leading()).abs());
  return m + Rational(1);
}

class SturmChain {
 public:
  /// Builds the chain of the square-free part of p.
  explicit SturmChain(const QPolynomial& p) {
    if (p.is_zero()) throw std::domain_error("SturmChain: zero polynomial");
    QPolynomial a = primitive_part(squarefree_part(p));
    QPolynomial b = primitive_part(a.derivative());
    chain_.push_back(a);
    while (!b.is_zero()) {
      chain_.push_back(b);
      QPolynomial r = -divmod(a, b).second;
      a = std::move(b);
      b = primitive_part(r);
    }
  }

  [[nodiscard]] const std::vector<QPolynomial>& members() const { return chain_; }
  [[nodiscard]] const QPolynomial& base() const { return chain_.front(); }

  [[nodiscard]] int variations(const Rational& x) const {
    int count = 0, last = 0;
    for (const auto& q : chain_) {
      const int s = sign_at(q, x);
      if (s == 0) continue;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  }

  /// Distinct roots in (a, b], a < b.
  [[nodiscard]] int count(const Rational& a, const Rational& b) const { return variations(a) - variations(b); }

  [[nodiscard]] int count_real() const {
    const Rational bound = root_bound(base());
    return count(-bound, bound);
  }

 private:
  std::vector<QPolynomial> chain_;
};

namespace detail {

/// A split point of (lo, hi) that is not a root of q.
inline Rational nonroot_split(const QPolynomial& q, const Rational& lo, const Rational& hi) {
  const Rational width = hi - lo;
  for (int den = 2;; ++den) {
    for (int num = 1; num < den; ++num) {
      const Rational x = lo + width * Rational(num, den);
      if (!q.evaluate(x).is_zero()) return x;
    }
  }
}

}  // namespace detail

/// Shrinks an isolating interval of a simple root of q until its width is at most max_width.
inline RootInterval refine_root(const QPolynomial& q, RootInterval iv, const Rational& max_width) {
  if (iv.is_exact()) return iv;
  int s_lo = sign_at(q, iv.lo);
  while (iv.width() > max_width) {
    const Rational mid = (iv.lo + iv.hi) / Rational(2);
    const int s_mid = sign_at(q, mid);
    if (s_mid == 0) {
      iv.lo = iv.hi = mid;
      return iv;
    }
    if (s_mid != s_lo) iv.hi = mid;
    else {
      iv.lo = mid;
      s_lo = s_mid;
    }
  }
  return iv;
}

/// Isolates the distinct real roots of p and reports each multiplicity.
inline std::vector<RootInterval> sturm_isolate(const QPolynomial& p) {
  if (p.is_zero()) throw std::domain_error("sturm_isolate: zero polynomial");
  std::vector<RootInterval> out;
  if (p.degree() < 1) return out;

  const SturmChain chain(p);
  const QPolynomial& q = chain.base();
  const Rational bound = root_bound(q);

  struct Pending {
    Rational lo, hi;
    int roots;
  };
  std::vector<Pending> work{{-bound, bound, chain.count(-bound, bound)}};
  while (!work.empty()) {
    Pending w = work.back();
    work.pop_back();
    if (w.roots == 0) continue;
    if (w.roots == 1) {
      out.push_back({w.lo, w.hi, 1});
      continue;
    }
    const Rational mid = detail::nonroot_split(q, w.lo, w.hi);
    const int left = chain.count(w.lo, mid);
    work.push_back({mid, w.hi, w.roots - left});
    work.push_back({w.lo, mid, left});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.lo < b.lo; });

  const auto factors = squarefree_decomposition(p);
  if (factors.size() > 1 || (factors.size() == 1 && factors.front().second != 1)) {
    for (auto& iv : out) {
      for (const auto& [factor, mult] : factors) {
        if (SturmChain(factor).count(iv.lo, iv.hi) == 1) {
          iv.multiplicity = mult;
          break;
        }
      }
    }
  }
  return out;
}

}  // namespace mellin
