#pragma once

/**
 * @file verify.hpp
 * @brief Verification suites over parameter grids.
 *
 * Each suite walks its grid in a fixed order and records one case per check,
 * so a report depends only on the grid and the seed used for random draws.
 */

#include <complex>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mellin/critical_zeros.hpp"
#include "mellin/hermite.hpp"
#include "mellin/hyp2f1.hpp"
#include "mellin/laguerre.hpp"
#include "mellin/quadrature.hpp"

namespace mellin::verify {

using oracle::Complex;

struct Grid {
  // laguerre
  std::vector<Rational> laguerre_alphas;
  int functional_n_max = 24;
  int reciprocity_n_max = 16;
  int expansion_n_max = 16;
  int recursion_n_max = 20;
  int pfaff_n_max = 12;
  int meixner_n_max = 12;
  int scaling_m_max = 10;
  std::vector<Rational> scaling_betas;
  std::vector<Rational> scaling_points;
  // hermite
  int hermite_m_max = 12;
  int hermite_odd_reciprocity_max = 16;
  int hermite_recursion_n_max = 20;
  int hermite_bridge_n_max = 24;
  int gegenbauer_m_max = 10;
  // zeros
  int zeros_n_max = 20;
  std::vector<Rational> zeros_alphas;
  int zeros_hermite_m_max = 12;
  // oracle
  int oracle_laguerre_n_max = 10;
  std::vector<Rational> oracle_alphas;
  int oracle_hermite_n_max = 14;
  std::vector<Complex> s_samples;
  int orthogonality_n_max = 8;
  std::vector<Rational> orthogonality_alphas;
  std::vector<oracle::HydrogenState> hydrogen_states;
  // generating function
  std::vector<Complex> gf_s;
  std::vector<double> gf_t;
  int gf_terms = 40;
  // randomized draws
  int random_draws = 16;
  // tolerances
  double oracle_tol = 1e-8;
  double gf_tol = 1e-6;
  double orthogonality_tol = 1e-6;
  double kummer_tol = 1e-10;
};

struct Failure {
  std::string key;
  std::string detail;
};

struct RunReport {
  std::string suite;
  int cases = 0;
  std::vector<Failure> failures;
  double max_residual = 0.0;  // largest relative numeric residual seen (0 for exact suites)

  [[nodiscard]] bool ok() const { return failures.empty(); }
};

namespace detail {

inline std::string key(std::initializer_list<std::pair<const char*, std::string>> parts, const std::string& check) {
  std::string k = check;
  for (const auto& [name, value] : parts) k += std::string(" ") + name + "=" + value;
  return k;
}

inline std::string num(double x) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << x;
  return os.str();
}

inline std::string cnum(Complex z) {
  std::ostringstream os;
  os << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
  return os.str();
}

class Recorder {
 public:
  explicit Recorder(RunReport& r) : r_(r) {}

  /// Runs one case; exceptions count as failures with their message.
  void check(const std::string& k, const std::function<bool(std::string&)>& body) {
    ++r_.cases;
    std::string detail;
    bool ok = false;
    try {
      ok = body(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    if (!ok) r_.failures.push_back({k, detail});
  }
  void residual(double x) { r_.max_residual = std::max(r_.max_residual, x); }

 private:
  RunReport& r_;
};

}  // namespace detail

inline RunReport laguerre_suite(const Grid& g, unsigned seed) {
  RunReport r{"laguerre", 0, {}, 0.0};
  detail::Recorder rec(r);
  using detail::key;
  for (const auto& a : g.laguerre_alphas) {
    const std::string as = a.str();
    for (int n = 0; n <= g.functional_n_max; ++n) {
      rec.check(key({{"n", std::to_string(n)}, {"alpha", as}}, "functional_equation"),
                [&](std::string&) { return laguerre::functional_equation_check(n, a); });
    }
    for (int n = 0; n <= g.reciprocity_n_max; ++n) {
      for (int m = 0; m <= g.reciprocity_n_max; ++m) {
        rec.check(key({{"n", std::to_string(n)}, {"m", std::to_string(m)}, {"alpha", as}}, "reciprocity"),
                  [&](std::string&) { return laguerre::reciprocity_check(n, m, a); });
      }
    }
    for (int n = 0; n <= g.expansion_n_max; ++n) {
      const auto nk = std::to_string(n);
      rec.check(key({{"n", nk}, {"alpha", as}}, "derivative_formula"),
                [&](std::string&) { return laguerre::derivative_formula_check(n, a); });
      rec.check(key({{"n", nk}, {"alpha", as}}, "stirling_form"),
                [&](std::string&) { return laguerre::stirling_form_check(n, a); });
      rec.check(key({{"n", nk}, {"alpha", as}}, "convolution_form"),
                [&](std::string&) { return laguerre::gf_convolution_check(n, a); });
      rec.check(key({{"n", nk}, {"alpha", as}}, "power_series_form"),
                [&](std::string&) { return laguerre::power_series_form(n, a) == laguerre::build_P(n, a); });
    }
    for (int n = 0; n <= g.recursion_n_max; ++n) {
      rec.check(key({{"n", std::to_string(n)}, {"alpha", as}}, "recursions"), [&](std::string& d) {
        const auto rep = laguerre::recursion_checks(n, a);
        for (const auto& rel : rep.relations) {
          if (!rel.holds) d += rel.name + ": " + rel.residual + "; ";
        }
        return rep.all_hold();
      });
    }
    for (int n = 0; n <= g.pfaff_n_max; ++n) {
      rec.check(key({{"n", std::to_string(n)}, {"alpha", as}}, "pfaff"), [&](std::string&) {
        return pfaff_terminating_check(n, LinearForm{Rational(1), a / Rational(2)}, a + Rational(1));
      });
    }
    for (int n = 0; n <= g.meixner_n_max; ++n) {
      rec.check(key({{"n", std::to_string(n)}, {"alpha", as}}, "meixner_pollaczek"),
                [&](std::string&) { return laguerre::meixner_pollaczek_check(n, a); });
    }
  }
  for (const auto& beta : g.scaling_betas) {
    for (const auto& x : g.scaling_points) {
      for (int m = 0; m <= g.scaling_m_max; ++m) {
        rec.check(key({{"m", std::to_string(m)}, {"beta", beta.str()}, {"x", x.str()}}, "scaling_identity"),
                  [&](std::string&) { return laguerre::scaling_identity_check(m, beta, x); });
      }
    }
  }
  // Randomized terminating 2F1 symmetry and Pfaff draws.
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> deg(0, 12), num(-20, 20), den(1, 9);
  for (int k = 0; k < g.random_draws; ++k) {
    const int n = deg(rng), m = deg(rng);
    Rational c(num(rng), den(rng));
    if (c <= Rational(0) && c.is_integer()) c += Rational(25);
    const Rational slope(num(rng), den(rng)), intercept(num(rng), den(rng));
    rec.check(key({{"n", std::to_string(n)}, {"m", std::to_string(m)}, {"c", c.str()}}, "random_2f1_symmetry"),
              [&](std::string& d) {
                const auto [x, y] = symmetry_reciprocity_core(n, m, c);
                d = x.str() + " vs " + y.str();
                return x == y;
              });
    rec.check(key({{"n", std::to_string(n)}, {"b", slope.str() + " s + " + intercept.str()}, {"c", c.str()}},
                  "random_pfaff"),
              [&](std::string&) { return pfaff_terminating_check(n, LinearForm{slope, intercept}, c); });
  }
  return r;
}

inline RunReport hermite_suite(const Grid& g) {
  RunReport r{"hermite", 0, {}, 0.0};
  detail::Recorder rec(r);
  using detail::key;
  for (int m = 0; m <= g.hermite_m_max; ++m) {
    const auto mk = std::to_string(m);
    rec.check(key({{"m", mk}}, "functional_equation"), [&](std::string&) {
      const auto rep = hermite::hermite_functional_reciprocity(m, m);
      return rep.even_functional && rep.odd_functional;
    });
    rec.check(key({{"m", mk}}, "bridge"), [&](std::string& d) {
      const auto b = hermite::bridge_check(m);
      d = b.mismatch;
      return b.all();
    });
  }
  for (int n = 0; n <= g.hermite_odd_reciprocity_max; ++n) {
    for (int m = 0; m <= g.hermite_odd_reciprocity_max; ++m) {
      const bool even_range = n <= g.hermite_m_max && m <= g.hermite_m_max;
      rec.check(key({{"n", std::to_string(n)}, {"m", std::to_string(m)}}, "reciprocity"), [&](std::string& d) {
        const auto rep = hermite::hermite_functional_reciprocity(n, m);
        if (!rep.odd_reciprocity) d += "odd; ";
        if (even_range && !rep.even_reciprocity) d += "even; ";
        return rep.odd_reciprocity && (!even_range || rep.even_reciprocity);
      });
    }
  }
  for (int n = 0; n <= g.hermite_bridge_n_max; ++n) {
    rec.check(key({{"n", std::to_string(n)}}, "laguerre_route"), [&](std::string& d) {
      const auto res = gamma_identity_residual({hermite::build_M(n), hermite::build_M_via_laguerre(n).times(ExactScalar(-1))});
      if (!res.is_zero()) d = to_string(res);
      return res.is_zero();
    });
  }
  for (int m = 0; m <= g.gegenbauer_m_max; ++m) {
    for (const Rational& s : {Rational(2 * m + 2), Rational(2 * m + 4), Rational(2 * m) + Rational(2, 3)}) {
      rec.check(key({{"m", std::to_string(m)}, {"s", s.str()}}, "gegenbauer"),
                [&](std::string&) { return hermite::gegenbauer_check(m, s); });
    }
  }
  for (int n = 0; n <= g.hermite_recursion_n_max; ++n) {
    rec.check(key({{"n", std::to_string(n)}}, "recursions"), [&](std::string& d) {
      const auto rep = hermite::hermite_recursions(n);
      for (const auto& rel : rep.relations) {
        if (!rel.holds) d += rel.name + ": " + rel.residual + "; ";
      }
      return rep.all_hold();
    });
  }
  return r;
}

inline RunReport zeros_suite(const Grid& g) {
  RunReport r{"zeros", 0, {}, 0.0};
  detail::Recorder rec(r);
  using detail::key;
  using zeros::Family;
  auto certify = [&](Family f, int n, const Rational& a, const std::string& label) {
    rec.check(key({{"family", label}, {"n", std::to_string(n)}, {"alpha", a.str()}}, "certificate"),
              [&](std::string& d) {
                const auto c = zeros::certify_zeros(f, n, a);
                d = "count " + std::to_string(c.count) + " of degree " + std::to_string(c.degree) +
                    (c.squarefree ? "" : ", not squarefree");
                return c.certified() && c.degree == n;
              });
  };
  auto interlace = [&](Family f, int n, const Rational& a, const std::string& label) {
    rec.check(key({{"family", label}, {"n", std::to_string(n)}, {"alpha", a.str()}}, "interlacing"),
              [&](std::string& d) {
                const auto res = zeros::interlacing_check(f, n, a);
                d = res.detail;
                return res.holds;
              });
  };
  for (const auto& a : g.zeros_alphas) {
    for (int n = 0; n <= g.zeros_n_max; ++n) certify(Family::laguerre, n, a, "laguerre");
    for (int n = 0; n < g.zeros_n_max; ++n) interlace(Family::laguerre, n, a, "laguerre");
  }
  for (Family f : {Family::hermite_even, Family::hermite_odd_reduced}) {
    const std::string label = zeros::family_name(f);
    for (int m = 0; m <= g.zeros_hermite_m_max; ++m) certify(f, m, Rational(0), label);
    for (int m = 0; m < g.zeros_hermite_m_max; ++m) interlace(f, m, Rational(0), label);
  }
  for (const auto& st : g.hydrogen_states) {
    rec.check(key({{"n", std::to_string(st.n_principal)}, {"l", std::to_string(st.ell)}, {"D", std::to_string(st.D)}},
                  "hydrogen_certificate"),
              [&](std::string& d) {
                const auto c = zeros::certify_zeros(Family::laguerre, st.degree_eff(), st.alpha_eff());
                d = "count " + std::to_string(c.count);
                return c.certified() && c.count == st.n_principal - st.ell - 1;
              });
  }
  return r;
}

inline RunReport oracle_suite(const Grid& g, unsigned seed) {
  RunReport r{"oracle", 0, {}, 0.0};
  detail::Recorder rec(r);
  using detail::key;
  auto compare = [&](const std::string& k, Complex quad, Complex closed, double tol) {
    rec.check(k, [&](std::string& d) {
      const double rel = std::abs(quad - closed) / std::abs(closed);
      rec.residual(rel);
      d = "quadrature " + detail::cnum(quad) + " closed form " + detail::cnum(closed) + " rel " + detail::num(rel);
      return rel < tol;
    });
  };
  for (const auto& a : g.oracle_alphas) {
    for (int n = 0; n <= g.oracle_laguerre_n_max; ++n) {
      for (const auto& s : g.s_samples) {
        const auto k = key({{"n", std::to_string(n)}, {"alpha", a.str()}, {"s", detail::cnum(s)}}, "laguerre");
        try {
          compare(k, oracle::mellin_quadrature_laguerre(n, a, s).value,
                  laguerre::build_M(n, a).evaluate(oracle::exact_point(s)), g.oracle_tol);
        } catch (const std::exception& e) {
          rec.check(k, [&](std::string& d) { d = e.what(); return false; });
        }
      }
    }
  }
  for (int n = 0; n <= g.oracle_hermite_n_max; ++n) {
    for (const auto& s : g.s_samples) {
      const auto k = key({{"n", std::to_string(n)}, {"s", detail::cnum(s)}}, "hermite");
      try {
        compare(k, oracle::mellin_quadrature_hermite(n, s).value,
                hermite::build_M(n).evaluate(oracle::exact_point(s)), g.oracle_tol);
      } catch (const std::exception& e) {
        rec.check(k, [&](std::string& d) { d = e.what(); return false; });
      }
    }
  }
  for (const auto& st : g.hydrogen_states) {
    for (const auto& s : g.s_samples) {
      const auto k = key({{"n", std::to_string(st.n_principal)}, {"l", std::to_string(st.ell)},
                          {"D", std::to_string(st.D)}, {"s", detail::cnum(s)}},
                         "hydrogen");
      try {
        compare(k, oracle::hydrogen_quadrature(st, s).value, oracle::hydrogen_mellin(st, s), g.oracle_tol);
      } catch (const std::exception& e) {
        rec.check(k, [&](std::string& d) { d = e.what(); return false; });
      }
    }
  }
  for (const auto& a : g.orthogonality_alphas) {
    std::vector<double> diag;
    for (int n = 0; n <= g.orthogonality_n_max; ++n) diag.push_back(std::abs(zeros::orthogonality_quadrature(n, n, a).value));
    for (int n = 0; n <= g.orthogonality_n_max; ++n) {
      for (int m = n + 1; m <= g.orthogonality_n_max; ++m) {
        rec.check(key({{"n", std::to_string(n)}, {"m", std::to_string(m)}, {"alpha", a.str()}}, "orthogonality"),
                  [&](std::string& d) {
                    const auto q = zeros::orthogonality_quadrature(n, m, a);
                    const double rel = std::abs(q.value) / std::sqrt(diag[static_cast<std::size_t>(n)] *
                                                                      diag[static_cast<std::size_t>(m)]);
                    rec.residual(rel);
                    d = "relative off-diagonal " + detail::num(rel);
                    return rel < g.orthogonality_tol && q.tail_bound < 1e-12 * diag[static_cast<std::size_t>(n)];
                  });
      }
    }
  }
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> re(-6.0, 6.0), im(-6.0, 6.0);
  for (int k = 0; k < g.random_draws; ++k) {
    const Complex z(re(rng), im(rng));
    rec.check(key({{"z", detail::cnum(z)}}, "gamma_recurrence"), [&](std::string& d) {
      const Complex lhs = oracle::complex_gamma(z + 1.0), rhs = z * oracle::complex_gamma(z);
      const double rel = std::abs(lhs - rhs) / std::abs(lhs);
      d = detail::num(rel);
      return rel < 1e-12;
    });
    rec.check(key({{"z", detail::cnum(z)}}, "gamma_reflection"), [&](std::string& d) {
      const Complex lhs = oracle::complex_gamma(z) * oracle::complex_gamma(1.0 - z);
      const Complex rhs = oracle::kPiD / std::sin(oracle::kPiD * z);
      const double rel = std::abs(lhs - rhs) / std::abs(rhs);
      d = detail::num(rel);
      return rel < 1e-11;
    });
  }
  return r;
}

inline RunReport gf_suite(const Grid& g, unsigned seed) {
  RunReport r{"gf", 0, {}, 0.0};
  detail::Recorder rec(r);
  using detail::key;
  for (const auto& s : g.gf_s) {
    for (double t : g.gf_t) {
      rec.check(key({{"s", detail::cnum(s)}, {"t", detail::num(t)}, {"N", std::to_string(g.gf_terms)}},
                    "generating_function"),
                [&](std::string& d) {
                  const auto c = oracle::generating_function_check(s, t, g.gf_terms);
                  const double even = std::abs(c.even_sum - c.even_closed) / std::abs(c.closed_form);
                  rec.residual(c.residual);
                  d = "residual " + detail::num(c.residual) + " even part " + detail::num(even) + " truncation " +
                      detail::num(c.truncation);
                  return c.residual < g.gf_tol && even < g.gf_tol;
                });
    }
  }
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> nu_re(-4.0, 3.0), nu_im(-3.0, 3.0), zd(-3.0, 3.0);
  for (int k = 0; k < g.random_draws; ++k) {
    const Complex nu(nu_re(rng), nu_im(rng));
    const double z = zd(rng);
    rec.check(key({{"nu", detail::cnum(nu)}, {"z", detail::num(z)}}, "kummer_invariance"), [&](std::string& d) {
      const auto p = oracle::parabolic_cylinder(nu, z);
      d = detail::num(p.kummer_deviation);
      return p.kummer_deviation < g.kummer_tol;
    });
  }
  return r;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"laguerre", "hermite", "zeros", "oracle", "gf"};
  return names;
}

inline RunReport run_suite(const std::string& name, const Grid& g, unsigned seed) {
  if (name == "laguerre") return laguerre_suite(g, seed);
  if (name == "hermite") return hermite_suite(g);
  if (name == "zeros") return zeros_suite(g);
  if (name == "oracle") return oracle_suite(g, seed);
  if (name == "gf") return gf_suite(g, seed);
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace mellin::verify
