// mellin: closed-form Mellin transforms, zero certificates and verification suites.

#include <chrono>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "grid_config.hpp"
#include "mellin/critical_zeros.hpp"
#include "mellin/hermite.hpp"
#include "mellin/laguerre.hpp"
#include "mellin/quadrature.hpp"
#include "mellin/serialize.hpp"
#include "mellin/verify.hpp"

namespace {

constexpr const char* kDefaultGrid =
#include "default_grid.inc"
    ;

enum Exit : int { kOk = 0, kVerifyFailed = 1, kCertifyFailed = 2, kUsage = 64 };

enum class Format { text, json, csv };

struct Output {
  bool json = false;
  bool csv = false;
  [[nodiscard]] Format format() const { return json ? Format::json : csv ? Format::csv : Format::text; }
};

void add_format(CLI::App* cmd, Output& out) {
  auto* j = cmd->add_flag("--json", out.json, "JSON output");
  auto* c = cmd->add_flag("--csv", out.csv, "CSV output with a header row");
  j->excludes(c);
}

using mellin::Rational;
using mellin::oracle::Complex;
using nlohmann::json;

mellin::verify::Grid grid_from(const std::string& path) {
  if (path.empty()) return mellin::cli::parse_grid(json::parse(kDefaultGrid));
  return mellin::cli::load_grid_file(path);
}

std::string complex_text(Complex z) {
  return mellin::io::decimal(z.real()) + (z.imag() < 0 ? " - " : " + ") + mellin::io::decimal(std::abs(z.imag())) + "i";
}

// --- poly -------------------------------------------------------------------

int cmd_poly(const std::string& family, int n, const Rational& alpha, const Output& out) {
  if (family == "laguerre") {
    const auto p = mellin::laguerre::build_P(n, alpha);
    switch (out.format()) {
      case Format::json: std::cout << mellin::io::laguerre_poly_json(p).dump() << "\n"; break;
      case Format::csv:
        std::cout << "power,coefficient\n";
        for (int k = 0; k <= p.degree(); ++k) std::cout << k << "," << p.coeff(k).str() << "\n";
        break;
      case Format::text: std::cout << mellin::to_string(p) << "\n"; break;
    }
    return kOk;
  }
  const auto h = mellin::hermite::make_hermite_mellin(n);
  switch (out.format()) {
    case Format::json: std::cout << mellin::io::hermite_poly_json(h).dump() << "\n"; break;
    case Format::csv:
      std::cout << "power,coefficient\n";
      for (int k = 0; k <= h.reduced_poly.degree(); ++k) std::cout << k << "," << h.reduced_poly.coeff(k).str() << "\n";
      break;
    case Format::text: std::cout << mellin::to_string(h.reduced_poly) << "\n"; break;
  }
  return kOk;
}

// --- zeros ------------------------------------------------------------------

void print_certificate(const mellin::zeros::ZeroCertificate& c, Format f) {
  if (f == Format::json) {
    std::cout << mellin::io::certificate_json(c).dump(2) << "\n";
    return;
  }
  if (f == Format::csv) {
    std::cout << "index,lo,hi,multiplicity,root\n";
    for (std::size_t k = 0; k < c.intervals.size(); ++k) {
      std::cout << k << "," << c.intervals[k].lo.str() << "," << c.intervals[k].hi.str() << ","
                << c.intervals[k].multiplicity << "," << mellin::io::decimal(c.roots[k]) << "\n";
    }
    return;
  }
  std::cout << "family " << mellin::zeros::family_name(c.family) << ", n = " << c.n << ", alpha = " << c.alpha.str()
            << "\n";
  std::cout << "rho(t) = " << mellin::to_string(c.rho, "t") << "  (" << (c.imaginary_part ? "imaginary" : "real")
            << " part at s = 1/2 + it)\n";
  std::cout << "squarefree: " << (c.squarefree ? "yes" : "no") << "\n";
  std::cout << "real roots: " << c.count << " of degree " << c.degree << "\n";
  for (std::size_t k = 0; k < c.intervals.size(); ++k) {
    const auto& iv = c.intervals[k];
    std::cout << "  t = " << mellin::io::decimal(c.roots[k]) << "  in "
              << (iv.is_exact() ? "{" + iv.lo.str() + "}" : "(" + iv.lo.str() + ", " + iv.hi.str() + "]") << "\n";
  }
  std::cout << (c.certified() ? "certified: all zeros simple and on Re s = 1/2" : "NOT certified") << "\n";
}

struct ZerosArgs {
  std::string family;
  int n = 0;
  std::string alpha = "0";
  int l = 0;
  int D = 3;
};

int cmd_zeros(const ZerosArgs& a, const Output& out) {
  using mellin::zeros::Family;
  mellin::zeros::ZeroCertificate c;
  if (a.family == "laguerre") {
    c = mellin::zeros::certify_zeros(Family::laguerre, a.n, Rational::parse(a.alpha));
  } else if (a.family == "hermite") {
    mellin::hermite::require_index(a.n);
    c = mellin::zeros::certify_zeros(a.n % 2 == 0 ? Family::hermite_even : Family::hermite_odd_reduced, a.n / 2,
                                     Rational(0));
  } else {
    const mellin::oracle::HydrogenState st{a.n, a.l, a.D};
    st.validate();
    c = mellin::zeros::certify_zeros(Family::laguerre, st.degree_eff(), st.alpha_eff());
  }
  print_certificate(c, out.format());
  return c.certified() ? kOk : kCertifyFailed;
}

// --- verify -----------------------------------------------------------------

json report_json(const mellin::verify::RunReport& r) {
  json failures = json::array();
  for (const auto& f : r.failures) failures.push_back({{"case", f.key}, {"detail", f.detail}});
  return {{"suite", r.suite},
          {"cases", r.cases},
          {"failures", failures},
          {"max_residual", mellin::io::decimal(r.max_residual)},
          {"passed", r.ok()}};
}

int cmd_verify(const std::string& suite, unsigned seed, const std::string& grid_path, std::optional<double> tol,
               const Output& out) {
  auto grid = grid_from(grid_path);
  if (tol) {
    grid.oracle_tol = *tol;
    grid.gf_tol = *tol;
    grid.orthogonality_tol = *tol;
  }
  std::vector<std::string> names;
  if (suite == "all") names = mellin::verify::suite_names();
  else names.push_back(suite);

  const auto start = std::chrono::steady_clock::now();
  std::vector<mellin::verify::RunReport> reports;
  for (const auto& name : names) reports.push_back(mellin::verify::run_suite(name, grid, seed));
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  bool ok = true;
  for (const auto& r : reports) ok = ok && r.ok();
  switch (out.format()) {
    case Format::json: {
      json arr = json::array();
      for (const auto& r : reports) arr.push_back(report_json(r));
      std::cout << json{{"seed", seed}, {"suites", arr}, {"passed", ok}}.dump(2) << "\n";
      break;
    }
    case Format::csv:
      std::cout << "suite,case,status,detail\n";
      for (const auto& r : reports) {
        for (const auto& f : r.failures) std::cout << r.suite << ",\"" << f.key << "\",fail,\"" << f.detail << "\"\n";
        std::cout << r.suite << ",summary," << (r.ok() ? "pass" : "fail") << ",\"" << r.cases << " cases, "
                  << r.failures.size() << " failures\"\n";
      }
      break;
    case Format::text:
      for (const auto& r : reports) {
        std::cout << "suite " << r.suite << ": " << r.cases << " cases, " << r.failures.size() << " failures";
        if (r.max_residual > 0.0) std::cout << ", max residual " << mellin::io::decimal(r.max_residual);
        std::cout << "\n";
        for (const auto& f : r.failures) std::cout << "  FAIL " << f.key << ": " << f.detail << "\n";
      }
      std::cout << (ok ? "PASS" : "FAIL") << " (seed " << seed << ")\n";
      break;
  }
  std::cerr << "verify " << suite << ": " << seconds << " s\n";
  return ok ? kOk : kVerifyFailed;
}

// --- numeric comparisons -------------------------------------------------------

struct Row {
  Complex s;
  Complex closed, quad;
  double rel;
};

int print_rows(const std::vector<Row>& rows, double tol, const Output& out, json extra) {
  bool ok = true;
  for (const auto& r : rows) ok = ok && r.rel < tol;
  switch (out.format()) {
    case Format::json: {
      json arr = json::array();
      for (const auto& r : rows) {
        arr.push_back({{"s", {mellin::io::decimal(r.s.real()), mellin::io::decimal(r.s.imag())}},
                       {"closed_form", {mellin::io::decimal(r.closed.real()), mellin::io::decimal(r.closed.imag())}},
                       {"quadrature", {mellin::io::decimal(r.quad.real()), mellin::io::decimal(r.quad.imag())}},
                       {"rel_error", mellin::io::decimal(r.rel)}});
      }
      extra["samples"] = arr;
      extra["tol"] = mellin::io::decimal(tol);
      extra["passed"] = ok;
      std::cout << extra.dump(2) << "\n";
      break;
    }
    case Format::csv:
      std::cout << "s_re,s_im,closed_re,closed_im,quad_re,quad_im,rel_error\n";
      for (const auto& r : rows) {
        std::cout << mellin::io::decimal(r.s.real()) << "," << mellin::io::decimal(r.s.imag()) << ","
                  << mellin::io::decimal(r.closed.real()) << "," << mellin::io::decimal(r.closed.imag()) << ","
                  << mellin::io::decimal(r.quad.real()) << "," << mellin::io::decimal(r.quad.imag()) << ","
                  << mellin::io::decimal(r.rel) << "\n";
      }
      break;
    case Format::text:
      for (const auto& r : rows) {
        std::cout << "s = " << complex_text(r.s) << "  closed " << complex_text(r.closed) << "  quadrature "
                  << complex_text(r.quad) << "  rel " << mellin::io::decimal(r.rel) << (r.rel < tol ? "" : "  FAIL")
                  << "\n";
      }
      std::cout << (ok ? "PASS" : "FAIL") << " (tol " << mellin::io::decimal(tol) << ")\n";
      break;
  }
  return ok ? kOk : kVerifyFailed;
}

int cmd_oracle_compare(const std::string& family, int n, const Rational& alpha, const std::string& grid_path,
                       std::optional<double> tol, const Output& out) {
  const auto grid = grid_from(grid_path);
  std::vector<Row> rows;
  for (const auto& s : grid.s_samples) {
    Row r{s, {}, {}, 0.0};
    if (family == "laguerre") {
      r.closed = mellin::laguerre::build_M(n, alpha).evaluate(mellin::oracle::exact_point(s));
      r.quad = mellin::oracle::mellin_quadrature_laguerre(n, alpha, s).value;
    } else {
      r.closed = mellin::hermite::build_M(n).evaluate(mellin::oracle::exact_point(s));
      r.quad = mellin::oracle::mellin_quadrature_hermite(n, s).value;
    }
    r.rel = std::abs(r.closed - r.quad) / std::abs(r.closed);
    rows.push_back(r);
  }
  json extra{{"family", family}, {"n", n}};
  if (family == "laguerre") extra["alpha"] = alpha.str();
  return print_rows(rows, tol.value_or(grid.oracle_tol), out, extra);
}

int cmd_hydrogen(int n, int l, int D, const std::string& grid_path, std::optional<double> tol, const Output& out) {
  const mellin::oracle::HydrogenState st{n, l, D};
  st.validate();
  const auto grid = grid_from(grid_path);
  const auto factor = mellin::oracle::hydrogen_mellin_factor(st);
  const auto cert = mellin::zeros::certify_zeros(mellin::zeros::Family::laguerre, st.degree_eff(), st.alpha_eff());
  std::vector<Row> rows;
  for (const auto& s : grid.s_samples) {
    if ((s + 0.5 * st.alpha_eff().to_double()).real() <= 0.0) continue;
    Row r{s, mellin::oracle::hydrogen_mellin(st, s), mellin::oracle::hydrogen_quadrature(st, s).value, 0.0};
    r.rel = std::abs(r.closed - r.quad) / std::abs(r.closed);
    rows.push_back(r);
  }
  if (out.format() == Format::text) {
    std::cout << "state n = " << n << ", l = " << l << ", D = " << D << ": eta = " << st.eta().str()
              << ", alpha = " << st.alpha_eff().str() << ", degree = " << st.degree_eff() << "\n";
    std::cout << "factor P(s) = " << mellin::to_string(factor) << "\n";
    std::cout << "zeros: " << cert.count << " simple on Re s = 1/2" << (cert.certified() ? " (certified)" : " (NOT certified)")
              << "\n";
  }
  json extra{{"state", {{"n", n}, {"l", l}, {"D", D}}},
             {"eta", st.eta().str()},
             {"alpha", st.alpha_eff().str()},
             {"factor", mellin::io::coefficients(factor)},
             {"certificate", mellin::io::certificate_json(cert)}};
  const int code = print_rows(rows, tol.value_or(grid.oracle_tol), out, extra);
  if (!cert.certified()) return kCertifyFailed;
  return code;
}

int cmd_gf_check(const std::string& grid_path, std::optional<double> tol, const Output& out) {
  const auto grid = grid_from(grid_path);
  const double limit = tol.value_or(grid.gf_tol);
  bool ok = true;
  json arr = json::array();
  if (out.format() == Format::csv) std::cout << "s_re,s_im,t,N,residual,truncation\n";
  for (const auto& s : grid.gf_s) {
    for (double t : grid.gf_t) {
      const auto c = mellin::oracle::generating_function_check(s, t, grid.gf_terms);
      ok = ok && c.residual < limit;
      switch (out.format()) {
        case Format::json:
          arr.push_back({{"s", {mellin::io::decimal(s.real()), mellin::io::decimal(s.imag())}},
                         {"t", mellin::io::decimal(t)},
                         {"N", grid.gf_terms},
                         {"residual", mellin::io::decimal(c.residual)},
                         {"truncation", mellin::io::decimal(c.truncation)}});
          break;
        case Format::csv:
          std::cout << mellin::io::decimal(s.real()) << "," << mellin::io::decimal(s.imag()) << ","
                    << mellin::io::decimal(t) << "," << grid.gf_terms << "," << mellin::io::decimal(c.residual) << ","
                    << mellin::io::decimal(c.truncation) << "\n";
          break;
        case Format::text:
          std::cout << "s = " << complex_text(s) << "  t = " << t << "  residual " << mellin::io::decimal(c.residual)
                    << (c.residual < limit ? "" : "  FAIL") << "\n";
          break;
      }
    }
  }
  if (out.format() == Format::json) {
    std::cout << json{{"samples", arr}, {"tol", mellin::io::decimal(limit)}, {"passed", ok}}.dump(2) << "\n";
  } else if (out.format() == Format::text) {
    std::cout << (ok ? "PASS" : "FAIL") << " (tol " << mellin::io::decimal(limit) << ")\n";
  }
  return ok ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Closed-form Mellin transforms of Laguerre and Hermite functions"};
  app.require_subcommand(1);

  Output out;
  int n = 0, l = 0, D = 3;
  std::string family, alpha_text = "0", suite = "all", grid_path;
  unsigned seed = 0;
  std::optional<double> tol;

  auto* poly = app.add_subcommand("poly", "print the polynomial factor");
  poly->add_option("family", family, "laguerre or hermite")->required()->check(CLI::IsMember({"laguerre", "hermite"}));
  poly->add_option("--n", n, "degree")->required()->check(CLI::NonNegativeNumber);
  poly->add_option("--alpha", alpha_text, "Laguerre parameter as p/q");
  add_format(poly, out);

  auto* zeros = app.add_subcommand("zeros", "certify the zeros of the factor on Re s = 1/2");
  zeros->add_option("family", family, "laguerre, hermite or hydrogen")
      ->required()
      ->check(CLI::IsMember({"laguerre", "hermite", "hydrogen"}));
  zeros->add_option("--n", n, "degree, or principal quantum number for hydrogen")->required();
  zeros->add_option("--alpha", alpha_text, "Laguerre parameter as p/q");
  zeros->add_option("--l", l, "angular momentum (hydrogen)");
  zeros->add_option("--D", D, "dimension (hydrogen)");
  add_format(zeros, out);

  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("suite", suite, "all, laguerre, hermite, zeros, oracle or gf")
      ->check(CLI::IsMember({"all", "laguerre", "hermite", "zeros", "oracle", "gf"}));
  verify->add_option("--seed", seed, "seed for randomized parameter draws");
  verify->add_option("--grid", grid_path, "grid file overriding the built-in defaults");
  verify->add_option("--tol", tol, "tolerance for numeric comparisons");
  add_format(verify, out);

  auto* hydrogen = app.add_subcommand("hydrogen", "radial Mellin transform of a hydrogenic state");
  hydrogen->add_option("--n", n, "principal quantum number")->required();
  hydrogen->add_option("--l", l, "angular momentum");
  hydrogen->add_option("--D", D, "dimension");
  hydrogen->add_option("--grid", grid_path, "grid file for the s samples");
  hydrogen->add_option("--tol", tol, "tolerance for closed form vs quadrature");
  add_format(hydrogen, out);

  auto* compare = app.add_subcommand("oracle-compare", "closed form against direct quadrature");
  compare->add_option("family", family, "laguerre or hermite")->required()->check(CLI::IsMember({"laguerre", "hermite"}));
  compare->add_option("--n", n, "degree")->required()->check(CLI::NonNegativeNumber);
  compare->add_option("--alpha", alpha_text, "Laguerre parameter as p/q");
  compare->add_option("--grid", grid_path, "grid file for the s samples");
  compare->add_option("--tol", tol, "relative tolerance");
  add_format(compare, out);

  auto* gf = app.add_subcommand("gf-check", "generating function against the parabolic cylinder function");
  gf->add_option("--grid", grid_path, "grid file for the (s, t) samples");
  gf->add_option("--tol", tol, "relative tolerance");
  add_format(gf, out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*poly) return cmd_poly(family, n, Rational::parse(alpha_text), out);
    if (*zeros) return cmd_zeros({family, n, alpha_text, l, D}, out);
    if (*verify) return cmd_verify(suite, seed, grid_path, tol, out);
    if (*hydrogen) return cmd_hydrogen(n, l, D, grid_path, tol, out);
    if (*compare) return cmd_oracle_compare(family, n, Rational::parse(alpha_text), grid_path, tol, out);
    if (*gf) return cmd_gf_check(grid_path, tol, out);
  } catch (const mellin::zeros::StructuralFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCertifyFailed;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerifyFailed;
  }
  return kUsage;
}
