#pragma once

// JSON encodings. Rationals are always strings "p" or "p/q"; floating values
// that must round-trip are decimal strings with 17 significant digits.

#include <cstdio>
#include <string>

#include <nlohmann/json.hpp>

#include "mellin/critical_zeros.hpp"
#include "mellin/hermite.hpp"

namespace mellin::io {

using nlohmann::json;

inline std::string decimal(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline json coefficients(const QPolynomial& p) {
  json arr = json::array();
  for (const auto& c : p.coefficients()) arr.push_back(c.str());
  return arr;
}

inline json laguerre_poly_json(const QPolynomial& p) { return {{"coeffs", coefficients(p)}}; }

inline json hermite_poly_json(const hermite::HermiteMellin& h) {
  return {{"coeffs", coefficients(h.reduced_poly)}, {"prefactor", h.prefactor.str()}, {"parity", h.parity}};
}

inline json interval_json(const RootInterval& iv) {
  return {{"lo", iv.lo.str()}, {"hi", iv.hi.str()}, {"multiplicity", iv.multiplicity}};
}

inline json certificate_json(const zeros::ZeroCertificate& c) {
  json intervals = json::array(), roots = json::array();
  for (const auto& iv : c.intervals) intervals.push_back(interval_json(iv));
  for (double r : c.roots) roots.push_back(decimal(r));
  return {{"family", zeros::family_name(c.family)},
          {"n", c.n},
          {"alpha", c.alpha.str()},
          {"degree", c.degree},
          {"part", c.imaginary_part ? "imaginary" : "real"},
          {"rho", coefficients(c.rho)},
          {"intervals", intervals},
          {"roots", roots},
          {"count", c.count},
          {"flags", {{"squarefree", c.squarefree}, {"count_equals_degree", c.count == c.degree},
                     {"certified", c.certified()}}}};
}

}  // namespace mellin::io
