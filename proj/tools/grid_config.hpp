#pragma once

// Loads verification grids from JSON. Missing keys keep the Grid defaults.

#include <fstream>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "mellin/verify.hpp"

namespace mellin::cli {

using nlohmann::json;

namespace detail {

inline std::vector<Rational> rationals(const json& arr) {
  std::vector<Rational> out;
  for (const auto& v : arr) out.push_back(Rational::parse(v.get<std::string>()));
  return out;
}

inline std::vector<oracle::Complex> points(const json& arr) {
  std::vector<oracle::Complex> out;
  for (const auto& p : arr) {
    if (!p.is_array() || p.size() != 2) throw std::invalid_argument("grid: complex samples are [re, im] pairs");
    out.emplace_back(p[0].get<double>(), p[1].get<double>());
  }
  return out;
}

template <class T>
void take(const json& obj, const char* name, T& field) {
  if (obj.contains(name)) field = obj.at(name).get<T>();
}

}  // namespace detail

inline verify::Grid parse_grid(const json& j) {
  verify::Grid g;
  using detail::take;
  if (j.contains("laguerre")) {
    const auto& l = j["laguerre"];
    if (l.contains("alphas")) g.laguerre_alphas = detail::rationals(l["alphas"]);
    take(l, "functional_n_max", g.functional_n_max);
    take(l, "reciprocity_n_max", g.reciprocity_n_max);
    take(l, "expansion_n_max", g.expansion_n_max);
    take(l, "recursion_n_max", g.recursion_n_max);
    take(l, "pfaff_n_max", g.pfaff_n_max);
    take(l, "meixner_n_max", g.meixner_n_max);
    take(l, "scaling_m_max", g.scaling_m_max);
    if (l.contains("scaling_betas")) g.scaling_betas = detail::rationals(l["scaling_betas"]);
    if (l.contains("scaling_points")) g.scaling_points = detail::rationals(l["scaling_points"]);
  }
  if (j.contains("hermite")) {
    const auto& h = j["hermite"];
    take(h, "m_max", g.hermite_m_max);
    take(h, "odd_reciprocity_max", g.hermite_odd_reciprocity_max);
    take(h, "recursion_n_max", g.hermite_recursion_n_max);
    take(h, "bridge_n_max", g.hermite_bridge_n_max);
    take(h, "gegenbauer_m_max", g.gegenbauer_m_max);
  }
  if (j.contains("zeros")) {
    const auto& z = j["zeros"];
    take(z, "n_max", g.zeros_n_max);
    if (z.contains("alphas")) g.zeros_alphas = detail::rationals(z["alphas"]);
    take(z, "hermite_m_max", g.zeros_hermite_m_max);
  }
  if (j.contains("oracle")) {
    const auto& o = j["oracle"];
    take(o, "laguerre_n_max", g.oracle_laguerre_n_max);
    if (o.contains("alphas")) g.oracle_alphas = detail::rationals(o["alphas"]);
    take(o, "hermite_n_max", g.oracle_hermite_n_max);
    if (o.contains("s_samples")) g.s_samples = detail::points(o["s_samples"]);
    take(o, "orthogonality_n_max", g.orthogonality_n_max);
    if (o.contains("orthogonality_alphas")) g.orthogonality_alphas = detail::rationals(o["orthogonality_alphas"]);
    take(o, "tol", g.oracle_tol);
    take(o, "orthogonality_tol", g.orthogonality_tol);
  }
  if (j.contains("hydrogen") && j["hydrogen"].contains("states")) {
    for (const auto& s : j["hydrogen"]["states"]) {
      if (!s.is_array() || s.size() != 3) throw std::invalid_argument("grid: hydrogen states are [n, l, D]");
      oracle::HydrogenState st{s[0].get<int>(), s[1].get<int>(), s[2].get<int>()};
      st.validate();
      g.hydrogen_states.push_back(st);
    }
  }
  if (j.contains("gf")) {
    const auto& f = j["gf"];
    if (f.contains("s")) g.gf_s = detail::points(f["s"]);
    if (f.contains("t")) g.gf_t = f["t"].get<std::vector<double>>();
    take(f, "terms", g.gf_terms);
    take(f, "tol", g.gf_tol);
    take(f, "kummer_tol", g.kummer_tol);
  }
  take(j, "random_draws", g.random_draws);
  return g;
}

inline verify::Grid load_grid_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open grid file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw std::invalid_argument("grid file '" + path + "': " + e.what());
  }
  return parse_grid(j);
}

}  // namespace mellin::cli
