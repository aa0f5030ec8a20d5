#pragma once

// Pass/fail records for exact identity checks.

#include <string>
#include <utility>
#include <vector>

#include "mellin/gamma_form.hpp"

namespace mellin {

struct RelationResult {
  std::string name;
  bool holds = false;
  std::string residual;  // empty when the relation holds
};

struct RecursionReport {
  std::vector<RelationResult> relations;
  /// Literal transcriptions that are known to be misprinted; informational only.
  std::vector<RelationResult> printed_forms;

  [[nodiscard]] bool all_hold() const {
    for (const auto& r : relations) {
      if (!r.holds) return false;
    }
    return true;
  }
  [[nodiscard]] const RelationResult* find(const std::string& name) const {
    for (const auto& r : relations) {
      if (r.name == name) return &r;
    }
    return nullptr;
  }
};

inline RelationResult poly_relation(std::string name, const QPolynomial& residual) {
  return {std::move(name), residual.is_zero(), residual.is_zero() ? std::string{} : to_string(residual)};
}

inline RelationResult gamma_relation(std::string name, std::initializer_list<GammaForm> terms) {
  try {
    const auto residual = gamma_identity_residual(terms);
    return {std::move(name), residual.is_zero(), residual.is_zero() ? std::string{} : to_string(residual)};
  } catch (const StructuralMismatch& e) {
    return {std::move(name), false, std::string("structural mismatch: ") + e.what()};
  }
}

}  // namespace mellin
