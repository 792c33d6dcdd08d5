#pragma once

#include "gdconf/conformal.hpp"

#include <optional>

namespace gdconf::testing {

enum class Defect { compat, jacobi };

// First single-entry mutation of the bracket, kept antisymmetric, that keeps
// every other axiom and breaks the wanted one. Entries are tried in (i < j, k)
// order with shifts +1 then −1.
inline std::optional<GDTables> first_mutation(const GDTables& base, Defect want) {
  const std::size_t n = base.lie.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (int shift : {1, -1}) {
          GDTables t = base;
          t.lie.at(i, j, k) += shift;
          t.lie.at(j, i, k) -= shift;
          if (!check_novikov(t.novikov).ok) continue;
          bool lie_ok = check_lie(t.lie).ok;
          if (want == Defect::jacobi) {
            if (!lie_ok) return t;
            continue;
          }
          if (!lie_ok) continue;
          if (!check_gd_compat(GDAlgebra::unchecked(t.basis, t.novikov, t.lie)).ok) return t;
        }
  return std::nullopt;
}

}  // namespace gdconf::testing
