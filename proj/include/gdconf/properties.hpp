#pragma once

#include "gdconf/conformal.hpp"
#include "gdconf/finite_algebra.hpp"
#include "gdconf/report.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gdconf {

// Novikov, Lie, compatibility and conformal axioms on possibly invalid
// tables, with whether the conformal verdict agrees with the GD one.
Report axiom_report(const GDTables& t);

// [a λ b], its n-products below the locality bound and N; with n set, only
// (a (n) b).
Report bracket_report(const GDAlgebra& V, const ConfElem& a, const ConfElem& b, std::optional<unsigned> n = {});

struct NamedAlgebra {
  std::string name;
  GDAlgebra gd;
};

// Skew-symmetry and Jacobi of L(V) as polynomial identities on every basis
// pair and triple.
Report conformal_property_report(const std::vector<NamedAlgebra>& algebras);

// (A_λ B)_{λ+μ} C = A_λ (B_μ C) and (A_λ B)_μ u = A_λ (B_{μ−λ} u) on random
// operators over k[v] and S(sl2).
Report associativity_report(std::uint64_t seed, int triples = 100);

// Leftmost and rightmost rewriting give the same normal form on random raw
// words over S(sl2), the universal envelope of v∘v = v and the free
// quotient model. Words leaving a truncated model are counted, not judged.
Report confluence_report(std::uint64_t seed, int words = 200);

// Weyl algebra products and λ-products against the generic rewriter on k[v].
Report weyl_agreement_report(std::uint64_t seed, int expressions = 100);

}  // namespace gdconf
