#pragma once

#include "gdconf/finite_algebra.hpp"
#include "gdconf/mpoly.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace gdconf {

/// Element of H ⊗ V: one polynomial in T per basis vector of V.
struct ConfElem {
  std::vector<MPoly> coords;

  friend bool operator==(const ConfElem&, const ConfElem&) = default;
  bool is_zero() const;
};

/// Value of a λ-bracket: coordinates are polynomials in T and λ (and μ when
/// brackets are nested).
struct ConfBracketValue {
  std::vector<MPoly> coords;

  friend bool operator==(const ConfBracketValue&, const ConfBracketValue&) = default;
  bool is_zero() const;
  int lambda_degree() const;
};

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

ConfElem basis_elem(const GDAlgebra& V, std::size_t i);
ConfElem make_elem(const GDAlgebra& V, std::vector<MPoly> coords);  // checks dim and T-only

// Bracket of the quadratic conformal algebra L(V):
// [a λ b] = [a,b] + T(b∘a) + λ(a∘b + b∘a) on basis vectors, extended by
// sesquilinearity f(T)a, g(T)b ↦ f(−λ) g(T+λ).
ConfBracketValue quadratic_bracket(const GDAlgebra& V, const ConfElem& a, const ConfElem& b);

// (a (n) b) = n! · [λⁿ] [a λ b].
ConfElem n_product(const GDAlgebra& V, const ConfElem& a, const ConfElem& b, unsigned n);

// deg_λ [a λ b] + 1, or 0 when the bracket vanishes.
std::size_t locality_N(const GDAlgebra& V, const ConfElem& a, const ConfElem& b);

// Bracket with an arbitrary polynomial parameter in place of λ. Coordinates
// may carry extra variables (λ, μ), which are treated as constants; only T
// is substituted.
std::vector<MPoly> bracket_with(const GDAlgebra& V, const std::vector<MPoly>& a, const std::vector<MPoly>& b,
                                const MPoly& param);

// λ ↦ −T−λ applied to a bracket value (T acts on the whole coordinate).
std::vector<MPoly> skew_substitute(const std::vector<MPoly>& value);

struct ConformalReport {
  bool ok = true;
  std::string identity;  // "skew-symmetry" or "jacobi"
  std::vector<std::size_t> witness;
  std::vector<MPoly> defect;
  std::size_t tuples_checked = 0;

  std::string describe(const GDAlgebra& V) const;
};

// Skew-symmetry and Jacobi as exact polynomial identities in (T, λ, μ) over
// all basis pairs/triples. Works on unchecked algebras too.
ConformalReport check_conformal_axioms(const GDAlgebra& V);

// "(T+2λ)·v + 3·e2"; "0" for the zero element.
std::string render(const GDAlgebra& V, const std::vector<MPoly>& coords);
inline std::string render(const GDAlgebra& V, const ConfElem& a) { return render(V, a.coords); }
inline std::string render(const GDAlgebra& V, const ConfBracketValue& a) { return render(V, a.coords); }

}  // namespace gdconf
