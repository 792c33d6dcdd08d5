#pragma once

#include "gdconf/cend.hpp"
#include "gdconf/conformal.hpp"
#include "gdconf/finite_algebra.hpp"
#include "gdconf/poisson.hpp"
#include "gdconf/report.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace gdconf {

class InvalidContext : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A GD algebra V, a differential Poisson algebra P with V ⊂ P^(d), and the
/// images τ(a) in Cend_fin(H⊗P) of the basis of V.
struct EmbeddingContext {
  GDAlgebra gd;
  PoissonPtr poisson;
  std::vector<int> embedding;  // V-basis i ↦ generator code of P
  std::shared_ptr<const CendAlgebra> cend;
  std::vector<Operator> tau_images;
  std::string poisson_kind;

  std::size_t dim() const { return gd.dim(); }
  const CendAlgebra& C() const { return *cend; }
};

// Checks a·d(b) = a∘b and {a,b} = [a,b] on V, then computes τ.
EmbeddingContext make_context(GDAlgebra gd, PoissonPtr P, std::vector<int> embedding, std::string kind,
                              CendOptions opts = {});

EmbeddingContext virasoro_context(int degree_bound = 64);
EmbeddingContext current_context(const GDAlgebra& gd, int degree_bound = 8);
EmbeddingContext novikov_context(const GDAlgebra& gd, int order_bound, int degree_bound);
EmbeddingContext abelian_context(int order_bound, int degree_bound);

// Picks P from the shape of V: k[v] with d/dv for v∘v = v, the free
// quotient for the zero rank-one algebra, S(g) for a zero Novikov product,
// the universal envelope when the bracket is the commutator of ∘.
EmbeddingContext auto_context(const GDAlgebra& gd, int order_bound, int degree_bound);

// Ad(a) + x·L(a′) − T·L(a′) − T·L(a)·(D + id).
Operator tau_of(const CendAlgebra& C, const PoissonElem& a);
// H-linear extension to H⊗V.
Operator tau(const EmbeddingContext& ctx, const ConfElem& w);

// τ(a)_λ τ(b) − τ(b)_{−T−λ} τ(a) − τ([a λ b]).
Operator lemma1_residual(const EmbeddingContext& ctx, std::size_t a, std::size_t b);

// −L((a·b)′)(D + id) − L(a·b)(D + id)².
Operator expected_lambda2(const EmbeddingContext& ctx, std::size_t a, std::size_t b);

struct InjectivityResult {
  bool zero = true;
  std::string witness;  // first nonzero coordinate of τ(w) acting on 1 or on V
};
InjectivityResult injectivity_probe(const EmbeddingContext& ctx, const ConfElem& w);

struct SpanItem {
  std::string label;  // e.g. "v (0) (v (2) v)"
  int length = 1;     // number of generators
  Operator op;
};

// Closure of τ(V) under n-products, n below the locality of each pair, up
// to word length `bound`, deduplicated by normal form. Products that leave
// the truncation are skipped and counted in *skipped.
std::vector<SpanItem> envelope_span(const EmbeddingContext& ctx, int bound, std::size_t* skipped = nullptr);

// Splits an element of H⊗P with (T, x, λ, μ) coefficients into its P-parts.
std::map<Exponents, PoissonElem> components(const ModuleElem& u);

struct IdealCheck {
  std::size_t checked = 0;  // basis f with A_μ f in I_V
  std::size_t skipped = 0;  // basis f whose image leaves the model
  std::string failure;      // first f with A_μ f outside I_V
  bool ok() const { return failure.empty() && checked > 0; }
};
// Over the free quotient model: A_μ f ∈ I_V for every basis f of P.
IdealCheck acts_into_ideal(const EmbeddingContext& ctx, const Operator& A);

// Residuals are exact zeros, or over the free quotient model zero modulo
// I_V on every basis element.
Report lemma1_report(const EmbeddingContext& ctx);
Report locality_report(const EmbeddingContext& ctx);
Report injectivity_report(const EmbeddingContext& ctx, std::uint64_t seed, int samples = 20, int max_degree = 5);
Report span_report(const EmbeddingContext& ctx, int bound);

struct AbelianOptions {
  int order_bound = 6;
  int degree_bound = 4;
  // basis f are checked while the total order of their image stays ≤ cap
  int image_order_cap = 12;
};

// φ(v (0) (v (2) v)) over the free differential Poisson algebra: nonzero
// as a word combination, zero on every basis element modulo I_V.
Report abelian_kernel_witness(const AbelianOptions& opts = {});

// {v, v^(k+1)}·v and nested brackets in I_V, then {v, f}·v for every basis f
// of the free model within (f_order_bound, f_degree_bound).
Report lemma2_report(const Lemma2Options& opts = {});

}  // namespace gdconf
