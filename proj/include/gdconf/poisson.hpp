#pragma once

#include "gdconf/finite_algebra.hpp"
#include "gdconf/groebner.hpp"
#include "gdconf/linalg.hpp"
#include "gdconf/rational.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace gdconf {

/// Basis monomial of a differential Poisson algebra: a sorted multiset of
/// generator codes. The empty monomial is the unit.
using BasisId = std::vector<int>;

// Degree (number of factors) first, then lexicographic.
struct BasisLess {
  bool operator()(const BasisId& a, const BasisId& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

class PoissonElem {
 public:
  using Terms = std::map<BasisId, Rational, BasisLess>;

  PoissonElem() = default;
  static PoissonElem monomial(BasisId m, const Rational& c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const BasisId& m) const;
  void add(const BasisId& m, const Rational& c);

  PoissonElem& operator+=(const PoissonElem& o);
  PoissonElem& operator-=(const PoissonElem& o);
  PoissonElem& operator*=(const Rational& c);
  friend PoissonElem operator+(PoissonElem a, const PoissonElem& b) { return a += b; }
  friend PoissonElem operator-(PoissonElem a, const PoissonElem& b) { return a -= b; }
  friend PoissonElem operator*(PoissonElem a, const Rational& c) { return a *= c; }
  friend PoissonElem operator*(const Rational& c, PoissonElem a) { return a *= c; }
  PoissonElem operator-() const { return *this * Rational(-1); }
  friend bool operator==(const PoissonElem&, const PoissonElem&) = default;

 private:
  Terms terms_;
};

class TruncationOverflow : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonConfluence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One defining relation Σ c·m = 0, written over free (unreduced) monomials.
using Relation = std::vector<std::pair<Rational, BasisId>>;

/// A differential Poisson algebra given by generators, a normal form for
/// commutative monomials, and the bracket and derivation on generators.
/// Models are truncated: generator orders ≤ order_bound(), monomial weight
/// ≤ degree_bound(); anything leaving the model throws TruncationOverflow.
class DiffPoissonAlgebra {
 public:
  DiffPoissonAlgebra(int order_bound, int degree_bound);
  virtual ~DiffPoissonAlgebra() = default;

  virtual std::string name() const = 0;
  int order_bound() const { return order_bound_; }
  int degree_bound() const { return degree_bound_; }

  virtual int num_generators() const = 0;
  virtual std::string generator_name(int code) const = 0;
  virtual int generator_order(int code) const = 0;
  virtual int generator_weight(int) const { return 1; }

  PoissonElem unit() const { return PoissonElem::monomial({}); }
  PoissonElem generator(int code) const { return PoissonElem::monomial({code}); }

  PoissonElem product(const PoissonElem& a, const PoissonElem& b) const;
  PoissonElem bracket(const PoissonElem& a, const PoissonElem& b) const;
  PoissonElem derive(const PoissonElem& a) const;

  // Normal form of a free monomial (identity for free models).
  virtual PoissonElem reduce(const BasisId& raw) const;
  virtual bool is_normal(const BasisId&) const { return true; }

  // Normal monomials with generator orders ≤ order_bound and weight ≤
  // degree_bound, in BasisLess order, unit first.
  std::vector<BasisId> enumerate_basis(int order_bound, int degree_bound) const;
  std::vector<BasisId> enumerate_basis() const { return enumerate_basis(order_bound_, degree_bound_); }

  int weight(const BasisId& m) const;
  int max_order(const BasisId& m) const;

  // Generator codes whose adjoint vanishes on the whole algebra.
  virtual bool generator_is_central(int code) const;
  virtual bool derivation_is_zero() const { return false; }
  virtual bool bracket_is_zero() const { return false; }

  // Relations of the presentation, over free monomials (empty when the
  // model is free).
  virtual std::vector<Relation> defining_relations() const { return {}; }
  // Generators of all relations among model generators (a basis of the
  // relation ideal, when one is known).
  virtual std::vector<Relation> ideal_basis() const { return defining_relations(); }

  std::string render(const BasisId& m) const;
  std::string render(const PoissonElem& a) const;

  // Bracket and derivative on generators, already in normal form.
  virtual PoissonElem generator_bracket(int a, int b) const = 0;
  virtual PoissonElem generator_derive(int a) const = 0;

 protected:
  void check_bounds(const BasisId& m) const;
  void check_bounds(const PoissonElem& a) const;

 private:
  int order_bound_;
  int degree_bound_;
};

using PoissonPtr = std::shared_ptr<const DiffPoissonAlgebra>;

enum class DerivationMode { ddv, zero };

// k[v] with zero bracket and d = d/dv or d = 0.
PoissonPtr poly_poisson_rank1(DerivationMode mode, int degree_bound = 64);

// Symmetric algebra on a Lie algebra, bracket extended by Leibniz, d = 0.
PoissonPtr lie_poisson(const StructureTable& lie, std::vector<std::string> names = {}, int degree_bound = 8);

struct RewriteProbe {
  std::size_t overlaps_checked = 0;
  bool confluent = true;
  std::string witness;  // first overlap whose two reductions disagree
};

/// Universal differential Poisson envelope of a Novikov algebra: generators
/// a^(n), relations d^k(a·b' − a∘b), bracket
/// {a^(n), b^(m)} = (m−1) a^(n+1) b^(m) − (n−1) a^(n) b^(m+1).
///
/// Normal forms come from a Gröbner basis of the relations in the generators
/// of order ≤ K', for an order that eliminates the generators of order > K
/// (then weight Σ(n+1), then lex). K' grows from K+1 until
/// the part of the basis in orders ≤ K repeats twice in a row.
class NovikovEnvelope final : public DiffPoissonAlgebra {
 public:
  NovikovEnvelope(const StructureTable& novikov, std::vector<std::string> names, int order_bound, int degree_bound,
                  int max_order_slack = 8);

  std::string name() const override { return "novikov-universal"; }
  int num_generators() const override { return static_cast<int>(dim_) * (order_bound() + 1); }
  std::string generator_name(int code) const override;
  int generator_order(int code) const override { return code / static_cast<int>(dim_); }
  int code(std::size_t basis_index, int order) const { return order * static_cast<int>(dim_) + static_cast<int>(basis_index); }
  std::size_t dim() const { return dim_; }

  PoissonElem reduce(const BasisId& raw) const override;
  bool is_normal(const BasisId& m) const override;
  std::vector<Relation> defining_relations() const override;
  std::vector<Relation> ideal_basis() const override;
  PoissonElem generator_bracket(int a, int b) const override;
  PoissonElem generator_derive(int a) const override;

  // Bracket computed on free monomials before any reduction.
  PoissonElem free_bracket(const BasisId& a, const BasisId& b) const;

  // Local confluence of the bare rewrite family a·b^(k+1) → (a∘b)^(k) − …
  // on all degree-3 overlaps.
  RewriteProbe rewrite_probe() const;

  int ambient_order() const { return ambient_order_; }
  bool completion_stable() const { return stable_; }
  // Basis elements involving only orders ≤ K, rendered.
  std::vector<std::string> truncated_basis() const;

 private:
  std::vector<Relation> relations_up_to(int order) const;
  std::vector<std::pair<Rational, BasisId>> rewrite_once(const BasisId& raw, std::size_t i, std::size_t j) const;
  std::vector<std::pair<std::size_t, std::size_t>> redexes(const BasisId& raw) const;
  PoissonElem rewrite_normal_form(const BasisId& raw) const;
  Exponent exponent(const BasisId& m) const;

  StructureTable novikov_;
  std::vector<std::string> names_;
  std::size_t dim_;
  int ambient_order_ = 0;
  bool stable_ = false;
  std::unique_ptr<GroebnerBasis> basis_;
  std::vector<GPoly> truncated_;
  mutable std::mutex mutex_;
  mutable std::map<BasisId, PoissonElem> cache_;
};

std::shared_ptr<const NovikovEnvelope> novikov_universal(const StructureTable& novikov, std::vector<std::string> names,
                                                         int order_bound, int degree_bound);

enum class Membership { member, not_member, inconclusive };
const char* to_string(Membership m);

struct MembershipResult {
  Membership status = Membership::inconclusive;
  std::size_t spanning_size = 0;  // spanning elements of I_V tried
  std::size_t rank = 0;
};

/// Free differential Poisson algebra on v, v', v'', … (letters v^(0..K)),
/// realised as the symmetric algebra on the free Lie algebra in the Lyndon
/// basis. Generator weight is the Lyndon word length. Carries a membership
/// oracle for I_V, the differential Poisson ideal generated by v·v'.
class FreePoissonRank1 final : public DiffPoissonAlgebra {
 public:
  using Word = std::vector<int>;

  // total_order_cap ≥ 0 additionally drops Lyndon words whose letter orders
  // sum past the cap (used for graded ambient models).
  FreePoissonRank1(int order_bound, int degree_bound, int total_order_cap = -1);

  std::string name() const override { return "free-differential-poisson"; }
  int num_generators() const override { return static_cast<int>(words_.size()); }
  std::string generator_name(int code) const override;
  int generator_order(int code) const override;
  int generator_weight(int code) const override { return static_cast<int>(words_[code].size()); }

  PoissonElem generator_bracket(int a, int b) const override;
  PoissonElem generator_derive(int a) const override;

  const Word& word(int code) const { return words_[code]; }
  int code_of(const Word& w) const;
  int letter(int n) const;  // code of v^(n)

  // (letter count, total order) of a monomial.
  std::pair<int, int> bidegree(const BasisId& m) const;

  // Exact membership in I_V, component by component; spanning elements are
  // built in an ambient model large enough for each bidegree, so a negative
  // answer is as exact as a positive one.
  MembershipResult ideal_member(const PoissonElem& f) const;

 private:
  using AssocPoly = std::map<Word, Rational>;
  const AssocPoly& expansion(int code) const;
  PoissonElem decompose(AssocPoly p) const;

  int total_order_cap_;
  std::vector<Word> words_;
  std::map<Word, int> index_;
  mutable std::mutex mutex_;
  mutable std::map<int, AssocPoly> expansions_;
  mutable std::map<std::pair<int, int>, PoissonElem> brackets_;
};

std::shared_ptr<const FreePoissonRank1> free_pd_quotient_rank1(int order_bound, int degree_bound);

struct Lemma2Options {
  int base_k_max = 5;      // {v, v^(k+1)}·v for k ≤ base_k_max
  int nest_depth = 2;      // nestings {v, {v^(k1), … v^(km)}}·v with m ≤ nest_depth
  int nest_k_max = 3;      // k_i ≤ nest_k_max
  int f_order_bound = 5;   // {v, f}·v for basis f within these bounds
  int f_degree_bound = 3;
};

struct Lemma2Item {
  std::string label;
  std::string value;  // rendered element
  Membership status = Membership::inconclusive;
};

struct Lemma2Report {
  std::vector<Lemma2Item> items;       // base and nested cases
  std::size_t corollary_checked = 0;   // basis f confirmed
  std::size_t corollary_skipped = 0;   // f whose {v,f}·v leaves the model
  std::vector<Lemma2Item> corollary_failures;
  bool ok() const;
};

// Nested cases are evaluated in `nested`; the sweep over basis f in `sweep`.
Lemma2Report lemma2_certificate(const FreePoissonRank1& nested, const FreePoissonRank1& sweep,
                                const Lemma2Options& opts = {});

struct PoissonReport {
  bool ok = true;
  std::string identity;
  std::vector<BasisId> witness;
  PoissonElem defect;
  std::size_t tuples_checked = 0;
  std::size_t overflow_skipped = 0;
  std::string describe(const DiffPoissonAlgebra& P) const;
};

// Antisymmetry, Jacobi, Leibniz, and d as a derivation of product and
// bracket, on basis tuples within the bounds. Tuples whose evaluation leaves
// the model are skipped and counted.
PoissonReport check_poisson_axioms(const DiffPoissonAlgebra& P, int order_bound, int degree_bound);

// a·d(b) = a∘b and {a,b} = [a,b] on the V-basis, where V-basis element i
// is the generator embedding[i].
PoissonReport check_pd_consistency(const DiffPoissonAlgebra& P, const GDAlgebra& V, const std::vector<int>& embedding);

}  // namespace gdconf
