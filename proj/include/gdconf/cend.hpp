#pragma once

#include "gdconf/linalg.hpp"
#include "gdconf/mpoly.hpp"
#include "gdconf/poisson.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace gdconf {

/// One letter of a raw operator word. Subscripts are P-basis monomials.
struct Letter {
  enum Kind : int { ad = 0, l = 1, d = 2 };
  Kind kind;
  BasisId sub;
  auto operator<=>(const Letter&) const = default;
};

using RawWord = std::vector<Letter>;

/// Normal word Ad(g_1)…Ad(g_r)·L(m)·D^j with g_1 ≤ … ≤ g_r generators and
/// m a normal monomial (empty m: no L letter).
struct OpWord {
  std::vector<int> ad;
  BasisId l;
  int d = 0;

  bool is_identity() const { return ad.empty() && l.empty() && d == 0; }
  RawWord letters() const;
  friend bool operator==(const OpWord&, const OpWord&) = default;
};

// More Ad letters is larger, then larger L, then more D.
struct OpWordLess {
  bool operator()(const OpWord& a, const OpWord& b) const;
};

/// Element of Cend_fin(H⊗P): Σ f_w(T, x, λ, μ) ⊗ w over normal words.
class Operator {
 public:
  using Terms = std::map<OpWord, MPoly, OpWordLess>;

  Operator() = default;
  static Operator word(OpWord w, const MPoly& c = MPoly(1));

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  MPoly coeff(const OpWord& w) const;
  void add(const OpWord& w, const MPoly& c);

  Operator& operator+=(const Operator& o);
  Operator& operator-=(const Operator& o);
  Operator& operator*=(const MPoly& c);
  friend Operator operator+(Operator a, const Operator& b) { return a += b; }
  friend Operator operator-(Operator a, const Operator& b) { return a -= b; }
  friend Operator operator*(Operator a, const MPoly& c) { return a *= c; }
  friend Operator operator*(const MPoly& c, Operator a) { return a *= c; }
  Operator operator-() const { return *this * MPoly(-1); }
  friend bool operator==(const Operator&, const Operator&) = default;

  int degree(Var v) const;
  Operator coeff(Var v, unsigned power) const;
  Operator substitute(const std::vector<std::pair<Var, MPoly>>& bindings) const;

 private:
  Terms terms_;
};

/// Element of H⊗P with coefficients in T (and λ, μ after actions).
class ModuleElem {
 public:
  using Terms = std::map<BasisId, MPoly, BasisLess>;

  ModuleElem() = default;
  static ModuleElem from(const PoissonElem& u, const MPoly& h = MPoly(1));

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const BasisId& m, const MPoly& c);
  ModuleElem& operator+=(const ModuleElem& o);
  friend ModuleElem operator+(ModuleElem a, const ModuleElem& b) { return a += b; }
  ModuleElem& operator*=(const MPoly& c);
  friend bool operator==(const ModuleElem&, const ModuleElem&) = default;

  ModuleElem coeff(Var v, unsigned power) const;
  int degree(Var v) const;

 private:
  Terms terms_;
};

enum class Strategy { leftmost, rightmost };

struct CendOptions {
  // Ad-prefix length used when spanning the relations coming from the
  // ideal of P (only for presented models).
  int relation_ad_length = 2;
};

/// Cend_fin(H⊗P) as a rewriting system on words in Ad, L, D.
class CendAlgebra {
 public:
  explicit CendAlgebra(PoissonPtr P, CendOptions opts = {});

  const DiffPoissonAlgebra& poisson() const { return *P_; }
  PoissonPtr poisson_ptr() const { return P_; }

  Operator id() const { return Operator::word(OpWord{}); }
  Operator scalar(const MPoly& c) const { return Operator::word(OpWord{}, c); }
  Operator D() const;
  Operator Ad(const PoissonElem& a) const;
  Operator L(const PoissonElem& a) const;

  // Normal form of a raw word; both strategies must agree.
  Operator normalize(const RawWord& w, Strategy s = Strategy::leftmost) const;
  // Reduces modulo the operators Ad(r)·…, r in the ideal of a presented P.
  Operator reduce(const Operator& A) const;

  // Composition A·B; coefficients commute with letters.
  Operator mul(const Operator& A, const Operator& B) const;

  // A_Λ B = Σ f(−Λ, x)·g(T+Λ, x+Λ) ⊗ αβ, Λ = param (λ by default).
  Operator lambda_product(const Operator& A, const Operator& B, const MPoly& param = MPoly::var(Var::Lambda)) const;
  Operator n_product(const Operator& A, const Operator& B, unsigned n) const;
  std::size_t locality(const Operator& A, const Operator& B) const;

  // A_Λ u = Σ f(−Λ, T)·h(T+Λ) ⊗ α(u), Λ = param (μ by default).
  ModuleElem act(const Operator& A, const ModuleElem& u, const MPoly& param = MPoly::var(Var::Mu)) const;
  PoissonElem apply(const OpWord& w, const PoissonElem& u) const;
  PoissonElem apply(const RawWord& w, const PoissonElem& u) const;

  std::size_t relation_rank() const { return relations_.rank(); }

  std::string render(const OpWord& w) const;
  std::string render(const Operator& A) const;
  std::string render(const ModuleElem& u) const;

 private:
  using Scalars = std::map<OpWord, Rational, OpWordLess>;
  Scalars normalize_scalar(const RawWord& w, Strategy s) const;
  void build_relations();

  PoissonPtr P_;
  CendOptions opts_;
  std::vector<bool> central_;
  Echelon<OpWord, OpWordLess> relations_;
  mutable std::mutex mutex_;
  mutable std::map<RawWord, Scalars> cache_;
};

}  // namespace gdconf
