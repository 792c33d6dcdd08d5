#pragma once

#include "gdconf/cend.hpp"
#include "gdconf/mpoly.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>

namespace gdconf {

/// Element Σ c_ij(T, x, λ, μ)·p^i d^j of the Weyl algebra dp − pd = 1,
/// tensored with the coefficient ring. Operator model for k[v] with
/// p = multiplication by v and d = d/dv.
class Weyl {
 public:
  using Key = std::pair<int, int>;  // (power of p, power of d)
  using Terms = std::map<Key, MPoly>;

  Weyl() = default;
  static Weyl one() { return term(0, 0); }
  static Weyl p() { return term(1, 0); }
  static Weyl d() { return term(0, 1); }
  static Weyl term(int i, int j, const MPoly& c = MPoly(1));
  static Weyl scalar(const MPoly& c) { return term(0, 0, c); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  MPoly coeff(int i, int j) const;
  void add(int i, int j, const MPoly& c);

  Weyl& operator+=(const Weyl& o);
  Weyl& operator-=(const Weyl& o);
  Weyl& operator*=(const MPoly& c);
  friend Weyl operator+(Weyl a, const Weyl& b) { return a += b; }
  friend Weyl operator-(Weyl a, const Weyl& b) { return a -= b; }
  friend Weyl operator*(Weyl a, const MPoly& c) { return a *= c; }
  friend Weyl operator*(const MPoly& c, Weyl a) { return a *= c; }
  friend Weyl operator*(const Weyl& a, const Weyl& b);
  Weyl operator-() const { return *this * MPoly(-1); }
  Weyl pow(unsigned n) const;
  friend bool operator==(const Weyl&, const Weyl&) = default;

  int degree(Var v) const;
  Weyl coeff(Var v, unsigned power) const;
  Weyl substitute(const std::vector<std::pair<Var, MPoly>>& bindings) const;

  std::string to_string() const;

 private:
  Terms terms_;
};

// Polynomial Σ h_k·v^k in H⊗k[v].
using VPoly = std::map<int, MPoly>;

Weyl weyl_lambda_product(const Weyl& A, const Weyl& B, const MPoly& param = MPoly::var(Var::Lambda));
Weyl weyl_n_product(const Weyl& A, const Weyl& B, unsigned n);
VPoly weyl_act(const Weyl& A, const VPoly& u, const MPoly& param = MPoly::var(Var::Mu));
std::string render(const VPoly& u);

// p ↔ L(v), d ↔ D, 1 ↔ id over a rank-one polynomial model (generator 0 = v).
Operator to_operator(const Weyl& A);
std::optional<Weyl> to_weyl(const Operator& A);

}  // namespace gdconf
