#pragma once

#include "gdconf/rational.hpp"

#include <array>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace gdconf {

// The fixed, ordered set of commuting formal variables. T stands for the
// derivation ∂ of H = k[∂].
enum class Var : std::uint8_t { T = 0, X = 1, Lambda = 2, Mu = 3 };

inline constexpr std::size_t kNumVars = 4;

const char* var_name(Var v);

using Exponents = std::array<std::uint16_t, kNumVars>;

// Graded lexicographic order, largest first, with T > x > λ > μ.
struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Exact multivariate polynomial over ℚ in the variables {T, x, λ, μ}.
/// Sparse in monomials; zero coefficients are never stored, so structural
/// equality is polynomial equality.
class MPoly {
 public:
  using Terms = std::map<Exponents, Rational, GrlexGreater>;

  MPoly() = default;
  MPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  MPoly(long c) : MPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  static MPoly var(Var v, unsigned power = 1);
  static MPoly monomial(const Exponents& e, const Rational& c);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  // Highest exponent of v among the stored monomials; -1 for the zero polynomial.
  int degree(Var v) const;
  int total_degree() const;
  bool uses(Var v) const { return degree(v) > 0; }

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  MPoly& operator*=(const Rational& c);

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Rational& c) { return a *= c; }
  friend MPoly operator*(const Rational& c, MPoly a) { return a *= c; }
  friend MPoly operator*(MPoly a, int c) { return a *= Rational(c); }
  friend MPoly operator*(int c, MPoly a) { return a *= Rational(c); }
  MPoly operator-() const;

  friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  MPoly pow(unsigned n) const;

  // Coefficient of v^power, as a polynomial in the remaining variables.
  MPoly coeff(Var v, unsigned power) const;

  // Simultaneous substitution; variables without a binding are kept.
  MPoly substitute(const std::vector<std::pair<Var, MPoly>>& bindings) const;
  MPoly substitute(Var v, const MPoly& value) const { return substitute({{v, value}}); }

  // Canonical rendering, e.g. "T^2*x - 1/2*λ".
  std::string to_string() const;
  // Compact rendering used inside conformal elements, e.g. "T+2λ".
  std::string to_compact() const;

  // Deterministic total order on polynomials (used for map keys in tests).
  friend bool operator<(const MPoly& a, const MPoly& b);

 private:
  void add_term(const Exponents& e, const Rational& c);
  Terms terms_;
};

}  // namespace gdconf
