#pragma once

#include "gdconf/rational.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace gdconf {

using Exponent = std::vector<int>;
using GPoly = std::map<Exponent, Rational>;

/// Monomial order: first the degree in the eliminated variables, then a
/// positive weighted degree, then lex with the last variable most
/// significant. Empty vectors mean no elimination and weight 0 (plain lex).
struct MonomialOrder {
  std::vector<int> eliminate;
  std::vector<int> weight;
};

/// Reduced Gröbner basis (Buchberger with the Gebauer–Möller criteria and
/// the sugar strategy).
class GroebnerBasis {
 public:
  GroebnerBasis(std::size_t nvars, const std::vector<GPoly>& generators, MonomialOrder order = {});

  std::size_t num_vars() const { return nvars_; }
  std::size_t size() const { return basis_.size(); }
  GPoly element(std::size_t i) const;
  Exponent leading(std::size_t i) const;
  // Canonical representative of f modulo the ideal.
  GPoly normal_form(const GPoly& f) const;
  bool is_standard(const Exponent& m) const;
  std::size_t pairs_reduced() const { return pairs_reduced_; }

  // Internal key: [eliminated degree, weighted degree, e_{n-1}, …, e_0].
  using Key = std::vector<int>;
  using Poly = std::map<Key, Rational>;

 private:
  Key key(const Exponent& e) const;
  Exponent exponent(const Key& k) const;

  std::size_t nvars_;
  MonomialOrder order_;
  std::vector<Poly> basis_;
  std::size_t pairs_reduced_ = 0;
};

}  // namespace gdconf
