#pragma once

// Seeded generators for property-style tests.

#include "gdconf/mpoly.hpp"

#include <random>

namespace gdconf::testing {

inline Rational random_rational(std::mt19937_64& rng, int range = 4) {
  std::uniform_int_distribution<int> num(-range, range), den(1, 3);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

// Random polynomial in the given variables with small exponents.
inline MPoly random_poly(std::mt19937_64& rng, std::initializer_list<Var> vars, int max_terms = 4, int max_exp = 2) {
  std::uniform_int_distribution<int> terms(0, max_terms), exp(0, max_exp);
  MPoly p;
  int n = terms(rng);
  for (int t = 0; t < n; ++t) {
    Exponents e{};
    for (Var v : vars) e[static_cast<std::size_t>(v)] = static_cast<std::uint16_t>(exp(rng));
    p += MPoly::monomial(e, random_rational(rng));
  }
  return p;
}

}  // namespace gdconf::testing
