#include "gdconf/mpoly.hpp"
#include "unit/generators.hpp"

#include <doctest.h>

using namespace gdconf;

namespace {
const MPoly T = MPoly::var(Var::T);
const MPoly X = MPoly::var(Var::X);
const MPoly L = MPoly::var(Var::Lambda);
const MPoly M = MPoly::var(Var::Mu);
}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-3")) == "-3");
  CHECK(to_string(parse_rational("0/7")) == "0");
  CHECK(parse_rational("0/7").get_den() == 1);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
  CHECK(binomial(5, 2) == 10);
  CHECK(factorial(4) == 24);
}

TEST_CASE("poly_arith examples") {
  CHECK((T + L) * (T - L) == T * T - L * L);
  CHECK((T + L) * (T - L) + MPoly() == T.pow(2) - L.pow(2));
  MPoly p = T + L * 2;
  CHECK(p * MPoly(1) == p);
  CHECK((p - p).is_zero());
  CHECK(MPoly(0).size() == 0);
}

TEST_CASE("canonical rendering is graded lex with T > x > lambda > mu") {
  MPoly p = T.pow(2) * X - L * Rational(1, 2);
  CHECK(p.to_string() == "T^2*x - 1/2*λ");
  CHECK((L + T).to_string() == "T + λ");
  CHECK((-(T * M) + X * X + 3).to_string() == "-T*μ + x^2 + 3");
  CHECK((T + L * 2).to_compact() == "T+2λ");
  CHECK(MPoly().to_string() == "0");
}

TEST_CASE("poly_substitute examples") {
  CHECK(L.substitute(Var::Lambda, -T - L) == -T - L);
  CHECK(X.substitute(Var::X, X + L) == X + L);
  CHECK((T * X).substitute(Var::T, -L) == -(L * X));
  // simultaneous, not sequential
  CHECK((T + L).substitute({{Var::T, L}, {Var::Lambda, T}}) == T + L);
}

TEST_CASE("poly_coeff examples") {
  MPoly p = T + L * 2;
  CHECK(p.coeff(Var::Lambda, 0) == T);
  CHECK(p.coeff(Var::Lambda, 1) == MPoly(2));
  CHECK(p.coeff(Var::Lambda, 2).is_zero());
  CHECK(p.degree(Var::Lambda) == 1);
  CHECK(MPoly().degree(Var::T) == -1);
}

TEST_CASE("ring axioms, substitution homomorphism, coefficient reconstruction") {
  std::mt19937_64 rng(20240611);
  const std::initializer_list<Var> all = {Var::T, Var::X, Var::Lambda, Var::Mu};
  for (int iter = 0; iter < 200; ++iter) {
    MPoly a = testing::random_poly(rng, all), b = testing::random_poly(rng, all), c = testing::random_poly(rng, all);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) + c == a + (b + c));

    std::vector<std::pair<Var, MPoly>> phi = {{Var::Lambda, -T - L}, {Var::X, X + L}, {Var::T, T * M - 1}};
    CHECK((a * b).substitute(phi) == a.substitute(phi) * b.substitute(phi));
    CHECK((a + b).substitute(phi) == a.substitute(phi) + b.substitute(phi));

    MPoly rebuilt;
    for (int k = 0; k <= std::max(0, a.degree(Var::Lambda)); ++k)
      rebuilt += a.coeff(Var::Lambda, static_cast<unsigned>(k)) * L.pow(static_cast<unsigned>(k));
    CHECK(rebuilt == a);
  }
}
