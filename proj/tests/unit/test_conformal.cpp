#include "gdconf/conformal.hpp"
#include "unit/generators.hpp"

#include <doctest.h>

using namespace gdconf;

namespace {
const MPoly T = MPoly::var(Var::T);
const MPoly L = MPoly::var(Var::Lambda);

GDAlgebra sl2() { return current_gd(sl2_table(), {"e", "f", "h"}); }

StructureTable novikov_2d() {
  StructureTable t(2);
  t.at(0, 0, 0) = 1;
  t.at(1, 0, 1) = 1;
  return t;
}

ConfElem scaled(const GDAlgebra& V, std::size_t i, const MPoly& p) {
  ConfElem e = basis_elem(V, i);
  e.coords[i] = p;
  return e;
}
}  // namespace

TEST_CASE("Virasoro bracket, n-products and locality") {
  GDAlgebra vir = virasoro_gd();
  ConfElem v = basis_elem(vir, 0);
  ConfBracketValue br = quadratic_bracket(vir, v, v);
  CHECK(br.coords[0] == T + L * 2);
  CHECK(render(vir, br) == "(T+2λ)·v");
  CHECK(n_product(vir, v, v, 0).coords[0] == T);
  CHECK(n_product(vir, v, v, 1).coords[0] == MPoly(2));
  CHECK(n_product(vir, v, v, 2).is_zero());
  CHECK(locality_N(vir, v, v) == 2);
  CHECK(render(vir, n_product(vir, v, v, 0)) == "T·v");

  // sesquilinearity in the first argument
  ConfElem tv = scaled(vir, 0, T);
  CHECK(quadratic_bracket(vir, tv, v).coords[0] == -L * (T + L * 2));
  // and in the second
  CHECK(quadratic_bracket(vir, v, tv).coords[0] == (T + L) * (T + L * 2));
}

TEST_CASE("abelian and current brackets") {
  GDAlgebra ab = abelian_gd();
  ConfElem v = basis_elem(ab, 0);
  CHECK(quadratic_bracket(ab, v, v).is_zero());
  CHECK(locality_N(ab, v, v) == 0);

  GDAlgebra g = sl2();
  CHECK(render(g, quadratic_bracket(g, basis_elem(g, 0), basis_elem(g, 1))) == "h");
  CHECK(locality_N(g, basis_elem(g, 0), basis_elem(g, 1)) == 1);

  std::mt19937_64 rng(11);
  for (int it = 0; it < 30; ++it) {
    MPoly f = testing::random_poly(rng, {Var::T}, 3, 3), h = testing::random_poly(rng, {Var::T}, 3, 3);
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = 0; b < 3; ++b) {
        ConfBracketValue br = quadratic_bracket(g, scaled(g, a, f), scaled(g, b, h));
        MPoly factor = f.substitute(Var::T, -L) * h.substitute(Var::T, T + L);
        for (std::size_t k = 0; k < 3; ++k) CHECK(br.coords[k] == factor * sl2_table().at(a, b, k));
      }
  }
}

TEST_CASE("dimension mismatch is rejected") {
  GDAlgebra vir = virasoro_gd();
  ConfElem wrong{std::vector<MPoly>(2)};
  CHECK_THROWS_AS(quadratic_bracket(vir, wrong, basis_elem(vir, 0)), DimensionMismatch);
  CHECK_THROWS_AS(make_elem(vir, {L}), std::invalid_argument);
}

TEST_CASE("conformal axioms on valid algebras") {
  CHECK(check_conformal_axioms(virasoro_gd()).ok);
  CHECK(check_conformal_axioms(sl2()).ok);
  CHECK(check_conformal_axioms(current_gd(solv2_table(), {"e1", "e2"})).ok);
  CHECK(check_conformal_axioms(minus_construction(novikov_2d())).ok);
}

TEST_CASE("sesquilinearity holds for random H-coefficients") {
  GDAlgebra g = minus_construction(novikov_2d());
  std::mt19937_64 rng(5);
  for (int it = 0; it < 20; ++it) {
    ConfElem a{{testing::random_poly(rng, {Var::T}), testing::random_poly(rng, {Var::T})}};
    ConfElem b{{testing::random_poly(rng, {Var::T}), testing::random_poly(rng, {Var::T})}};
    ConfElem ta{{a.coords[0] * T, a.coords[1] * T}};
    auto lhs = quadratic_bracket(g, ta, b);
    auto rhs = quadratic_bracket(g, a, b);
    for (std::size_t k = 0; k < 2; ++k) CHECK(lhs.coords[k] == -L * rhs.coords[k]);
  }
}

TEST_CASE("conformal axioms hold iff the GD checks pass") {
  // Every 2-dim pair (Novikov table from a small corpus, bracket [e1,e2] = αe1 + βe2).
  std::vector<StructureTable> novikovs;
  novikovs.push_back(StructureTable(2));
  novikovs.push_back(novikov_2d());
  StructureTable spec2(2);
  spec2.at(0, 0, 0) = 1;
  spec2.at(0, 1, 1) = 1;
  novikovs.push_back(spec2);
  StructureTable comm(2);  // e1 unit of a commutative associative algebra
  comm.at(0, 0, 0) = 1;
  comm.at(0, 1, 1) = 1;
  comm.at(1, 0, 1) = 1;
  novikovs.push_back(comm);

  int agreements = 0, failures = 0;
  for (const auto& nov : novikovs)
    for (int alpha = -1; alpha <= 1; ++alpha)
      for (int beta = -1; beta <= 1; ++beta) {
        StructureTable lie(2);
        lie.at(0, 1, 0) = alpha;
        lie.at(0, 1, 1) = beta;
        lie.at(1, 0, 0) = -alpha;
        lie.at(1, 0, 1) = -beta;
        GDAlgebra g = GDAlgebra::unchecked({"e1", "e2"}, nov, lie);
        bool gd = check_novikov(nov).ok && check_lie(lie).ok && check_gd_compat(g).ok;
        auto conf = check_conformal_axioms(g);
        CHECK(conf.ok == gd);
        ++agreements;
        if (!conf.ok) {
          ++failures;
          CHECK_FALSE(conf.witness.empty());
        }
      }
  CHECK(agreements == 36);
  CHECK(failures > 0);
}
