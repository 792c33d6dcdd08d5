#include "gdconf/parse.hpp"
#include "mutation.hpp"

#include <doctest.h>

using namespace gdconf;

namespace {
GDTables fixture(const std::string& name) { return load_gd_tables(GDCONF_FIXTURE_DIR "/" + name); }

GDAlgebra fixture_gd(const std::string& name) {
  auto t = fixture(name);
  return GDAlgebra(t.basis, t.novikov, t.lie);
}

bool same(const GDTables& a, const GDTables& b) {
  return a.basis == b.basis && a.novikov == b.novikov && a.lie == b.lie;
}
}  // namespace

TEST_CASE("positive fixtures validate") {
  for (const char* name : {"virasoro.json", "abelian.json", "cur-sl2.json", "cur-solv2.json", "novikov-2d.json"}) {
    CAPTURE(name);
    GDAlgebra g = fixture_gd(name);
    CHECK(g.validated());
    CHECK(check_conformal_axioms(g).ok);
  }
  CHECK(fixture_gd("virasoro.json").novikov() == virasoro_gd().novikov());
  CHECK(fixture_gd("cur-sl2.json").lie() == sl2_table());
  CHECK(fixture_gd("cur-solv2.json").lie() == solv2_table());
  auto n2 = fixture("novikov-2d.json");
  CHECK(minus_construction(n2.novikov).lie() == n2.lie);
}

TEST_CASE("negative fixtures") {
  CHECK_THROWS_AS(load_gd_tables(GDCONF_FIXTURE_DIR "/malformed.json"), ParseError);
  CHECK_THROWS_AS(load_gd_tables(GDCONF_FIXTURE_DIR "/missing.json"), ParseError);
  CHECK_THROWS_AS(fixture_gd("non-novikov-2d.json"), InvalidAlgebra);
  CHECK_THROWS_AS(fixture_gd("broken-table.json"), InvalidAlgebra);
  CHECK_THROWS_AS(fixture_gd("broken-jacobi.json"), InvalidAlgebra);

  auto nn = fixture("non-novikov-2d.json");
  auto r = check_novikov(nn.novikov);
  CHECK_FALSE(r.ok);
  CHECK_FALSE(check_conformal_axioms(GDAlgebra::unchecked(nn.basis, nn.novikov, nn.lie)).ok);
}

TEST_CASE("mutated fixtures come from the mutation search") {
  auto compat = testing::first_mutation(fixture("novikov-2d.json"), testing::Defect::compat);
  REQUIRE(compat);
  CHECK(same(*compat, fixture("broken-table.json")));
  auto bt = fixture("broken-table.json");
  auto g = GDAlgebra::unchecked(bt.basis, bt.novikov, bt.lie);
  CHECK(check_novikov(bt.novikov).ok);
  CHECK(check_lie(bt.lie).ok);
  auto r = check_gd_compat(g);
  CHECK_FALSE(r.ok);
  CHECK(r.witness.size() == 3);
  CHECK_FALSE(check_conformal_axioms(g).ok);

  auto jacobi = testing::first_mutation(fixture("cur-sl2.json"), testing::Defect::jacobi);
  REQUIRE(jacobi);
  CHECK(same(*jacobi, fixture("broken-jacobi.json")));
  auto bj = fixture("broken-jacobi.json");
  CHECK_FALSE(check_conformal_axioms(GDAlgebra::unchecked(bj.basis, bj.novikov, bj.lie)).ok);
}

TEST_CASE("element grammar") {
  GDAlgebra vir = virasoro_gd();
  const MPoly T = MPoly::var(Var::T);
  const MPoly lam = MPoly::var(Var::Lambda);
  CHECK(parse_elem(vir, "(T+1)*v").coords[0] == T + MPoly(1));
  CHECK(parse_elem(vir, "T*v").coords[0] == T);
  CHECK(parse_elem(vir, "-1/2*T^2 v + v").coords[0] == MPoly(1) - T.pow(2) * Rational(1, 2));
  CHECK(parse_elem(vir, "0").is_zero());
  CHECK(parse_coords(vir, "(T + 2λ)*v")[0] == T + lam * 2);
  CHECK(parse_coords(vir, "(T + 2λ)·v")[0] == T + lam * 2);
  CHECK(parse_coords(vir, "−λ(T + 2λ)·v")[0] == -(lam * T) - lam * lam * 2);
  CHECK(parse_coords(vir, "lambda v")[0] == lam);

  GDAlgebra sl2 = current_gd(sl2_table(), {"e", "f", "h"});
  auto a = parse_elem(sl2, "e + 3/4*(T - 1)*h - f");
  CHECK(a.coords[0] == MPoly(1));
  CHECK(a.coords[1] == MPoly(-1));
  CHECK(a.coords[2] == (T - MPoly(1)) * Rational(3, 4));

  CHECK_THROWS_AS(parse_elem(vir, "w"), ParseError);
  CHECK_THROWS_AS(parse_elem(vir, "v*v"), ParseError);
  CHECK_THROWS_AS(parse_elem(vir, "T + v"), ParseError);
  CHECK_THROWS_AS(parse_elem(vir, "(v"), ParseError);
  CHECK_THROWS_AS(parse_elem(vir, "λ*v"), ParseError);
  CHECK_THROWS_AS(parse_elem(vir, "1/0*v"), ParseError);
  CHECK_THROWS_AS(parse_elem(vir, "2"), ParseError);
}
