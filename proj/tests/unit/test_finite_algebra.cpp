#include "gdconf/finite_algebra.hpp"
#include "unit/generators.hpp"

#include <doctest.h>

#include <array>

using namespace gdconf;

namespace {

// Independent oracle: products by explicit index sums on plain arrays, no use
// of StructureTable::product.
using Tab = std::vector<std::vector<std::vector<Rational>>>;

Tab to_tab(const StructureTable& t) {
  std::size_t n = t.dim();
  Tab out(n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out[i][j][k] = t.at(i, j, k);
  return out;
}

// coefficient of b_m in (b_i b_j) b_k
Rational left_assoc(const Tab& t, std::size_t i, std::size_t j, std::size_t k, std::size_t m) {
  Rational s;
  for (std::size_t p = 0; p < t.size(); ++p) s += t[i][j][p] * t[p][k][m];
  return s;
}
// coefficient of b_m in b_i (b_j b_k)
Rational right_assoc(const Tab& t, std::size_t i, std::size_t j, std::size_t k, std::size_t m) {
  Rational s;
  for (std::size_t p = 0; p < t.size(); ++p) s += t[j][k][p] * t[i][p][m];
  return s;
}

bool oracle_novikov(const StructureTable& st) {
  Tab t = to_tab(st);
  std::size_t n = t.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t m = 0; m < n; ++m) {
          if (left_assoc(t, a, b, c, m) - right_assoc(t, a, b, c, m) !=
              left_assoc(t, b, a, c, m) - right_assoc(t, b, a, c, m))
            return false;
          if (left_assoc(t, a, b, c, m) != left_assoc(t, a, c, b, m)) return false;
        }
  return true;
}

bool oracle_lie(const StructureTable& st) {
  Tab t = to_tab(st);
  std::size_t n = t.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t m = 0; m < n; ++m)
        if (t[a][b][m] != -t[b][a][m]) return false;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t m = 0; m < n; ++m)
          if (right_assoc(t, a, b, c, m) + right_assoc(t, b, c, a, m) + right_assoc(t, c, a, b, m) != 0) return false;
  return true;
}

StructureTable spec_2d_table() {  // e1∘e1 = e1, e1∘e2 = e2
  StructureTable t(2);
  t.at(0, 0, 0) = 1;
  t.at(0, 1, 1) = 1;
  return t;
}

StructureTable novikov_2d() {  // e1∘e1 = e1, e2∘e1 = e2
  StructureTable t(2);
  t.at(0, 0, 0) = 1;
  t.at(1, 0, 1) = 1;
  return t;
}

StructureTable bad_2d() {  // a∘a = b, b∘a = a
  StructureTable t(2);
  t.at(0, 0, 1) = 1;
  t.at(1, 0, 0) = 1;
  return t;
}

Vec random_vec(std::mt19937_64& rng, std::size_t n) {
  Vec v(n);
  for (auto& q : v) q = testing::random_rational(rng);
  return v;
}

}  // namespace

TEST_CASE("check_novikov examples") {
  StructureTable one(1);
  one.at(0, 0, 0) = 1;
  CHECK(check_novikov(one).ok);
  CHECK(check_novikov(StructureTable(3)).ok);

  CHECK_FALSE(oracle_novikov(bad_2d()));
  auto r = check_novikov(bad_2d());
  CHECK_FALSE(r.ok);
  CHECK(r.witness.size() == 3);
  CHECK_FALSE(is_zero(r.defect));
}

TEST_CASE("the 2-dim table e1∘e1=e1, e1∘e2=e2 is not right-commutative; its transpose is Novikov") {
  CHECK_FALSE(oracle_novikov(spec_2d_table()));
  auto r = check_novikov(spec_2d_table());
  CHECK_FALSE(r.ok);
  CHECK(r.identity == "right-commutativity");
  CHECK(r.witness == std::vector<std::size_t>{0, 0, 1});
  CHECK(r.defect == Vec{0, 1});

  CHECK(oracle_novikov(novikov_2d()));
  CHECK(check_novikov(novikov_2d()).ok);
}

TEST_CASE("check_lie examples") {
  CHECK(oracle_lie(sl2_table()));
  CHECK(check_lie(sl2_table()).ok);
  CHECK(check_lie(StructureTable(2)).ok);
  StructureTable sym(1);
  sym.at(0, 0, 0) = 1;
  auto r = check_lie(sym);
  CHECK_FALSE(r.ok);
  CHECK(r.identity == "antisymmetry");
  CHECK(r.witness == std::vector<std::size_t>{0, 0});
}

TEST_CASE("check_gd_compat and minus_construction") {
  CHECK(check_gd_compat(virasoro_gd()).ok);
  CHECK(check_gd_compat(current_gd(sl2_table(), {"e", "f", "h"})).ok);

  GDAlgebra v2 = minus_construction(novikov_2d());
  CHECK(v2.validated());
  CHECK(check_gd_compat(v2).ok);
  // [e1, e2] = e1∘e2 − e2∘e1 = −e2
  CHECK(v2.bracket(basis_vector(2, 0), basis_vector(2, 1)) == Vec{0, -1});

  CHECK(minus_construction(StructureTable(2)).lie().is_zero());
  GDAlgebra vir = minus_construction(virasoro_gd().novikov(), {"v"});
  CHECK(vir.lie().is_zero());

  CHECK_THROWS_AS(minus_construction(spec_2d_table()), InvalidAlgebra);
  CHECK_THROWS_AS(minus_construction(bad_2d()), InvalidAlgebra);
}

TEST_CASE("basis checks agree with identities on random vectors") {
  std::mt19937_64 rng(7);
  std::vector<StructureTable> tables = {novikov_2d(), spec_2d_table(), bad_2d(), sl2_table(), solv2_table()};
  for (const auto& t : tables) {
    bool nov = check_novikov(t).ok;
    CHECK(nov == oracle_novikov(t));
    CHECK(check_lie(t).ok == oracle_lie(t));
    for (int i = 0; i < 50 && nov; ++i) {
      Vec a = random_vec(rng, t.dim()), b = random_vec(rng, t.dim()), c = random_vec(rng, t.dim());
      auto m = [&](const Vec& x, const Vec& y) { return t.product(x, y); };
      CHECK(is_zero(m(m(a, b), c) - m(a, m(b, c)) - m(m(b, a), c) + m(b, m(a, c))));
      CHECK(is_zero(m(m(a, b), c) - m(m(a, c), b)));
    }
  }
  // minus construction on a small corpus of Novikov tables
  for (const auto& t : tables) {
    if (!check_novikov(t).ok) continue;
    GDAlgebra g = minus_construction(t);
    CHECK(check_lie(g.lie()).ok);
    CHECK(check_gd_compat(g).ok);
  }
}

TEST_CASE("validating constructor and unchecked bypass") {
  StructureTable sym(1);
  sym.at(0, 0, 0) = 1;
  CHECK_THROWS_AS(GDAlgebra({"v"}, StructureTable(1), sym), InvalidAlgebra);
  GDAlgebra broken = GDAlgebra::unchecked({"v"}, StructureTable(1), sym);
  CHECK_FALSE(broken.validated());
  CHECK(broken.index_of("v") == 0);
  CHECK_THROWS_AS(broken.index_of("w"), std::out_of_range);
}

TEST_CASE("JSON structure-constant format round-trips") {
  GDAlgebra g = minus_construction(novikov_2d());
  auto j = gd_to_json(g);
  CHECK(j["novikov"][1][0][1] == "1");
  auto back = gd_tables_from_json(j);
  CHECK(back.novikov == g.novikov());
  CHECK(back.lie == g.lie());
  CHECK(back.basis == g.basis_names());
  CHECK(gd_to_json(back.basis, back.novikov, back.lie) == j);

  CHECK_THROWS_AS(gd_tables_from_json(nlohmann::json::parse(R"({"dim": 2, "novikov": [[["1"]]]})")), ParseError);
  CHECK_THROWS_AS(gd_tables_from_json(nlohmann::json::parse(R"({"dim": 1, "novikov": [[["1/0"]]]})")), ParseError);
  CHECK_THROWS_AS(gd_tables_from_json(nlohmann::json::parse(R"([1])")), ParseError);
  auto ok = gd_tables_from_json(nlohmann::json::parse(R"({"dim": 1, "novikov": [[["1"]]]})"));
  CHECK(ok.basis == std::vector<std::string>{"v"});
  CHECK(ok.lie.is_zero());
}
