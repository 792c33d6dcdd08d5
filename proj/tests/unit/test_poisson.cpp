#include <doctest.h>

#include "gdconf/poisson.hpp"

using namespace gdconf;

namespace {

StructureTable one_dim(long c) {
  StructureTable t(1);
  t.at(0, 0, 0) = c;
  return t;
}

// e1∘e1 = e1, e2∘e1 = e2.
StructureTable novikov_2d() {
  StructureTable t(2);
  t.at(0, 0, 0) = 1;
  t.at(1, 0, 1) = 1;
  return t;
}

PoissonElem mono(std::initializer_list<int> codes, long c = 1) {
  BasisId m(codes);
  std::sort(m.begin(), m.end());
  return PoissonElem::monomial(m, Rational(c));
}

// Number of Lyndon words of length n over k letters: (1/n) Σ_{d|n} μ(d) k^{n/d}.
long necklace(long k, long n) {
  auto mobius = [](long d) {
    long r = 1;
    for (long p = 2; p * p <= d; ++p)
      if (d % p == 0) {
        d /= p;
        if (d % p == 0) return 0L;
        r = -r;
      }
    return d > 1 ? -r : r;
  };
  long s = 0;
  for (long d = 1; d <= n; ++d)
    if (n % d == 0) {
      long pw = 1;
      for (long i = 0; i < n / d; ++i) pw *= k;
      s += mobius(d) * pw;
    }
  return s / n;
}

}  // namespace

TEST_CASE("rank-one polynomial algebra") {
  auto P = poly_poisson_rank1(DerivationMode::ddv);
  auto v3 = mono({0, 0, 0});
  CHECK(P->derive(v3) == mono({0, 0}, 3));
  CHECK(P->render(P->derive(v3)) == "3·v^2");
  auto Z = poly_poisson_rank1(DerivationMode::zero);
  CHECK(Z->derive(mono({0})).is_zero());
  CHECK(check_pd_consistency(*P, virasoro_gd(), {0}).ok);
  CHECK(check_pd_consistency(*Z, abelian_gd(), {0}).ok);
  CHECK_FALSE(check_pd_consistency(*Z, virasoro_gd(), {0}).ok);
  CHECK(check_poisson_axioms(*P, 0, 5).ok);
  CHECK_THROWS_AS(poly_poisson_rank1(DerivationMode::ddv, 3)->product(v3, mono({0})), TruncationOverflow);
}

TEST_CASE("lie-poisson on sl2") {
  auto P = lie_poisson(sl2_table(), {"e", "f", "h"});
  const int e = 0, f = 1, h = 2;
  CHECK(P->bracket(mono({e}), mono({f})) == mono({h}));
  CHECK(P->bracket(mono({e, f}), mono({h})).is_zero());
  CHECK(P->bracket(mono({e}), mono({f, f})) == mono({f, h}, 2));
  CHECK(P->derive(mono({e, h})).is_zero());
  auto r = check_poisson_axioms(*P, 0, 3);
  CHECK_MESSAGE(r.ok, r.describe(*P));
  CHECK(check_pd_consistency(*P, current_gd(sl2_table(), {"e", "f", "h"}), {0, 1, 2}).ok);
  CHECK_THROWS_AS(lie_poisson(one_dim(1)), InvalidAlgebra);
}

TEST_CASE("universal envelope of v∘v = v") {
  auto P = novikov_universal(one_dim(1), {"v"}, 3, 3);
  const int v = P->code(0, 0), v1 = P->code(0, 1), v2 = P->code(0, 2), v3 = P->code(0, 3);
  CHECK(P->product(mono({v}), P->derive(mono({v}))) == mono({v}));
  CHECK(P->bracket(mono({v1}), mono({v1})).is_zero());
  // formula with n = 0, m = 2, then normal form
  CHECK(P->bracket(mono({v}), mono({v2})) == P->reduce({v1, v2}) + P->reduce({v, v3}));
  CHECK(P->reduce({v, v1}) == mono({v}));
  // v'(v' − 1)^2 = 0 is a consequence of the relations
  CHECK(P->reduce({v1, v1, v1}) == P->reduce({v1, v1}) * Rational(2) - mono({v1}));
  CHECK_FALSE(P->is_normal({v, v1}));
  auto probe = P->rewrite_probe();
  CHECK(probe.overlaps_checked > 0);
  CHECK_FALSE(probe.confluent);
  CHECK(P->completion_stable());
  CHECK(probe.witness.rfind("v·v^(1)·v^(2)", 0) == 0);

  auto r = check_poisson_axioms(*P, 3, 3);
  CHECK_MESSAGE(r.ok, r.describe(*P));
  CHECK(r.tuples_checked > 100);
  CHECK(check_pd_consistency(*P, virasoro_gd(), {v}).ok);
  CHECK_THROWS_AS(P->derive(mono({v3})), TruncationOverflow);
}

TEST_CASE("bracket is well defined on normal forms") {
  for (auto table : {one_dim(1), novikov_2d()}) {
    auto P = novikov_universal(table, {}, 3, 4);
    const int n = P->num_generators();
    std::size_t checked = 0;
    for (int a = 0; a < n; ++a)
      for (int b = a; b < n; ++b)
        for (int c = 0; c < n; ++c) {
          BasisId x{a, b}, y{c};
          try {
            CHECK(P->free_bracket(x, y) == P->bracket(P->reduce(x), P->reduce(y)));
            ++checked;
          } catch (const TruncationOverflow&) {
          }
        }
    CHECK(checked > 20);
  }
}

TEST_CASE("normal forms agree with a larger order bound") {
  for (auto table : {one_dim(1), novikov_2d()}) {
    NovikovEnvelope P(table, {}, 3, 3), Q(table, {}, 4, 3);
    CHECK(P.completion_stable());
    CHECK(Q.completion_stable());
    std::size_t checked = 0;
    for (int a = 0; a < P.num_generators(); ++a)
      for (int b = a; b < P.num_generators(); ++b)
        for (int c = b; c < P.num_generators(); ++c) {
          for (BasisId m : {BasisId{a, b}, BasisId{a, b, c}}) {
            CHECK(P.is_normal(m) == Q.is_normal(m));
            bool p_over = false, q_over = false;
            PoissonElem x, y;
            try { x = P.reduce(m); } catch (const TruncationOverflow&) { p_over = true; }
            try { y = Q.reduce(m); } catch (const TruncationOverflow&) { q_over = true; }
            CHECK(p_over == q_over);
            if (!p_over && !q_over) CHECK(Q.product(x, PoissonElem::monomial({})) == y);
            ++checked;
          }
        }
    CHECK(checked > 20);
  }
}

TEST_CASE("universal envelope of a two-dimensional Novikov algebra") {
  auto P = novikov_universal(novikov_2d(), {"e1", "e2"}, 3, 3);
  auto r = check_poisson_axioms(*P, 2, 3);
  CHECK_MESSAGE(r.ok, r.describe(*P));
  auto V = minus_construction(novikov_2d(), {"e1", "e2"});
  CHECK(check_pd_consistency(*P, V, {P->code(0, 0), P->code(1, 0)}).ok);
  StructureTable bad(2);
  bad.at(0, 0, 0) = 1;
  bad.at(0, 1, 1) = 1;
  CHECK_THROWS_AS(novikov_universal(bad, {}, 2, 2), InvalidAlgebra);
}

TEST_CASE("free Lie generators match the necklace count") {
  FreePoissonRank1 P(3, 4);
  std::map<std::size_t, long> by_len;
  for (int g = 0; g < P.num_generators(); ++g) ++by_len[P.word(g).size()];
  for (long n = 1; n <= 4; ++n) CHECK(by_len[static_cast<std::size_t>(n)] == necklace(4, n));
}

TEST_CASE("free differential poisson algebra") {
  auto P = free_pd_quotient_rank1(3, 3);
  auto r = check_poisson_axioms(*P, 2, 3);
  CHECK_MESSAGE(r.ok, r.describe(*P));
  auto v = P->generator(P->letter(0)), v1 = P->generator(P->letter(1)), v3 = P->generator(P->letter(3));
  CHECK(P->render(P->bracket(v1, v)) == "-{v, v^(1)}");
  CHECK(P->derive(P->bracket(v, v1)) == P->bracket(v, P->generator(P->letter(2))));
  CHECK_THROWS_AS(P->derive(v3), TruncationOverflow);
}

TEST_CASE("membership in the ideal generated by v·v'") {
  auto P = free_pd_quotient_rank1(6, 4);
  auto v = P->generator(P->letter(0));
  auto vd = [&](int n) { return P->generator(P->letter(n)); };
  CHECK(P->ideal_member(P->product(v, vd(1))).status == Membership::member);
  CHECK(P->ideal_member(v).status == Membership::not_member);
  CHECK(P->ideal_member(vd(1)).status == Membership::not_member);
  CHECK(P->ideal_member(P->product(v, v)).status == Membership::not_member);
  CHECK(P->ideal_member(P->product(P->bracket(v, vd(3)), v)).status == Membership::member);
  CHECK(P->ideal_member(PoissonElem{}).status == Membership::member);
  // the ideal is differential
  auto g = P->product(P->product(v, vd(1)), vd(2));
  CHECK(P->ideal_member(P->derive(g)).status == Membership::member);
  CHECK(P->ideal_member(P->derive(P->derive(P->product(v, vd(1))))).status == Membership::member);
  // v'·v' alone is not a consequence
  CHECK(P->ideal_member(P->product(vd(1), vd(1))).status == Membership::not_member);
}

TEST_CASE("{v, f}·v certificate at small bounds") {
  FreePoissonRank1 nested(4, 4), sweep(3, 4);
  Lemma2Options opts;
  opts.base_k_max = 3;
  opts.nest_k_max = 2;
  opts.f_order_bound = 2;
  opts.f_degree_bound = 2;
  auto rep = lemma2_certificate(nested, sweep, opts);
  CHECK(rep.ok());
  CHECK(rep.items.size() == 4 + 3 + 9);
  CHECK(rep.corollary_checked > 5);
}
