#include "gdconf/envelope.hpp"
#include "gdconf/parse.hpp"
#include "gdconf/properties.hpp"

#include <doctest.h>

#include <functional>

using namespace gdconf;

namespace {
GDTables fixture(const std::string& name) { return load_gd_tables(GDCONF_FIXTURE_DIR "/" + name + ".json"); }

nlohmann::json without_timing(const Report& r) {
  auto j = r.to_json();
  j.erase("timing");
  return j;
}
}  // namespace

TEST_CASE("axiom report") {
  Report ok = axiom_report(fixture("cur-sl2"));
  CHECK(ok.ok());
  CHECK(ok.details["agree"] == true);
  Report bad = axiom_report(fixture("broken-table"));
  CHECK(bad.status == Status::fail);
  CHECK(bad.details["agree"] == true);
  REQUIRE(bad.witnesses.size() == 2);
  CHECK(bad.witnesses[0]["witness"] == nlohmann::json{"e1", "e1", "e2"});
}

TEST_CASE("bracket report") {
  GDAlgebra vir = virasoro_gd();
  Report r = bracket_report(vir, parse_elem(vir, "T*v"), parse_elem(vir, "v"));
  CHECK(r.details["bracket"] == "(-Tλ-2λ^2)·v");
  CHECK(r.details["N"] == 3);
  Report one = bracket_report(vir, parse_elem(vir, "v"), parse_elem(vir, "v"), 0u);
  CHECK(one.details["n_products"] == nlohmann::json{"T·v"});
}

TEST_CASE("seeded suites are reproducible and round-trip") {
  for (auto run : {std::function<Report(std::uint64_t)>([](std::uint64_t s) { return associativity_report(s, 20); }),
                   std::function<Report(std::uint64_t)>([](std::uint64_t s) { return confluence_report(s, 40); }),
                   std::function<Report(std::uint64_t)>([](std::uint64_t s) { return weyl_agreement_report(s, 20); })}) {
    Report a = run(7), b = run(7);
    CHECK(a.ok());
    CHECK(without_timing(a) == without_timing(b));
    CHECK(nlohmann::json::parse(a.to_json().dump()) == a.to_json());
  }
}

TEST_CASE("free model residual vanishes modulo the ideal") {
  auto ctx = abelian_context(3, 3);
  Operator r = lemma1_residual(ctx, 0, 0);
  CHECK_FALSE(r.is_zero());
  IdealCheck ic = acts_into_ideal(ctx, r);
  CHECK(ic.ok());
  CHECK(lemma1_report(ctx).ok());
  // a nonzero operator that does not kill P modulo I_V
  CHECK_FALSE(acts_into_ideal(ctx, ctx.tau_images[0]).ok());
}

TEST_CASE("{v, f}·v report") {
  Lemma2Options opts;
  opts.base_k_max = 3;
  opts.nest_k_max = 2;
  opts.f_order_bound = 3;
  opts.f_degree_bound = 2;
  Report r = lemma2_report(opts);
  CHECK(r.ok());
  CHECK(r.details["corollary_skipped"] == 0);
  opts.f_degree_bound = 0;
  CHECK(lemma2_report(opts).status == Status::overflow);
}
