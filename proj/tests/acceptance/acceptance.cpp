#include "gdconf/envelope.hpp"
#include "gdconf/properties.hpp"
#include "gdconf/virasoro.hpp"

#include <CLI11.hpp>

#include <functional>
#include <iomanip>
#include <iostream>
#include <set>

using namespace gdconf;

namespace {

std::string fixture_dir = GDCONF_FIXTURE_DIR;
std::string golden_dir = GDCONF_GOLDEN_DIR;
bool verbose = false;

struct Outcome {
  bool pass = true;
  std::vector<std::string> lines;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      lines.push_back("FAIL " + what);
    } else if (verbose) {
      lines.push_back(what);
    }
  }
  void take(const Report& r) {
    require(r.ok(), r.check + " [" + to_string(r.status) + "]");
    if (!r.ok() || verbose)
      for (const auto& l : r.lines) lines.push_back("  " + l);
  }
};

GDTables fixture(const std::string& name) { return load_gd_tables(fixture_dir + "/" + name + ".json"); }

GDAlgebra fixture_gd(const std::string& name) {
  auto t = fixture(name);
  return GDAlgebra(t.basis, t.novikov, t.lie);
}

const std::vector<std::string> kPositive{"virasoro", "abelian", "cur-sl2", "cur-solv2", "novikov-2d"};
const std::vector<std::string> kNegative{"broken-table", "broken-jacobi", "non-novikov-2d"};

StructureTable rank_one(long c) {
  StructureTable t(1);
  t.at(0, 0, 0) = c;
  return t;
}

Outcome axiom_suite() {
  Outcome o;
  auto verdict = [&](const std::string& name, bool expect_ok) {
    GDTables t = fixture(name);
    GDAlgebra g = GDAlgebra::unchecked(t.basis, t.novikov, t.lie);
    CheckReport checks[] = {check_novikov(t.novikov), check_lie(t.lie), check_gd_compat(g)};
    bool gd_ok = true;
    for (const auto& c : checks) {
      gd_ok = gd_ok && c.ok;
      if (!c.ok) {
        o.require(!c.witness.empty() && !is_zero(c.defect), name + " witness for " + c.identity);
        if (verbose) o.lines.push_back("  " + name + ": " + c.describe(t.basis));
      }
    }
    o.require(gd_ok == expect_ok, name + (expect_ok ? " passes" : " fails") + " the GD checks");
    bool conf_ok = check_conformal_axioms(g).ok;
    o.require(conf_ok == gd_ok, name + ": conformal axioms agree with the GD checks");
  };
  for (const auto& n : kPositive) verdict(n, true);
  for (const auto& n : kNegative) verdict(n, false);
  bool malformed = false;
  try {
    fixture("malformed");
  } catch (const ParseError&) {
    malformed = true;
  }
  o.require(malformed, "malformed fixture is a parse error");
  return o;
}

Outcome virasoro_bracket() {
  Outcome o;
  GDAlgebra V = fixture_gd("virasoro");
  ConfElem v = basis_elem(V, 0);
  o.require(render(V, quadratic_bracket(V, v, v)) == "(T+2λ)·v", "[v λ v] = (T+2λ)·v");
  o.require(n_product(V, v, v, 0) == ConfElem{{MPoly::var(Var::T)}}, "(v (0) v) = T·v");
  o.require(n_product(V, v, v, 1) == ConfElem{{MPoly(2)}}, "(v (1) v) = 2·v");
  for (unsigned n = 2; n < 6; ++n)
    o.require(n_product(V, v, v, n).is_zero(), "(v (" + std::to_string(n) + ") v) = 0");
  o.require(locality_N(V, v, v) == 2, "N = 2");
  return o;
}

std::vector<EmbeddingContext> residual_contexts() {
  std::vector<EmbeddingContext> out;
  out.push_back(virasoro_context());
  out.push_back(current_context(fixture_gd("cur-sl2")));
  out.push_back(novikov_context(minus_construction(rank_one(1), {"v"}), 4, 4));
  return out;
}

Outcome lemma1() {
  Outcome o;
  for (const auto& ctx : residual_contexts()) {
    std::size_t zero = 0;
    for (std::size_t a = 0; a < ctx.dim(); ++a)
      for (std::size_t b = 0; b < ctx.dim(); ++b)
        if (lemma1_residual(ctx, a, b).is_zero()) ++zero;
    o.require(zero == ctx.dim() * ctx.dim(), ctx.poisson_kind + ": " + std::to_string(zero) + "/" +
                                                 std::to_string(ctx.dim() * ctx.dim()) + " residuals are empty");
  }
  return o;
}

Outcome locality() {
  Outcome o;
  auto ctxs = residual_contexts();
  ctxs.push_back(current_context(fixture_gd("cur-solv2")));
  ctxs.push_back(novikov_context(fixture_gd("novikov-2d"), 3, 3));
  for (const auto& ctx : ctxs) o.take(locality_report(ctx));
  return o;
}

Outcome example_vir() {
  Outcome o;
  o.take(vir_basis_report(5, 5, 5));
  o.take(vir_independence(5, 5, 5));
  o.take(vir_dependence());
  return o;
}

Outcome adjoint() {
  Outcome o;
  o.take(vir_adjoint_presentation(5, 5, 5));
  return o;
}

Outcome abelian() {
  Outcome o;
  Report r = abelian_kernel_witness();
  o.take(r);
  o.lines.push_back("basis f checked: " + r.details["checked"].dump() + " (" + r.details["checked_in_model"].dump() +
                    " inside the model); beyond the image order cap: " + r.details["beyond_cap"].dump());
  return o;
}

Outcome lemma2() {
  Outcome o;
  o.take(lemma2_report());
  return o;
}

Outcome properties(std::uint64_t seed) {
  Outcome o;
  std::vector<NamedAlgebra> algebras;
  for (const auto& n : kPositive) algebras.push_back({n, fixture_gd(n)});
  o.take(conformal_property_report(algebras));
  o.take(associativity_report(seed, 100));
  Report conf = confluence_report(seed, 200);
  o.take(conf);
  o.require(conf.details["counts"]["S(sl2)"]["agreed"] == 200, "all 200 words normalize over S(sl2)");
  o.take(weyl_agreement_report(seed, 100));
  return o;
}

Outcome lincomb() {
  Outcome o;
  Report r = ci_report(4, golden_dir + "/lincomb_ci.json");
  o.take(r);
  bool jk = r.details.value("jk_reading_matches", false);
  bool ji = r.details.value("ji_reading_matches_where_defined", false);
  o.lines.push_back(std::string("printed formula, product over j_k: ") + (jk ? "matches" : "does not match"));
  o.lines.push_back(std::string("printed formula, product over j_i: ") + (ji ? "matches" : "does not match"));
  return o;
}

struct Criterion {
  int id;
  std::string title;
  double limit;  // seconds, 0 = none
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::uint64_t seed = 1;
  std::set<int> only, expect_fail;
  app.add_option("--seed", seed);
  app.add_option("--only", only, "run these criteria");
  app.add_option("--expect-fail", expect_fail, "criteria known to fail");
  app.add_option("--fixtures", fixture_dir);
  app.add_option("--golden", golden_dir);
  app.add_flag("-v,--verbose", verbose);
  CLI11_PARSE(app, argc, argv);

  std::vector<Criterion> criteria{
      {1, "axiom suite on fixtures", 5, axiom_suite},
      {2, "Virasoro bracket", 0, virasoro_bracket},
      {3, "tau bracket residuals", 60, lemma1},
      {4, "locality of tau images", 0, locality},
      {5, "Virasoro envelope images, independence, dependence", 60, example_vir},
      {6, "adjoint presentation", 0, adjoint},
      {7, "abelian kernel witness", 120, abelian},
      {8, "{v, f}·v in I_V certificates", 0, lemma2},
      {9, "property suites", 0, [&] { return properties(seed); }},
      {10, "c_i coefficients", 0, lincomb},
  };

  bool as_expected = true;
  for (const auto& c : criteria) {
    if (!only.empty() && !only.count(c.id)) continue;
    Stopwatch sw;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.lines.push_back(std::string("exception: ") + e.what());
    }
    double t = sw.seconds();
    if (c.limit > 0 && t > c.limit) {
      o.pass = false;
      o.lines.push_back("runtime over the " + std::to_string(static_cast<int>(c.limit)) + " s limit");
    }
    bool xfail = expect_fail.count(c.id) > 0;
    if (o.pass == xfail) as_expected = false;
    std::cout << "criterion " << std::setw(2) << c.id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << c.title << "  ("
              << std::fixed << std::setprecision(2) << t << " s)" << (xfail ? (o.pass ? "  unexpected pass" : "  expected")
                                                                                : "")
              << "\n";
    for (const auto& l : o.lines) std::cout << "    " << l << "\n";
  }
  return as_expected ? 0 : 1;
}
