#include "gdconf/properties.hpp"

#include "gdconf/cend.hpp"
#include "gdconf/conformal.hpp"
#include "gdconf/weyl.hpp"

#include <random>

namespace gdconf {

namespace {

const MPoly kT = MPoly::var(Var::T);
const MPoly kLam = MPoly::var(Var::Lambda);
const MPoly kMu = MPoly::var(Var::Mu);

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(1, 4), den(1, 3), sign(0, 1);
  Rational q(sign(rng) ? num(rng) : -num(rng), den(rng));
  q.canonicalize();
  return q;
}

MPoly random_poly(std::mt19937_64& rng, int max_terms, int max_exp) {
  std::uniform_int_distribution<int> terms(1, max_terms), exp(0, max_exp);
  MPoly p;
  int n = terms(rng);
  for (int t = 0; t < n; ++t) {
    Exponents e{};
    e[static_cast<std::size_t>(Var::T)] = static_cast<std::uint16_t>(exp(rng));
    e[static_cast<std::size_t>(Var::X)] = static_cast<std::uint16_t>(exp(rng));
    p += MPoly::monomial(e, random_rational(rng));
  }
  return p;
}

RawWord random_word(std::mt19937_64& rng, const DiffPoissonAlgebra& P, const std::vector<BasisId>& monos, int len) {
  std::uniform_int_distribution<int> kind(0, 2), gen(0, P.num_generators() - 1);
  std::uniform_int_distribution<std::size_t> mono(0, monos.size() - 1);
  RawWord w;
  for (int i = 0; i < len; ++i) {
    switch (kind(rng)) {
      case 0:
        w.push_back(Letter{Letter::ad, {gen(rng)}});
        break;
      case 1:
        w.push_back(Letter{Letter::l, monos[mono(rng)]});
        break;
      default:
        w.push_back(Letter{Letter::d, {}});
    }
  }
  return w;
}

// Nonzero random operator; redraws words that normalize to 0.
Operator random_operator(std::mt19937_64& rng, const CendAlgebra& C, const std::vector<BasisId>& monos) {
  std::uniform_int_distribution<int> len(0, 2), terms(1, 2);
  while (true) {
    Operator out;
    int n = terms(rng);
    for (int i = 0; i < n; ++i)
      out += C.normalize(random_word(rng, C.poisson(), monos, len(rng))) * random_poly(rng, 2, 1);
    if (!out.is_zero()) return out;
  }
}

}  // namespace

Report axiom_report(const GDTables& t) {
  Stopwatch sw;
  Report r;
  r.check = "axioms";
  GDAlgebra g = GDAlgebra::unchecked(t.basis, t.novikov, t.lie);
  auto record = [&](const CheckReport& c, const std::string& name) {
    if (c.ok) {
      r.note(name + ": ok (" + std::to_string(c.tuples_checked) + " tuples)");
    } else {
      r.fail(name + ": " + c.describe(t.basis), c.to_json(t.basis));
    }
    return c.ok;
  };
  bool gd_ok = record(check_novikov(t.novikov), "novikov");
  gd_ok = record(check_lie(t.lie), "lie") && gd_ok;
  gd_ok = record(check_gd_compat(g), "gd-compat") && gd_ok;
  ConformalReport conf = check_conformal_axioms(g);
  if (conf.ok) {
    r.note("conformal axioms: ok (" + std::to_string(conf.tuples_checked) + " tuples)");
  } else {
    std::vector<std::string> names;
    for (auto i : conf.witness) names.push_back(t.basis[i]);
    r.fail("conformal axioms: " + conf.describe(g), {{"identity", conf.identity}, {"witness", names}});
  }
  r.note(std::string("conformal axioms agree with the GD checks: ") + (conf.ok == gd_ok ? "yes" : "no"));
  r.details["gd_ok"] = gd_ok;
  r.details["conformal_ok"] = conf.ok;
  r.details["agree"] = conf.ok == gd_ok;
  r.seconds = sw.seconds();
  return r;
}

Report bracket_report(const GDAlgebra& V, const ConfElem& a, const ConfElem& b, std::optional<unsigned> n) {
  Stopwatch sw;
  Report r;
  r.check = n ? "nprod" : "bracket";
  ConfBracketValue br = quadratic_bracket(V, a, b);
  std::size_t N = locality_N(V, a, b);
  nlohmann::json products = nlohmann::json::array();
  auto product = [&](unsigned k) {
    std::string value = render(V, n_product(V, a, b, k));
    r.note("(a (" + std::to_string(k) + ") b) = " + value);
    products.push_back(value);
  };
  if (n) {
    product(*n);
  } else {
    r.note("[a λ b] = " + render(V, br));
    for (std::size_t k = 0; k < N; ++k) product(static_cast<unsigned>(k));
    r.note("N = " + std::to_string(N));
  }
  r.details = {{"a", render(V, a)}, {"b", render(V, b)}, {"bracket", render(V, br)}, {"n_products", products}, {"N", N}};
  r.seconds = sw.seconds();
  return r;
}

Report conformal_property_report(const std::vector<NamedAlgebra>& algebras) {
  Stopwatch sw;
  Report rep;
  rep.check = "conformal-axioms";
  for (const auto& [name, gd] : algebras) {
    ConformalReport r = check_conformal_axioms(gd);
    if (r.ok)
      rep.note(name + ": skew-symmetry and Jacobi hold on " + std::to_string(r.tuples_checked) + " tuples");
    else
      rep.fail(name + ": " + r.describe(gd), name);
  }
  rep.seconds = sw.seconds();
  return rep;
}

Report associativity_report(std::uint64_t seed, int triples) {
  Stopwatch sw;
  Report rep;
  rep.check = "operator-associativity";
  rep.bounds = {{"seed", seed}, {"triples", triples}};
  std::mt19937_64 rng(seed);
  std::vector<std::pair<std::string, PoissonPtr>> models{{"k[v]", poly_poisson_rank1(DerivationMode::ddv, 10)},
                                                         {"S(sl2)", lie_poisson(sl2_table(), {"e", "f", "h"}, 6)}};
  for (const auto& [name, P] : models) {
    CendAlgebra C(P);
    auto monos = P->enumerate_basis(1, 1);
    int ok = 0;
    for (int t = 0; t < triples; ++t) {
      Operator A = random_operator(rng, C, monos), B = random_operator(rng, C, monos),
               D = random_operator(rng, C, monos);
      Operator lhs = C.lambda_product(C.lambda_product(A, B, kLam), D, kLam + kMu);
      Operator rhs = C.lambda_product(A, C.lambda_product(B, D, kMu), kLam);
      ModuleElem u = ModuleElem::from(PoissonElem::monomial(monos.back()), kT + MPoly(1));
      bool module = C.act(C.lambda_product(A, B), u, kMu) == C.act(A, C.act(B, u, kMu - kLam), kLam);
      if (lhs == rhs && module)
        ++ok;
      else
        rep.fail(name + ": triple " + std::to_string(t) + " fails", {{"model", name}, {"triple", t}});
    }
    rep.note(name + ": " + std::to_string(ok) + "/" + std::to_string(triples) + " nonzero triples associative");
  }
  rep.seconds = sw.seconds();
  return rep;
}

Report confluence_report(std::uint64_t seed, int words) {
  Stopwatch sw;
  Report rep;
  rep.check = "rewriting-confluence";
  rep.bounds = {{"seed", seed}, {"words", words}, {"word_length", 4}};
  std::mt19937_64 rng(seed);
  StructureTable vir(1);
  vir.at(0, 0, 0) = 1;
  std::vector<std::pair<std::string, PoissonPtr>> models{
      {"S(sl2)", lie_poisson(sl2_table(), {"e", "f", "h"}, 8)},
      {"universal envelope of v∘v = v", novikov_universal(vir, {"v"}, 3, 4)},
      {"free quotient", free_pd_quotient_rank1(5, 6)}};
  nlohmann::json counts = nlohmann::json::object();
  for (const auto& [name, P] : models) {
    CendAlgebra C(P);
    auto monos = P->enumerate_basis(2, 2);
    int agreed = 0, overflow = 0;
    for (int t = 0; t < words; ++t) {
      RawWord w = random_word(rng, *P, monos, 4);
      try {
        if (C.normalize(w, Strategy::leftmost) == C.normalize(w, Strategy::rightmost))
          ++agreed;
        else
          rep.fail(name + ": word " + std::to_string(t) + " has two normal forms", {{"model", name}, {"word", t}});
      } catch (const TruncationOverflow&) {
        ++overflow;
      }
    }
    rep.note(name + ": " + std::to_string(agreed) + " words agree, " + std::to_string(overflow) +
             " leave the truncation");
    counts[name] = {{"agreed", agreed}, {"overflow", overflow}};
  }
  rep.details["counts"] = counts;
  rep.seconds = sw.seconds();
  return rep;
}

Report weyl_agreement_report(std::uint64_t seed, int expressions) {
  Stopwatch sw;
  Report rep;
  rep.check = "weyl-vs-generic";
  rep.bounds = {{"seed", seed}, {"expressions", expressions}};
  CendAlgebra C(poly_poisson_rank1(DerivationMode::ddv, 32));
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pw(0, 3);
  int ok = 0;
  for (int t = 0; t < expressions; ++t) {
    Weyl A, B;
    for (int k = 0; k < 2; ++k) {
      A.add(pw(rng), pw(rng), random_poly(rng, 2, 1));
      B.add(pw(rng), pw(rng), random_poly(rng, 2, 1));
    }
    Operator a = to_operator(A), b = to_operator(B);
    ModuleElem u = ModuleElem::from(PoissonElem::monomial({0, 0}), kT);
    VPoly uw{{2, kT}};
    bool agree = to_operator(A * B) == C.mul(a, b) && to_operator(weyl_lambda_product(A, B)) == C.lambda_product(a, b) &&
                 to_weyl(a) == A;
    ModuleElem acted = C.act(a, u);
    ModuleElem from_weyl;
    for (const auto& [k, h] : weyl_act(A, uw)) from_weyl += ModuleElem::from(PoissonElem::monomial(BasisId(k, 0)), h);
    agree = agree && acted == from_weyl;
    if (agree)
      ++ok;
    else
      rep.fail("expression " + std::to_string(t) + " disagrees", t);
  }
  rep.note(std::to_string(ok) + "/" + std::to_string(expressions) +
           " products, λ-products and actions agree between the Weyl backend and the rewriter");
  rep.seconds = sw.seconds();
  return rep;
}

}  // namespace gdconf
