#include "gdconf/envelope.hpp"

#include <algorithm>
#include <map>
#include <memory>

namespace gdconf {

namespace {

// Same operator with subscripts re-coded in another free model.
Operator recode(const Operator& A, const FreePoissonRank1& from, const FreePoissonRank1& to) {
  Operator out;
  for (const auto& [w, c] : A.terms()) {
    OpWord nw;
    nw.d = w.d;
    for (int g : w.ad) nw.ad.push_back(to.code_of(from.word(g)));
    for (int g : w.l) nw.l.push_back(to.code_of(from.word(g)));
    std::sort(nw.ad.begin(), nw.ad.end());
    std::sort(nw.l.begin(), nw.l.end());
    out.add(nw, c);
  }
  return out;
}

PoissonElem recode(const PoissonElem& a, const FreePoissonRank1& from, const FreePoissonRank1& to) {
  PoissonElem out;
  for (const auto& [m, c] : a.terms()) {
    BasisId nm;
    for (int g : m) nm.push_back(to.code_of(from.word(g)));
    std::sort(nm.begin(), nm.end());
    out.add(nm, c);
  }
  return out;
}

struct Ambient {
  std::shared_ptr<const FreePoissonRank1> P;
  std::unique_ptr<CendAlgebra> C;
  Operator phi;
};

}  // namespace

Report abelian_kernel_witness(const AbelianOptions& opts) {
  Stopwatch sw;
  Report rep;
  rep.check = "abelian-kernel";
  rep.bounds = {{"order_bound", opts.order_bound},
                {"degree_bound", opts.degree_bound},
                {"image_order_cap", opts.image_order_cap}};
  if (opts.order_bound < 2 || opts.degree_bound < 3) {
    rep.merge_status(Status::overflow);
    rep.note("truncation-overflow: the witness needs order bound ≥ 2 and degree bound ≥ 3");
    rep.seconds = sw.seconds();
    return rep;
  }
  EmbeddingContext ctx = abelian_context(opts.order_bound, opts.degree_bound);
  const auto& P = static_cast<const FreePoissonRank1&>(*ctx.poisson);
  const CendAlgebra& C = ctx.C();
  const MPoly x = MPoly::var(Var::X);

  const Operator& tv = ctx.tau_images[0];
  Operator phi;
  try {
    phi = C.n_product(tv, C.n_product(tv, tv, 2), 0);
  } catch (const TruncationOverflow& e) {
    rep.merge_status(Status::overflow);
    rep.note(std::string("truncation-overflow: ") + e.what());
    rep.seconds = sw.seconds();
    return rep;
  }
  rep.note("tau(v) = " + C.render(tv));
  rep.note("phi(u) = tau(v) (0) (tau(v) (2) tau(v)) = " + C.render(phi));
  rep.details["phi"] = C.render(phi);
  if (phi.is_zero()) rep.fail("phi(u) is the zero word combination");

  // −2 Ad(v) L(v²) (D+id)² − 2x L(v′v²) (D+id)², up to words L(m) with m ∈ I_V
  const PoissonElem v = P.generator(P.letter(0)), v1 = P.generator(P.letter(1));
  Operator D1 = C.D() + C.id();
  Operator D2 = C.mul(D1, D1);
  PoissonElem vv = P.product(v, v);
  Operator displayed = C.mul(C.mul(C.Ad(v), C.L(vv)), D2) * MPoly(-2);
  displayed += C.mul(C.L(P.product(v1, vv)), D2) * (x * MPoly(-2));
  Operator diff = phi - displayed;
  bool displayed_ok = true;
  for (const auto& [w, c] : diff.terms())
    if (w.l.empty() || P.ideal_member(PoissonElem::monomial(w.l)).status != Membership::member) displayed_ok = false;
  rep.note("phi(u) - (" + C.render(displayed) + ") = " + C.render(diff));
  if (displayed_ok)
    rep.note("phi(u) agrees with the displayed computation up to words L(m), m in I_V");
  else
    rep.fail("phi(u) differs from the displayed computation outside L(I_V)");

  // phi(u)_μ v against −2{v, v″ + 2v′ + v}·v²
  if (opts.order_bound >= 2) {
    PoissonElem g = P.generator(P.letter(2)) + v1 * Rational(2) + v;
    PoissonElem expected = P.product(P.bracket(v, g), vv) * Rational(-2);
    ModuleElem img = C.act(phi, ModuleElem::from(v));
    PoissonElem constant = components(img)[Exponents{}];
    rep.note("phi(u)_μ v = " + C.render(img));
    rep.details["image_of_v"] = C.render(img);
    auto st = P.ideal_member(constant - expected).status;
    if (st != Membership::member) rep.fail("phi(u)_μ v differs from -2{v, v'' + 2v' + v}·v^2 outside I_V");
  }

  // every basis f: each (T, μ)-component of phi(u)_μ f lies in I_V
  std::map<int, Ambient> ambients;
  auto ambient_for = [&](int cap) -> Ambient& {
    auto it = ambients.find(cap);
    if (it != ambients.end()) return it->second;
    Ambient a;
    a.P = std::make_shared<const FreePoissonRank1>(opts.order_bound + 2, opts.degree_bound + 3, cap);
    a.C = std::make_unique<CendAlgebra>(a.P);
    a.phi = recode(phi, P, *a.P);
    return ambients.emplace(cap, std::move(a)).first->second;
  };
  std::size_t checked = 0, in_model = 0, beyond = 0;
  nlohmann::json failures = nlohmann::json::array();
  for (const BasisId& f : P.enumerate_basis()) {
    const auto [count, order] = P.bidegree(f);
    if (order + 3 > opts.image_order_cap) {
      ++beyond;
      continue;
    }
    bool fits = true;
    try {
      (void)C.act(phi, ModuleElem::from(PoissonElem::monomial(f)));
    } catch (const TruncationOverflow&) {
      fits = false;
    }
    Ambient& amb = ambient_for(order + 3);
    ModuleElem img = amb.C->act(amb.phi, ModuleElem::from(recode(PoissonElem::monomial(f), P, *amb.P)));
    bool member = true;
    for (const auto& [e, part] : components(img))
      if (amb.P->ideal_member(part).status != Membership::member) member = false;
    ++checked;
    if (fits) ++in_model;
    if (!member) {
      failures.push_back(P.render(f));
      rep.fail("phi(u)_μ f not in I_V for f = " + P.render(f), P.render(f));
    }
  }
  rep.note("basis f checked: " + std::to_string(checked) + " (" + std::to_string(in_model) +
           " with image inside the model, the rest in graded ambient models); beyond the image order cap: " +
           std::to_string(beyond));
  rep.note("u = v (0) (v (2) v) is a basis word of the free commutative envelope U(L(V); 3), so ker phi != 0");
  rep.details["checked"] = checked;
  rep.details["checked_in_model"] = in_model;
  rep.details["beyond_cap"] = beyond;
  rep.details["failures"] = failures;
  rep.seconds = sw.seconds();
  return rep;
}

Report lemma2_report(const Lemma2Options& opts) {
  Stopwatch sw;
  Report rep;
  rep.check = "lemma2";
  rep.bounds = {{"base_k_max", opts.base_k_max},         {"nest_depth", opts.nest_depth},
                {"nest_k_max", opts.nest_k_max},         {"order_bound", opts.f_order_bound},
                {"degree_bound", opts.f_degree_bound}};
  if (opts.base_k_max < 0 || opts.nest_depth < 0 || opts.nest_k_max < 0 || opts.f_order_bound < 0 ||
      opts.f_degree_bound < 1) {
    rep.status = Status::overflow;
    rep.note("bounds too small");
    rep.seconds = sw.seconds();
    return rep;
  }
  // {v, f}·v has one more letter and one more factor than f
  FreePoissonRank1 nested(std::max(opts.base_k_max + 1, opts.nest_k_max), opts.nest_depth + 2);
  FreePoissonRank1 sweep(opts.f_order_bound, opts.f_degree_bound + 2);
  Lemma2Report l2 = lemma2_certificate(nested, sweep, opts);

  nlohmann::json items = nlohmann::json::array();
  for (const auto& it : l2.items) {
    items.push_back({{"label", it.label}, {"value", it.value}, {"membership", to_string(it.status)}});
    if (it.status == Membership::member)
      rep.note(it.label + " in I_V");
    else if (it.status == Membership::not_member)
      rep.fail(it.label + " = " + it.value + " not in I_V", it.label);
    else {
      rep.merge_status(Status::inconclusive);
      rep.note(it.label + ": inconclusive");
    }
  }
  for (const auto& it : l2.corollary_failures) {
    if (it.status == Membership::not_member)
      rep.fail(it.label + " not in I_V", it.label);
    else
      rep.merge_status(Status::inconclusive);
  }
  if (l2.corollary_skipped > 0) rep.merge_status(Status::inconclusive);
  rep.note("{v, f}·v in I_V for " + std::to_string(l2.corollary_checked) + " basis f; skipped " +
           std::to_string(l2.corollary_skipped));
  rep.details["items"] = items;
  rep.details["corollary_checked"] = l2.corollary_checked;
  rep.details["corollary_skipped"] = l2.corollary_skipped;
  rep.seconds = sw.seconds();
  return rep;
}

}  // namespace gdconf
