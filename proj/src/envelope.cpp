#include "gdconf/envelope.hpp"

#include <algorithm>
#include <future>
#include <random>
#include <set>
#include <sstream>

namespace gdconf {

namespace {

const MPoly kT = MPoly::var(Var::T);
const MPoly kX = MPoly::var(Var::X);
const MPoly kLam = MPoly::var(Var::Lambda);
const MPoly kMu = MPoly::var(Var::Mu);

PoissonElem embed(const EmbeddingContext& ctx, std::size_t i) {
  return ctx.poisson->generator(ctx.embedding[i]);
}

std::string name_of(const EmbeddingContext& ctx, std::size_t i) { return ctx.gd.basis_names()[i]; }

bool is_rank_one(const GDAlgebra& gd, long circ, long br) {
  return gd.dim() == 1 && gd.novikov().at(0, 0, 0) == Rational(circ) && gd.lie().at(0, 0, 0) == Rational(br);
}

bool bracket_is_commutator(const GDAlgebra& gd) {
  const std::size_t n = gd.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (gd.lie().at(i, j, k) != gd.novikov().at(i, j, k) - gd.novikov().at(j, i, k)) return false;
  return true;
}

}  // namespace

Operator tau_of(const CendAlgebra& C, const PoissonElem& a) {
  const DiffPoissonAlgebra& P = C.poisson();
  PoissonElem da = P.derive(a);
  Operator out = C.Ad(a);
  out += C.L(da) * (kX - kT);
  out -= C.mul(C.L(a), C.D() + C.id()) * kT;
  return C.reduce(out);
}

EmbeddingContext make_context(GDAlgebra gd, PoissonPtr P, std::vector<int> embedding, std::string kind,
                              CendOptions opts) {
  if (embedding.size() != gd.dim()) throw InvalidContext("embedding size differs from dim V");
  PoissonReport r = check_pd_consistency(*P, gd, embedding);
  if (!r.ok) {
    // the free model only realises V modulo I_V
    const auto* free = dynamic_cast<const FreePoissonRank1*>(P.get());
    if (free == nullptr || free->ideal_member(r.defect).status != Membership::member)
      throw InvalidContext("P^(d) does not reproduce V: " + r.describe(*P));
  }
  auto C = std::make_shared<const CendAlgebra>(P, opts);
  std::vector<Operator> images;
  for (int code : embedding) images.push_back(tau_of(*C, P->generator(code)));
  return EmbeddingContext{std::move(gd), std::move(P), std::move(embedding), std::move(C), std::move(images),
                          std::move(kind)};
}

EmbeddingContext virasoro_context(int degree_bound) {
  return make_context(virasoro_gd(), poly_poisson_rank1(DerivationMode::ddv, degree_bound), {0}, "k[v], d = d/dv");
}

EmbeddingContext current_context(const GDAlgebra& gd, int degree_bound) {
  if (!gd.novikov().is_zero()) throw InvalidContext("current envelope needs a zero Novikov product");
  std::vector<int> emb(gd.dim());
  for (std::size_t i = 0; i < gd.dim(); ++i) emb[i] = static_cast<int>(i);
  return make_context(gd, lie_poisson(gd.lie(), gd.basis_names(), degree_bound), emb, "S(g), d = 0");
}

EmbeddingContext novikov_context(const GDAlgebra& gd, int order_bound, int degree_bound) {
  if (!bracket_is_commutator(gd)) throw InvalidContext("universal envelope needs [a,b] = a∘b − b∘a");
  auto P = novikov_universal(gd.novikov(), gd.basis_names(), order_bound, degree_bound);
  std::vector<int> emb(gd.dim());
  for (std::size_t i = 0; i < gd.dim(); ++i) emb[i] = P->code(i, 0);
  return make_context(gd, P, emb, "universal envelope");
}

EmbeddingContext abelian_context(int order_bound, int degree_bound) {
  auto P = free_pd_quotient_rank1(order_bound, degree_bound);
  return make_context(abelian_gd(), P, {P->letter(0)}, "free differential Poisson modulo I_V");
}

EmbeddingContext auto_context(const GDAlgebra& gd, int order_bound, int degree_bound) {
  if (is_rank_one(gd, 1, 0)) return virasoro_context();
  if (is_rank_one(gd, 0, 0)) return abelian_context(order_bound, degree_bound);
  if (gd.novikov().is_zero()) return current_context(gd, degree_bound);
  if (bracket_is_commutator(gd)) return novikov_context(gd, order_bound, degree_bound);
  throw InvalidContext("no envelope construction for this algebra");
}

Operator tau(const EmbeddingContext& ctx, const ConfElem& w) {
  Operator out;
  for (std::size_t i = 0; i < w.coords.size(); ++i)
    if (!w.coords[i].is_zero()) out += ctx.tau_images[i] * w.coords[i];
  return out;
}

Operator lemma1_residual(const EmbeddingContext& ctx, std::size_t a, std::size_t b) {
  const CendAlgebra& C = ctx.C();
  const Operator& A = ctx.tau_images[a];
  const Operator& B = ctx.tau_images[b];
  Operator lhs = C.lambda_product(A, B, kLam);
  Operator skew = C.lambda_product(B, A, kMu).substitute({{Var::Mu, -kT - kLam}});
  ConfBracketValue br = quadratic_bracket(ctx.gd, basis_elem(ctx.gd, a), basis_elem(ctx.gd, b));
  Operator rhs;
  for (std::size_t c = 0; c < br.coords.size(); ++c)
    if (!br.coords[c].is_zero()) rhs += ctx.tau_images[c] * br.coords[c];
  return C.reduce(lhs - skew - rhs);
}

Operator expected_lambda2(const EmbeddingContext& ctx, std::size_t a, std::size_t b) {
  const CendAlgebra& C = ctx.C();
  const DiffPoissonAlgebra& P = *ctx.poisson;
  PoissonElem ab = P.product(embed(ctx, a), embed(ctx, b));
  Operator D1 = C.D() + C.id();
  Operator out = -C.mul(C.L(P.derive(ab)), D1);
  out -= C.mul(C.mul(C.L(ab), D1), D1);
  return C.reduce(out);
}

InjectivityResult injectivity_probe(const EmbeddingContext& ctx, const ConfElem& w) {
  InjectivityResult r;
  if (w.is_zero()) return r;
  const CendAlgebra& C = ctx.C();
  Operator A = tau(ctx, w);
  std::vector<PoissonElem> probes{ctx.poisson->unit()};
  for (std::size_t i = 0; i < ctx.dim(); ++i) probes.push_back(embed(ctx, i));
  for (const auto& u : probes) {
    ModuleElem image = C.act(A, ModuleElem::from(u));
    if (!image.is_zero()) {
      r.zero = false;
      r.witness = "on " + ctx.poisson->render(u) + ": " + C.render(image);
      return r;
    }
  }
  return r;
}

std::vector<SpanItem> envelope_span(const EmbeddingContext& ctx, int bound, std::size_t* skipped) {
  const CendAlgebra& C = ctx.C();
  std::vector<SpanItem> items;
  std::vector<std::vector<std::size_t>> by_length(static_cast<std::size_t>(std::max(bound, 1)) + 1);
  auto known = [&](const Operator& op) {
    return std::any_of(items.begin(), items.end(), [&](const SpanItem& it) { return it.op == op; });
  };
  auto wrap = [](const SpanItem& it) { return it.length == 1 ? it.label : "(" + it.label + ")"; };
  for (std::size_t i = 0; i < ctx.dim(); ++i) {
    if (known(ctx.tau_images[i])) continue;
    by_length[1].push_back(items.size());
    items.push_back({name_of(ctx, i), 1, ctx.tau_images[i]});
  }
  std::size_t skip = 0;
  for (int len = 2; len <= bound; ++len)
    for (int p = 1; p < len; ++p)
      for (std::size_t ia : by_length[static_cast<std::size_t>(p)])
        for (std::size_t ib : by_length[static_cast<std::size_t>(len - p)]) {
          try {
            Operator prod = C.lambda_product(items[ia].op, items[ib].op);
            int deg = prod.degree(Var::Lambda);
            Rational fact = 1;
            for (int n = 0; n <= deg; ++n) {
              if (n > 1) fact *= Rational(n);
              Operator op = prod.coeff(Var::Lambda, static_cast<unsigned>(n)) * MPoly(fact);
              if (op.is_zero() || known(op)) continue;
              std::string label = wrap(items[ia]) + " (" + std::to_string(n) + ") " + wrap(items[ib]);
              by_length[static_cast<std::size_t>(len)].push_back(items.size());
              items.push_back({std::move(label), len, std::move(op)});
            }
          } catch (const TruncationOverflow&) {
            ++skip;
          }
        }
  if (skipped != nullptr) *skipped = skip;
  return items;
}

namespace {

nlohmann::json context_bounds(const EmbeddingContext& ctx) {
  return {{"poisson", ctx.poisson_kind},
          {"order_bound", ctx.poisson->order_bound()},
          {"degree_bound", ctx.poisson->degree_bound()}};
}

template <class F>
void for_pairs(const EmbeddingContext& ctx, F&& f) {
  const std::size_t n = ctx.dim();
  std::vector<std::future<void>> jobs;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) jobs.push_back(std::async(std::launch::async, [&, a, b] { f(a, b); }));
  for (auto& j : jobs) j.get();
}

}  // namespace

std::map<Exponents, PoissonElem> components(const ModuleElem& u) {
  std::map<Exponents, PoissonElem> parts;
  for (const auto& [m, c] : u.terms())
    for (const auto& [e, r] : c.terms()) parts[e].add(m, r);
  return parts;
}

IdealCheck acts_into_ideal(const EmbeddingContext& ctx, const Operator& A) {
  IdealCheck out;
  const auto* F = dynamic_cast<const FreePoissonRank1*>(ctx.poisson.get());
  if (!F) throw InvalidContext("ideal check needs the free quotient model");
  for (const auto& f : F->enumerate_basis()) {
    ModuleElem img;
    try {
      img = ctx.C().act(A, ModuleElem::from(PoissonElem::monomial(f)));
    } catch (const TruncationOverflow&) {
      ++out.skipped;
      continue;
    }
    for (const auto& [e, part] : components(img))
      if (F->ideal_member(part).status != Membership::member) {
        out.failure = F->render(f);
        return out;
      }
    ++out.checked;
  }
  return out;
}

Report lemma1_report(const EmbeddingContext& ctx) {
  Stopwatch sw;
  Report rep;
  rep.check = "lemma1-residual";
  rep.bounds = context_bounds(ctx);
  const bool free_model = dynamic_cast<const FreePoissonRank1*>(ctx.poisson.get()) != nullptr;
  const std::size_t n = ctx.dim();
  std::vector<std::optional<Operator>> res(n * n);
  std::vector<std::string> overflow(n * n);
  for_pairs(ctx, [&](std::size_t a, std::size_t b) {
    try {
      res[a * n + b] = lemma1_residual(ctx, a, b);
    } catch (const TruncationOverflow& e) {
      overflow[a * n + b] = e.what();
    }
  });
  for (std::size_t a = 0; a < n; ++a) {
    rep.note("tau(" + name_of(ctx, a) + ") = " + ctx.C().render(ctx.tau_images[a]));
    for (std::size_t b = 0; b < n; ++b) {
      std::string pair = name_of(ctx, a) + ", " + name_of(ctx, b);
      const auto& r = res[a * n + b];
      if (!r) {
        rep.merge_status(Status::overflow);
        rep.note("(" + pair + ") truncation-overflow: " + overflow[a * n + b] + "; raise the bounds");
        continue;
      }
      if (r->is_zero()) {
        rep.note("(" + pair + ") residual 0");
      } else if (free_model) {
        IdealCheck ic = acts_into_ideal(ctx, *r);
        std::string line = "(" + pair + ") residual " + ctx.C().render(*r);
        if (ic.ok()) {
          rep.note(line);
          rep.note("  zero modulo I_V on " + std::to_string(ic.checked) + " basis elements (" +
                   std::to_string(ic.skipped) + " leave the model)");
        } else if (ic.failure.empty()) {
          rep.merge_status(Status::overflow);
          rep.note(line + "; no basis element stays inside the model, raise the bounds");
        } else {
          rep.fail(line + " not in I_V on " + ic.failure, {{"pair", pair}, {"f", ic.failure}});
        }
      } else {
        rep.fail("(" + pair + ") residual " + ctx.C().render(*r), {{"pair", pair}, {"residual", ctx.C().render(*r)}});
      }
    }
  }
  rep.details["pairs"] = n * n;
  rep.seconds = sw.seconds();
  return rep;
}

Report locality_report(const EmbeddingContext& ctx) {
  Stopwatch sw;
  Report rep;
  rep.check = "locality-certificate";
  rep.bounds = context_bounds(ctx);
  const std::size_t n = ctx.dim();
  const CendAlgebra& C = ctx.C();
  struct Row {
    std::size_t N = 0;
    std::optional<Operator> lam2, expected;
    std::string error;
  };
  std::vector<Row> rows(n * n);
  for_pairs(ctx, [&](std::size_t a, std::size_t b) {
    Row& row = rows[a * n + b];
    try {
      Operator prod = C.lambda_product(ctx.tau_images[a], ctx.tau_images[b]);
      row.N = prod.is_zero() ? 0 : static_cast<std::size_t>(prod.degree(Var::Lambda) + 1);
      row.lam2 = prod.coeff(Var::Lambda, 2);
      row.expected = expected_lambda2(ctx, a, b);
    } catch (const TruncationOverflow& e) {
      row.error = e.what();
    }
  });
  std::size_t maxN = 0;
  nlohmann::json table = nlohmann::json::array();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Row& row = rows[a * n + b];
      std::string pair = name_of(ctx, a) + ", " + name_of(ctx, b);
      if (!row.error.empty()) {
        rep.merge_status(Status::overflow);
        rep.note("(" + pair + ") truncation-overflow: " + row.error);
        continue;
      }
      maxN = std::max(maxN, row.N);
      table.push_back({{"pair", pair}, {"N", row.N}, {"lambda2", C.render(*row.lam2)}});
      std::string line = "(" + pair + ") N = " + std::to_string(row.N) + ", λ² coefficient " + C.render(*row.lam2);
      if (row.N > 3)
        rep.fail(line + " exceeds N = 3", {{"pair", pair}, {"N", row.N}});
      else if (!(*row.lam2 == *row.expected))
        rep.fail(line + " differs from " + C.render(*row.expected),
                 {{"pair", pair}, {"lambda2", C.render(*row.lam2)}, {"expected", C.render(*row.expected)}});
      else
        rep.note(line);
    }
  rep.details["pairs"] = table;
  rep.details["max_N"] = maxN;
  rep.seconds = sw.seconds();
  return rep;
}

Report injectivity_report(const EmbeddingContext& ctx, std::uint64_t seed, int samples, int max_degree) {
  Stopwatch sw;
  Report rep;
  rep.check = "injectivity-probe";
  rep.bounds = context_bounds(ctx);
  rep.bounds["seed"] = seed;
  rep.bounds["samples"] = samples;
  rep.bounds["max_degree"] = max_degree;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coef(-3, 3);
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::vector<ConfElem> sample;
  {
    ConfElem w = basis_elem(ctx.gd, 0);
    w.coords[0] = kT * kT - MPoly(3);
    sample.push_back(w);
  }
  while (static_cast<int>(sample.size()) < samples) {
    ConfElem w = basis_elem(ctx.gd, 0);
    for (auto& c : w.coords) {
      c = MPoly();
      int d = deg(rng);
      for (int k = 0; k <= d; ++k) c += kT.pow(static_cast<unsigned>(k)) * MPoly(coef(rng));
    }
    if (!w.is_zero()) sample.push_back(std::move(w));
  }
  if (!injectivity_probe(ctx, ConfElem{std::vector<MPoly>(ctx.dim())}).zero)
    rep.fail("tau(0) has a nonzero witness");
  std::size_t detected = 0;
  for (const auto& w : sample) {
    try {
      auto r = injectivity_probe(ctx, w);
      if (r.zero)
        rep.fail("tau(w) acts as zero for w = " + render(ctx.gd, w), render(ctx.gd, w));
      else
        ++detected;
      if (&w == &sample.front()) rep.note("w = " + render(ctx.gd, w) + ": " + r.witness);
    } catch (const TruncationOverflow& e) {
      rep.merge_status(Status::overflow);
      rep.note(std::string("truncation-overflow: ") + e.what());
    }
  }
  rep.note(std::to_string(detected) + " of " + std::to_string(sample.size()) + " nonzero w have a nonzero witness");
  rep.details["detected"] = detected;
  rep.seconds = sw.seconds();
  return rep;
}

Report span_report(const EmbeddingContext& ctx, int bound) {
  Stopwatch sw;
  Report rep;
  rep.check = "envelope-span";
  rep.bounds = context_bounds(ctx);
  rep.bounds["word_bound"] = bound;
  std::size_t skipped = 0;
  auto items = envelope_span(ctx, bound, &skipped);
  nlohmann::json list = nlohmann::json::array();
  for (const auto& it : items) {
    rep.note(it.label + " ↦ " + ctx.C().render(it.op));
    list.push_back({{"label", it.label}, {"length", it.length}, {"operator", ctx.C().render(it.op)}});
  }
  rep.details["items"] = list;
  rep.details["overflow_skipped"] = skipped;
  if (skipped > 0) rep.note(std::to_string(skipped) + " products left the truncation");
  rep.seconds = sw.seconds();
  return rep;
}

}  // namespace gdconf
