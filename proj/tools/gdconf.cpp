#include "gdconf/envelope.hpp"
#include "gdconf/parse.hpp"
#include "gdconf/properties.hpp"
#include "gdconf/virasoro.hpp"

#include <CLI11.hpp>

#include <functional>
#include <future>
#include <iostream>

using namespace gdconf;

namespace {

struct RunConfig {
  std::string command;
  std::string path;
  std::string elem_a, elem_b;
  unsigned n = 0;
  int order_bound = 3;
  int degree_bound = 3;
  int word_bound = 2;
  std::string backend = "weyl";
  std::string format = "text";
  std::string poisson = "auto";
  std::uint64_t seed = 1;
  std::vector<int> bounds;
  int image_order_cap = 12;
  int samples = 20;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Backend backend_of(const RunConfig& cfg) { return cfg.backend == "generic" ? Backend::generic : Backend::weyl; }

GDAlgebra load_valid(const std::string& path) {
  GDTables t = load_gd_tables(path);
  try {
    return GDAlgebra(t.basis, t.novikov, t.lie);
  } catch (const InvalidAlgebra& e) {
    throw UsageError(path + " is not a Gel'fand-Dorfman algebra: " + e.what());
  }
}

nlohmann::json run_header(const RunConfig& cfg) {
  return {{"command", cfg.command}, {"seed", cfg.seed}};
}

void stamp(Report& r, const RunConfig& cfg) { r.bounds["seed"] = cfg.seed; }

int emit(const RunConfig& cfg, std::vector<Report> reports) {
  Status all = Status::pass;
  for (auto& r : reports) {
    stamp(r, cfg);
    all = combine(all, r.status);
  }
  if (cfg.format == "json") {
    nlohmann::json out = run_header(cfg);
    out["status"] = to_string(all);
    out["reports"] = nlohmann::json::array();
    for (const auto& r : reports) out["reports"].push_back(r.to_json());
    std::cout << out.dump(2) << "\n";
  } else {
    for (std::size_t i = 0; i < reports.size(); ++i) std::cout << (i ? "\n" : "") << reports[i].to_text();
    std::cout << "\n" << to_string(all) << "\n";
  }
  return exit_code(all);
}

// Runs independent sections concurrently, keeping declaration order.
std::vector<Report> run_sections(const std::vector<std::function<Report()>>& sections) {
  std::vector<std::future<Report>> futures;
  for (const auto& s : sections) futures.push_back(std::async(std::launch::async, s));
  std::vector<Report> out;
  for (auto& f : futures) out.push_back(f.get());
  return out;
}

int cmd_check(const RunConfig& cfg) {
  Report r = axiom_report(load_gd_tables(cfg.path));
  r.bounds["file"] = cfg.path;
  return emit(cfg, {r});
}

int cmd_bracket(const RunConfig& cfg, bool single_product) {
  GDAlgebra V = load_valid(cfg.path);
  ConfElem a = parse_elem(V, cfg.elem_a);
  ConfElem b = parse_elem(V, cfg.elem_b);
  return emit(cfg, {bracket_report(V, a, b, single_product ? std::optional<unsigned>(cfg.n) : std::nullopt)});
}

EmbeddingContext context_for(const RunConfig& cfg, const GDAlgebra& V) {
  const std::string& kind = cfg.poisson;
  if (kind == "auto") return auto_context(V, cfg.order_bound, cfg.degree_bound);
  if (kind == "polynomial") {
    if (V.dim() != 1 || V.novikov().at(0, 0, 0) != 1 || !V.lie().is_zero())
      throw InvalidContext("k[v] with d/dv embeds only v∘v = v");
    return virasoro_context();
  }
  if (kind == "lie-poisson") return current_context(V, cfg.degree_bound);
  if (kind == "universal") return novikov_context(V, cfg.order_bound, cfg.degree_bound);
  if (kind == "free") {
    if (V.dim() != 1 || !V.novikov().is_zero() || !V.lie().is_zero())
      throw InvalidContext("the free quotient embeds only the zero rank-one algebra");
    return abelian_context(cfg.order_bound, cfg.degree_bound);
  }
  throw UsageError("unknown --poisson " + kind);
}

int cmd_envelope(const RunConfig& cfg) {
  GDAlgebra V = load_valid(cfg.path);
  EmbeddingContext ctx = context_for(cfg, V);

  Report tau_rep;
  tau_rep.check = "tau";
  tau_rep.bounds = {{"order_bound", cfg.order_bound}, {"degree_bound", cfg.degree_bound}};
  tau_rep.note("P = " + ctx.poisson_kind);
  nlohmann::json images = nlohmann::json::object();
  for (std::size_t i = 0; i < ctx.dim(); ++i) {
    std::string text = ctx.C().render(ctx.tau_images[i]);
    if (backend_of(cfg) == Backend::weyl && ctx.poisson_kind == virasoro_context().poisson_kind)
      if (auto w = to_weyl(ctx.tau_images[i])) text += "  [" + w->to_string() + "]";
    tau_rep.note("tau(" + V.basis_names()[i] + ") = " + text);
    images[V.basis_names()[i]] = text;
  }
  tau_rep.details = {{"poisson", ctx.poisson_kind}, {"tau", images}};

  std::vector<Report> reports{tau_rep};
  auto sections = run_sections({[&] { return lemma1_report(ctx); }, [&] { return locality_report(ctx); },
                                [&] { return injectivity_report(ctx, cfg.seed, cfg.samples); },
                                [&] { return span_report(ctx, cfg.word_bound); }});
  for (auto& r : sections) reports.push_back(std::move(r));
  return emit(cfg, std::move(reports));
}

int cmd_vir(const RunConfig& cfg) {
  std::vector<int> b = cfg.bounds;
  if (b.empty()) b = {5, 5, 5};
  if (b.size() != 3) throw UsageError("vir takes three bounds S Q L");
  for (int x : b)
    if (x < 0) throw UsageError("bounds must be non-negative");
  Backend be = backend_of(cfg);
  return emit(cfg, run_sections({[&] { return vir_basis_report(b[0], b[1], b[2], be); },
                                 [&] { return vir_independence(b[0], b[1], b[2], be); },
                                 [&] { return vir_dependence(be); },
                                 [&] { return vir_adjoint_presentation(b[0], b[1], b[2], be); },
                                 [&] { return ci_report(4); }}));
}

int cmd_abelian(const RunConfig& cfg) {
  std::vector<int> b = cfg.bounds;
  if (b.empty()) b = {6, 4};
  if (b.size() != 2) throw UsageError("abelian takes two bounds K D");
  AbelianOptions opts;
  opts.order_bound = b[0];
  opts.degree_bound = b[1];
  opts.image_order_cap = cfg.image_order_cap;
  Report kernel = abelian_kernel_witness(opts);
  if (kernel.status == Status::overflow) return emit(cfg, {kernel});
  return emit(cfg, {kernel, lemma2_report()});
}

int cmd_lemma2(const RunConfig& cfg) {
  std::vector<int> b = cfg.bounds;
  if (b.empty()) b = {5, 3};
  if (b.size() != 2) throw UsageError("lemma2 takes two bounds K D");
  Lemma2Options opts;
  opts.f_order_bound = b[0];
  opts.f_degree_bound = b[1];
  return emit(cfg, {lemma2_report(opts)});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quadratic Lie conformal algebras, differential Poisson envelopes and Cend_fin"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--order-bound", cfg.order_bound, "derivative order bound K")->check(CLI::PositiveNumber);
    sub->add_option("--degree-bound", cfg.degree_bound, "monomial degree bound D")->check(CLI::PositiveNumber);
    sub->add_option("--word-bound", cfg.word_bound, "word length bound")->check(CLI::PositiveNumber);
    sub->add_option("--backend", cfg.backend, "rank-one operator backend")
        ->check(CLI::IsMember({"generic", "weyl"}));
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--seed", cfg.seed, "seed for randomized sweeps");
  };

  auto* check = app.add_subcommand("check", "run the Novikov, Lie, compatibility and conformal axiom checks");
  check->add_option("file", cfg.path, "GD algebra JSON")->required();

  auto* bracket = app.add_subcommand("bracket", "print [a λ b], its n-products and the locality bound");
  bracket->add_option("file", cfg.path)->required();
  bracket->add_option("a", cfg.elem_a)->required();
  bracket->add_option("b", cfg.elem_b)->required();

  auto* nprod = app.add_subcommand("nprod", "print (a (n) b)");
  nprod->add_option("file", cfg.path)->required();
  nprod->add_option("a", cfg.elem_a)->required();
  nprod->add_option("b", cfg.elem_b)->required();
  nprod->add_option("n", cfg.n)->required();

  auto* envelope = app.add_subcommand("envelope", "embed L(V) into Cend_fin(H⊗P) and verify the bracket");
  envelope->add_option("file", cfg.path)->required();
  envelope->add_option("--poisson", cfg.poisson, "envelope construction")
      ->check(CLI::IsMember({"auto", "polynomial", "lie-poisson", "universal", "free"}));
  envelope->add_option("--samples", cfg.samples, "random elements for the injectivity probe");

  auto* vir = app.add_subcommand("vir", "Virasoro envelope: basis images, independence, dependence, c_i");
  vir->add_option("bounds", cfg.bounds, "S Q L");

  auto* abelian = app.add_subcommand("abelian", "kernel witness for the zero rank-one algebra");
  abelian->add_option("bounds", cfg.bounds, "K D");
  abelian->add_option("--image-order-cap", cfg.image_order_cap, "largest image order swept");

  auto* lemma2 = app.add_subcommand("lemma2", "{v, f}·v in I_V certificates");
  lemma2->add_option("bounds", cfg.bounds, "K D");

  for (auto* sub : {check, bracket, nprod, envelope, vir, abelian, lemma2}) add_common(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    if (cfg.command == "check") return cmd_check(cfg);
    if (cfg.command == "bracket") return cmd_bracket(cfg, false);
    if (cfg.command == "nprod") return cmd_bracket(cfg, true);
    if (cfg.command == "envelope") return cmd_envelope(cfg);
    if (cfg.command == "vir") return cmd_vir(cfg);
    if (cfg.command == "abelian") return cmd_abelian(cfg);
    if (cfg.command == "lemma2") return cmd_lemma2(cfg);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidContext& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DimensionMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const TruncationOverflow& e) {
    std::cerr << "truncation overflow: " << e.what() << "\nraise --order-bound or --degree-bound\n";
    return 3;
  }
  return 2;
}
