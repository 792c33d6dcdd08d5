#include "gdconf/envelope.hpp"
#include "gdconf/parse.hpp"
#include "gdconf/properties.hpp"
#include "gdconf/virasoro.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace gdconf;

namespace {

std::string dump(const Report& r) { return r.to_json().dump(); }

std::vector<std::string> dump_all(const std::vector<Report>& rs) {
  std::vector<std::string> out;
  for (const auto& r : rs) out.push_back(dump(r));
  return out;
}

GDAlgebra load(const std::string& path) {
  GDTables t = load_gd_tables(path);
  return GDAlgebra(t.basis, t.novikov, t.lie);
}

Backend backend_of(const std::string& name) {
  if (name == "weyl") return Backend::weyl;
  if (name == "generic") return Backend::generic;
  throw std::invalid_argument("backend must be 'weyl' or 'generic'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "quadratic Lie conformal algebras and their differential Poisson envelopes";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<InvalidAlgebra>(m, "InvalidAlgebra", PyExc_ValueError);
  py::register_exception<InvalidContext>(m, "InvalidContext", PyExc_ValueError);
  py::register_exception<TruncationOverflow>(m, "TruncationOverflow", PyExc_OverflowError);

  py::class_<GDAlgebra>(m, "GDAlgebra")
      .def_static("load", &load, py::arg("path"))
      .def_property_readonly("dim", &GDAlgebra::dim)
      .def_property_readonly("basis", &GDAlgebra::basis_names)
      .def("to_json", [](const GDAlgebra& g) { return gd_to_json(g).dump(); });

  m.def("virasoro", &virasoro_gd);
  m.def("abelian", &abelian_gd);

  m.def("check", [](const std::string& path) { return dump(axiom_report(load_gd_tables(path))); }, py::arg("path"));

  m.def(
      "bracket",
      [](const GDAlgebra& V, const std::string& a, const std::string& b) {
        return dump(bracket_report(V, parse_elem(V, a), parse_elem(V, b)));
      },
      py::arg("algebra"), py::arg("a"), py::arg("b"));
  m.def(
      "nprod",
      [](const GDAlgebra& V, const std::string& a, const std::string& b, unsigned n) {
        return dump(bracket_report(V, parse_elem(V, a), parse_elem(V, b), n));
      },
      py::arg("algebra"), py::arg("a"), py::arg("b"), py::arg("n"));

  m.def(
      "envelope",
      [](const GDAlgebra& V, int order_bound, int degree_bound, int word_bound, std::uint64_t seed) {
        EmbeddingContext ctx = auto_context(V, order_bound, degree_bound);
        return dump_all({lemma1_report(ctx), locality_report(ctx), injectivity_report(ctx, seed),
                         span_report(ctx, word_bound)});
      },
      py::arg("algebra"), py::arg("order_bound") = 3, py::arg("degree_bound") = 3, py::arg("word_bound") = 2,
      py::arg("seed") = 1);

  m.def(
      "vir",
      [](int s, int q, int l, const std::string& backend) {
        Backend be = backend_of(backend);
        return dump_all({vir_basis_report(s, q, l, be), vir_independence(s, q, l, be), vir_dependence(be),
                         vir_adjoint_presentation(s, q, l, be)});
      },
      py::arg("s") = 5, py::arg("q") = 5, py::arg("l") = 5, py::arg("backend") = "weyl");

  m.def(
      "abelian_kernel",
      [](int order_bound, int degree_bound, int image_order_cap) {
        AbelianOptions opts;
        opts.order_bound = order_bound;
        opts.degree_bound = degree_bound;
        opts.image_order_cap = image_order_cap;
        return dump(abelian_kernel_witness(opts));
      },
      py::arg("order_bound") = 6, py::arg("degree_bound") = 4, py::arg("image_order_cap") = 12);

  m.def(
      "lemma2",
      [](int order_bound, int degree_bound) {
        Lemma2Options opts;
        opts.f_order_bound = order_bound;
        opts.f_degree_bound = degree_bound;
        return dump(lemma2_report(opts));
      },
      py::arg("order_bound") = 5, py::arg("degree_bound") = 3);

  m.def("ci_table", [](int lmax) { return ci_table(lmax).dump(); }, py::arg("lmax") = 4);
}
