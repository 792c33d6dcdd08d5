#include "gdconf/conformal.hpp"

#include <sstream>

namespace gdconf {

namespace {

bool all_zero(const std::vector<MPoly>& v) {
  for (const auto& p : v)
    if (!p.is_zero()) return false;
  return true;
}

void require_dim(const GDAlgebra& V, const std::vector<MPoly>& coords) {
  if (coords.size() != V.dim())
    throw DimensionMismatch("element has " + std::to_string(coords.size()) + " coordinates, algebra has dimension " +
                            std::to_string(V.dim()));
}

std::vector<MPoly> add(std::vector<MPoly> a, const std::vector<MPoly>& b, const Rational& scale = 1) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i] * scale;
  return a;
}

}  // namespace

bool ConfElem::is_zero() const { return all_zero(coords); }
bool ConfBracketValue::is_zero() const { return all_zero(coords); }

int ConfBracketValue::lambda_degree() const {
  int d = -1;
  for (const auto& p : coords) d = std::max(d, p.degree(Var::Lambda));
  return d;
}

ConfElem basis_elem(const GDAlgebra& V, std::size_t i) {
  if (i >= V.dim()) throw DimensionMismatch("basis index out of range");
  ConfElem e{std::vector<MPoly>(V.dim())};
  e.coords[i] = 1;
  return e;
}

ConfElem make_elem(const GDAlgebra& V, std::vector<MPoly> coords) {
  require_dim(V, coords);
  for (const auto& p : coords)
    if (p.uses(Var::X) || p.uses(Var::Lambda) || p.uses(Var::Mu))
      throw std::invalid_argument("elements of H⊗V may only involve T");
  return ConfElem{std::move(coords)};
}

std::vector<MPoly> bracket_with(const GDAlgebra& V, const std::vector<MPoly>& a, const std::vector<MPoly>& b,
                                const MPoly& param) {
  require_dim(V, a);
  require_dim(V, b);
  const std::size_t n = V.dim();
  const MPoly T = MPoly::var(Var::T);
  const MPoly minus_param = -param;
  const MPoly shifted = T + param;
  std::vector<MPoly> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    MPoly f = a[i].substitute(Var::T, minus_param);
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j].is_zero()) continue;
      MPoly fg = f * b[j].substitute(Var::T, shifted);
      for (std::size_t k = 0; k < n; ++k) {
        const Rational& c0 = V.lie().at(i, j, k);
        const Rational& c1 = V.novikov().at(j, i, k);
        Rational c2 = V.novikov().at(i, j, k) + V.novikov().at(j, i, k);
        if (c0 == 0 && c1 == 0 && c2 == 0) continue;
        MPoly basis_value = MPoly(c0) + T * c1 + param * c2;
        out[k] += fg * basis_value;
      }
    }
  }
  return out;
}

ConfBracketValue quadratic_bracket(const GDAlgebra& V, const ConfElem& a, const ConfElem& b) {
  return ConfBracketValue{bracket_with(V, a.coords, b.coords, MPoly::var(Var::Lambda))};
}

ConfElem n_product(const GDAlgebra& V, const ConfElem& a, const ConfElem& b, unsigned n) {
  ConfBracketValue br = quadratic_bracket(V, a, b);
  ConfElem out{std::vector<MPoly>(V.dim())};
  Rational nf(factorial(n));
  for (std::size_t k = 0; k < V.dim(); ++k) out.coords[k] = br.coords[k].coeff(Var::Lambda, n) * nf;
  return out;
}

std::size_t locality_N(const GDAlgebra& V, const ConfElem& a, const ConfElem& b) {
  ConfBracketValue br = quadratic_bracket(V, a, b);
  if (br.is_zero()) return 0;
  return static_cast<std::size_t>(br.lambda_degree()) + 1;
}

std::vector<MPoly> skew_substitute(const std::vector<MPoly>& value) {
  const MPoly sub = -MPoly::var(Var::T) - MPoly::var(Var::Lambda);
  std::vector<MPoly> out;
  out.reserve(value.size());
  for (const auto& p : value) out.push_back(p.substitute(Var::Lambda, sub));
  return out;
}

ConformalReport check_conformal_axioms(const GDAlgebra& V) {
  const std::size_t n = V.dim();
  const MPoly lam = MPoly::var(Var::Lambda);
  const MPoly mu = MPoly::var(Var::Mu);
  ConformalReport r;
  auto e = [&](std::size_t i) { return basis_elem(V, i).coords; };

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      ++r.tuples_checked;
      // [a λ b] + [b −T−λ a]
      auto defect = add(bracket_with(V, e(a), e(b), lam), skew_substitute(bracket_with(V, e(b), e(a), lam)));
      if (!all_zero(defect)) {
        r.ok = false;
        r.identity = "skew-symmetry";
        r.witness = {a, b};
        r.defect = std::move(defect);
        return r;
      }
    }

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        ++r.tuples_checked;
        auto lhs = bracket_with(V, bracket_with(V, e(a), e(b), lam), e(c), lam + mu);
        auto t1 = bracket_with(V, e(a), bracket_with(V, e(b), e(c), mu), lam);
        auto t2 = bracket_with(V, e(b), bracket_with(V, e(a), e(c), lam), mu);
        auto defect = add(add(lhs, t1, -1), t2);
        if (!all_zero(defect)) {
          r.ok = false;
          r.identity = "jacobi";
          r.witness = {a, b, c};
          r.defect = std::move(defect);
          return r;
        }
      }
  return r;
}

std::string ConformalReport::describe(const GDAlgebra& V) const {
  if (ok) return "ok (" + std::to_string(tuples_checked) + " tuples)";
  std::ostringstream os;
  os << identity << " fails at (";
  for (std::size_t i = 0; i < witness.size(); ++i) os << (i ? ", " : "") << V.basis_names()[witness[i]];
  os << "): defect = " << render(V, defect);
  return os.str();
}

std::string render(const GDAlgebra& V, const std::vector<MPoly>& coords) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coords.size(); ++k) {
    const MPoly& p = coords[k];
    if (p.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    const std::string& name = V.basis_names()[k];
    if (p == MPoly(1))
      os << name;
    else if (p.size() == 1)
      os << p.to_compact() << "·" << name;
    else
      os << "(" << p.to_compact() << ")·" << name;
  }
  return first ? "0" : os.str();
}

}  // namespace gdconf
