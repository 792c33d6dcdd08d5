#include "gdconf/poisson.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace gdconf {

PoissonElem PoissonElem::monomial(BasisId m, const Rational& c) {
  PoissonElem e;
  e.add(m, c);
  return e;
}

Rational PoissonElem::coeff(const BasisId& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void PoissonElem::add(const BasisId& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) {
    it->second.canonicalize();
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

PoissonElem& PoissonElem::operator+=(const PoissonElem& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

PoissonElem& PoissonElem::operator-=(const PoissonElem& o) {
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

PoissonElem& PoissonElem::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

DiffPoissonAlgebra::DiffPoissonAlgebra(int order_bound, int degree_bound)
    : order_bound_(order_bound), degree_bound_(degree_bound) {
  if (order_bound < 0 || degree_bound < 1) throw std::invalid_argument("bounds must be positive");
}

int DiffPoissonAlgebra::weight(const BasisId& m) const {
  int w = 0;
  for (int g : m) w += generator_weight(g);
  return w;
}

int DiffPoissonAlgebra::max_order(const BasisId& m) const {
  int o = 0;
  for (int g : m) o = std::max(o, generator_order(g));
  return o;
}

void DiffPoissonAlgebra::check_bounds(const BasisId& m) const {
  if (weight(m) > degree_bound_)
    throw TruncationOverflow(name() + ": degree " + std::to_string(weight(m)) + " exceeds degree bound " +
                             std::to_string(degree_bound_));
}

void DiffPoissonAlgebra::check_bounds(const PoissonElem& a) const {
  for (const auto& [m, c] : a.terms()) check_bounds(m);
}

PoissonElem DiffPoissonAlgebra::reduce(const BasisId& raw) const {
  BasisId m = raw;
  std::sort(m.begin(), m.end());
  return PoissonElem::monomial(std::move(m));
}

PoissonElem DiffPoissonAlgebra::product(const PoissonElem& a, const PoissonElem& b) const {
  PoissonElem out;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      BasisId m;
      m.reserve(ma.size() + mb.size());
      std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(m));
      PoissonElem r = reduce(m);
      out += r * (ca * cb);
    }
  check_bounds(out);
  return out;
}

PoissonElem DiffPoissonAlgebra::bracket(const PoissonElem& a, const PoissonElem& b) const {
  PoissonElem out;
  if (bracket_is_zero()) return out;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms())
      for (std::size_t i = 0; i < ma.size(); ++i)
        for (std::size_t j = 0; j < mb.size(); ++j) {
          if (j > 0 && mb[j] == mb[j - 1]) continue;
          if (i > 0 && ma[i] == ma[i - 1]) continue;
          // Multiplicities of equal factors contribute identical terms.
          Rational mult = static_cast<long>(std::count(ma.begin(), ma.end(), ma[i]) *
                                            std::count(mb.begin(), mb.end(), mb[j]));
          PoissonElem g = generator_bracket(ma[i], mb[j]);
          if (g.is_zero()) continue;
          BasisId rest;
          for (std::size_t k = 0; k < ma.size(); ++k)
            if (k != i) rest.push_back(ma[k]);
          for (std::size_t k = 0; k < mb.size(); ++k)
            if (k != j) rest.push_back(mb[k]);
          std::sort(rest.begin(), rest.end());
          out += product(g, PoissonElem::monomial(rest)) * (ca * cb * mult);
        }
  check_bounds(out);
  return out;
}

PoissonElem DiffPoissonAlgebra::derive(const PoissonElem& a) const {
  PoissonElem out;
  if (derivation_is_zero()) return out;
  for (const auto& [m, c] : a.terms())
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i > 0 && m[i] == m[i - 1]) continue;
      Rational mult = static_cast<long>(std::count(m.begin(), m.end(), m[i]));
      PoissonElem g = generator_derive(m[i]);
      if (g.is_zero()) continue;
      BasisId rest = m;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
      out += product(g, PoissonElem::monomial(rest)) * (c * mult);
    }
  return out;
}

std::vector<BasisId> DiffPoissonAlgebra::enumerate_basis(int order_bound, int degree_bound) const {
  std::vector<int> gens;
  for (int g = 0; g < num_generators(); ++g)
    if (generator_order(g) <= order_bound && generator_weight(g) <= degree_bound) gens.push_back(g);
  std::vector<BasisId> out;
  BasisId cur;
  std::function<void(std::size_t, int)> rec = [&](std::size_t from, int w) {
    if (is_normal(cur)) out.push_back(cur);
    for (std::size_t i = from; i < gens.size(); ++i) {
      int gw = generator_weight(gens[i]);
      if (w + gw > degree_bound) continue;
      cur.push_back(gens[i]);
      rec(i, w + gw);
      cur.pop_back();
    }
  };
  rec(0, 0);
  std::sort(out.begin(), out.end(), BasisLess{});
  return out;
}

bool DiffPoissonAlgebra::generator_is_central(int code) const {
  if (bracket_is_zero()) return true;
  for (int g = 0; g < num_generators(); ++g) {
    try {
      if (!generator_bracket(code, g).is_zero()) return false;
    } catch (const TruncationOverflow&) {
      return false;
    }
  }
  return true;
}

std::string DiffPoissonAlgebra::render(const BasisId& m) const {
  if (m.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < m.size();) {
    std::size_t j = i;
    while (j < m.size() && m[j] == m[i]) ++j;
    if (!out.empty()) out += "·";
    std::string name = generator_name(m[i]);
    std::size_t power = j - i;
    if (power == 1)
      out += name;
    else if (name.find_first_of("^{") == std::string::npos)
      out += name + "^" + std::to_string(power);
    else
      out += "(" + name + ")^" + std::to_string(power);
    i = j;
  }
  return out;
}

std::string DiffPoissonAlgebra::render(const PoissonElem& a) const {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest degree first, like polynomials.
  for (auto it = a.terms().rbegin(); it != a.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    Rational mag = abs(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    if (m.empty())
      os << to_string(mag);
    else if (mag == 1)
      os << render(m);
    else
      os << to_string(mag) << "·" << render(m);
  }
  return os.str();
}

namespace {

class PolyRank1 final : public DiffPoissonAlgebra {
 public:
  PolyRank1(DerivationMode mode, int degree_bound) : DiffPoissonAlgebra(0, degree_bound), mode_(mode) {}
  std::string name() const override { return mode_ == DerivationMode::ddv ? "k[v], d=d/dv" : "k[v], d=0"; }
  int num_generators() const override { return 1; }
  std::string generator_name(int) const override { return "v"; }
  int generator_order(int) const override { return 0; }
  bool derivation_is_zero() const override { return mode_ == DerivationMode::zero; }
  bool bracket_is_zero() const override { return true; }
  PoissonElem generator_bracket(int, int) const override { return {}; }
  PoissonElem generator_derive(int) const override {
    return mode_ == DerivationMode::ddv ? unit() : PoissonElem{};
  }

 private:
  DerivationMode mode_;
};

class LiePoisson final : public DiffPoissonAlgebra {
 public:
  LiePoisson(StructureTable lie, std::vector<std::string> names, int degree_bound)
      : DiffPoissonAlgebra(0, degree_bound), lie_(std::move(lie)), names_(std::move(names)) {}
  std::string name() const override { return "lie-poisson"; }
  int num_generators() const override { return static_cast<int>(lie_.dim()); }
  std::string generator_name(int code) const override { return names_[code]; }
  int generator_order(int) const override { return 0; }
  bool derivation_is_zero() const override { return true; }
  bool bracket_is_zero() const override { return lie_.is_zero(); }
  PoissonElem generator_bracket(int a, int b) const override {
    PoissonElem out;
    for (std::size_t k = 0; k < lie_.dim(); ++k) out.add({static_cast<int>(k)}, lie_.at(a, b, k));
    return out;
  }
  PoissonElem generator_derive(int) const override { return {}; }

 private:
  StructureTable lie_;
  std::vector<std::string> names_;
};

}  // namespace

PoissonPtr poly_poisson_rank1(DerivationMode mode, int degree_bound) {
  return std::make_shared<PolyRank1>(mode, degree_bound);
}

PoissonPtr lie_poisson(const StructureTable& lie, std::vector<std::string> names, int degree_bound) {
  CheckReport r = check_lie(lie);
  if (!r.ok) throw InvalidAlgebra("lie_poisson: table is not a Lie algebra", r);
  if (names.empty()) names = default_basis_names(lie.dim());
  return std::make_shared<LiePoisson>(lie, std::move(names), degree_bound);
}

std::string PoissonReport::describe(const DiffPoissonAlgebra& P) const {
  std::ostringstream os;
  if (ok) {
    os << "ok (" << tuples_checked << " tuples";
    if (overflow_skipped) os << ", " << overflow_skipped << " skipped at the truncation boundary";
    os << ")";
    return os.str();
  }
  os << identity << " fails at (";
  for (std::size_t i = 0; i < witness.size(); ++i) os << (i ? ", " : "") << P.render(witness[i]);
  os << "): defect = " << P.render(defect);
  return os.str();
}

PoissonReport check_poisson_axioms(const DiffPoissonAlgebra& P, int order_bound, int degree_bound) {
  PoissonReport r;
  auto basis = P.enumerate_basis(order_bound, degree_bound);
  auto fail = [&](const char* id, std::vector<BasisId> w, PoissonElem defect) {
    r.ok = false;
    r.identity = id;
    r.witness = std::move(w);
    r.defect = std::move(defect);
  };
  auto e = [](const BasisId& m) { return PoissonElem::monomial(m); };

  for (std::size_t i = 0; i < basis.size() && r.ok; ++i)
    for (std::size_t j = i; j < basis.size() && r.ok; ++j) {
      try {
        ++r.tuples_checked;
        auto a = e(basis[i]), b = e(basis[j]);
        auto ab = P.bracket(a, b);
        if (auto d = ab + P.bracket(b, a); !d.is_zero()) {
          fail("antisymmetry", {basis[i], basis[j]}, d);
          break;
        }
        auto d1 = P.derive(P.product(a, b)) - P.product(P.derive(a), b) - P.product(a, P.derive(b));
        if (!d1.is_zero()) {
          fail("derivation of product", {basis[i], basis[j]}, d1);
          break;
        }
        auto d2 = P.derive(ab) - P.bracket(P.derive(a), b) - P.bracket(a, P.derive(b));
        if (!d2.is_zero()) fail("derivation of bracket", {basis[i], basis[j]}, d2);
      } catch (const TruncationOverflow&) {
        ++r.overflow_skipped;
      }
    }

  for (std::size_t i = 0; i < basis.size() && r.ok; ++i)
    for (std::size_t j = 0; j < basis.size() && r.ok; ++j)
      for (std::size_t k = 0; k < basis.size() && r.ok; ++k) {
        try {
          ++r.tuples_checked;
          auto a = e(basis[i]), b = e(basis[j]), c = e(basis[k]);
          auto leib = P.bracket(a, P.product(b, c)) - P.product(b, P.bracket(a, c)) - P.product(P.bracket(a, b), c);
          if (!leib.is_zero()) {
            fail("leibniz", {basis[i], basis[j], basis[k]}, leib);
            break;
          }
          if (j < i || k < j) continue;
          auto jac = P.bracket(a, P.bracket(b, c)) + P.bracket(b, P.bracket(c, a)) + P.bracket(c, P.bracket(a, b));
          if (!jac.is_zero()) fail("jacobi", {basis[i], basis[j], basis[k]}, jac);
        } catch (const TruncationOverflow&) {
          ++r.overflow_skipped;
        }
      }
  return r;
}

PoissonReport check_pd_consistency(const DiffPoissonAlgebra& P, const GDAlgebra& V, const std::vector<int>& embedding) {
  PoissonReport r;
  auto image = [&](const Vec& x) {
    PoissonElem out;
    for (std::size_t k = 0; k < x.size(); ++k) out.add({embedding[k]}, x[k]);
    return out;
  };
  for (std::size_t i = 0; i < V.dim(); ++i)
    for (std::size_t j = 0; j < V.dim(); ++j) {
      ++r.tuples_checked;
      auto a = P.generator(embedding[i]), b = P.generator(embedding[j]);
      Vec ei = basis_vector(V.dim(), i), ej = basis_vector(V.dim(), j);
      auto d1 = P.product(a, P.derive(b)) - image(V.circ(ei, ej));
      if (!d1.is_zero()) {
        r.ok = false;
        r.identity = "a·d(b) = a∘b";
        r.witness = {{embedding[i]}, {embedding[j]}};
        r.defect = d1;
        return r;
      }
      auto d2 = P.bracket(a, b) - image(V.bracket(ei, ej));
      if (!d2.is_zero()) {
        r.ok = false;
        r.identity = "{a,b} = [a,b]";
        r.witness = {{embedding[i]}, {embedding[j]}};
        r.defect = d2;
        return r;
      }
    }
  return r;
}

const char* to_string(Membership m) {
  switch (m) {
    case Membership::member: return "member";
    case Membership::not_member: return "not-member";
    case Membership::inconclusive: return "inconclusive";
  }
  return "?";
}

}  // namespace gdconf
