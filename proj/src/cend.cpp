#include "gdconf/cend.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace gdconf {

RawWord OpWord::letters() const {
  RawWord out;
  for (int g : ad) out.push_back(Letter{Letter::ad, BasisId{g}});
  if (!l.empty()) out.push_back(Letter{Letter::l, l});
  for (int i = 0; i < d; ++i) out.push_back(Letter{Letter::d, {}});
  return out;
}

bool OpWordLess::operator()(const OpWord& a, const OpWord& b) const {
  if (a.ad.size() != b.ad.size()) return a.ad.size() < b.ad.size();
  if (a.l != b.l) return BasisLess{}(a.l, b.l);
  if (a.ad != b.ad) return a.ad < b.ad;
  return a.d < b.d;
}

Operator Operator::word(OpWord w, const MPoly& c) {
  Operator out;
  out.add(w, c);
  return out;
}

MPoly Operator::coeff(const OpWord& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? MPoly() : it->second;
}

void Operator::add(const OpWord& w, const MPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Operator& Operator::operator+=(const Operator& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

Operator& Operator::operator-=(const Operator& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

Operator& Operator::operator*=(const MPoly& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, f] : terms_) f *= c;
  return *this;
}

int Operator::degree(Var v) const {
  int d = -1;
  for (const auto& [w, c] : terms_) d = std::max(d, c.degree(v));
  return d;
}

Operator Operator::coeff(Var v, unsigned power) const {
  Operator out;
  for (const auto& [w, c] : terms_) out.add(w, c.coeff(v, power));
  return out;
}

Operator Operator::substitute(const std::vector<std::pair<Var, MPoly>>& bindings) const {
  Operator out;
  for (const auto& [w, c] : terms_) out.add(w, c.substitute(bindings));
  return out;
}

ModuleElem ModuleElem::from(const PoissonElem& u, const MPoly& h) {
  ModuleElem out;
  for (const auto& [m, c] : u.terms()) out.add(m, h * c);
  return out;
}

void ModuleElem::add(const BasisId& m, const MPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ModuleElem& ModuleElem::operator+=(const ModuleElem& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

ModuleElem& ModuleElem::operator*=(const MPoly& c) {
  ModuleElem out;
  for (const auto& [m, f] : terms_) out.add(m, f * c);
  *this = std::move(out);
  return *this;
}

ModuleElem ModuleElem::coeff(Var v, unsigned power) const {
  ModuleElem out;
  for (const auto& [m, c] : terms_) out.add(m, c.coeff(v, power));
  return out;
}

int ModuleElem::degree(Var v) const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, c.degree(v));
  return d;
}

CendAlgebra::CendAlgebra(PoissonPtr P, CendOptions opts) : P_(std::move(P)), opts_(opts) {
  const int n = P_->num_generators();
  central_.assign(static_cast<std::size_t>(n), P_->bracket_is_zero());
  if (!P_->bracket_is_zero() && n <= 64)
    for (int g = 0; g < n; ++g) central_[static_cast<std::size_t>(g)] = P_->generator_is_central(g);
  build_relations();
}

Operator CendAlgebra::D() const { return normalize({Letter{Letter::d, {}}}); }

Operator CendAlgebra::Ad(const PoissonElem& a) const {
  Operator out;
  for (const auto& [m, c] : a.terms()) out += normalize({Letter{Letter::ad, m}}) * MPoly(c);
  return out;
}

Operator CendAlgebra::L(const PoissonElem& a) const {
  Operator out;
  for (const auto& [m, c] : a.terms()) out += normalize({Letter{Letter::l, m}}) * MPoly(c);
  return out;
}

namespace {

using Terms = std::vector<std::pair<Rational, RawWord>>;

RawWord splice(const RawWord& w, std::size_t at, std::size_t len, const RawWord& mid) {
  RawWord out(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(at));
  out.insert(out.end(), mid.begin(), mid.end());
  out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(at + len), w.end());
  return out;
}

}  // namespace

CendAlgebra::Scalars CendAlgebra::normalize_scalar(const RawWord& w, Strategy s) const {
  if (s == Strategy::leftmost) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = cache_.find(w);
    if (it != cache_.end()) return it->second;
  }
  const DiffPoissonAlgebra& P = *P_;
  auto atomic = [&](const Letter& a) {
    switch (a.kind) {
      case Letter::ad:
        return a.sub.size() == 1 && !central_[static_cast<std::size_t>(a.sub[0])];
      case Letter::l:
        return !a.sub.empty();
      case Letter::d:
        return !P.derivation_is_zero();
    }
    return false;
  };
  auto letter_rule = [&](const RawWord& word, std::size_t i) -> std::optional<Terms> {
    const Letter& a = word[i];
    if (atomic(a)) return std::nullopt;
    Terms out;
    if (a.kind == Letter::l) {
      out.emplace_back(1, splice(word, i, 1, {}));
    } else if (a.kind == Letter::ad && a.sub.size() >= 2) {
      // Ad(x·rest) = Σ Ad(x)·L(rest)
      for (std::size_t k = 0; k < a.sub.size(); ++k) {
        if (k > 0 && a.sub[k] == a.sub[k - 1]) continue;
        long mult = std::count(a.sub.begin(), a.sub.end(), a.sub[k]);
        BasisId rest = a.sub;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
        PoissonElem red = P.reduce(rest);
        for (const auto& [m, c] : red.terms())
          out.emplace_back(c * mult,
                           splice(word, i, 1, {Letter{Letter::ad, BasisId{a.sub[k]}}, Letter{Letter::l, m}}));
      }
    }
    return out;
  };
  auto pair_rule = [&](const RawWord& word, std::size_t i) -> std::optional<Terms> {
    const Letter& a = word[i];
    const Letter& b = word[i + 1];
    if (!atomic(a) || !atomic(b)) return std::nullopt;
    Terms out;
    auto each = [&](const PoissonElem& e, const Rational& scale, Letter::Kind kind) {
      for (const auto& [m, c] : e.terms()) out.emplace_back(c * scale, splice(word, i, 2, {Letter{kind, m}}));
    };
    if (a.kind == Letter::l && b.kind == Letter::l) {
      each(P.product(PoissonElem::monomial(a.sub), PoissonElem::monomial(b.sub)), 1, Letter::l);
    } else if (a.kind == Letter::l && b.kind == Letter::ad) {
      // L(n)·Ad(g) = Ad(g)·L(n) − L({g, n})
      out.emplace_back(1, splice(word, i, 2, {b, a}));
      each(P.bracket(PoissonElem::monomial(b.sub), PoissonElem::monomial(a.sub)), -1, Letter::l);
    } else if (a.kind == Letter::d && b.kind == Letter::ad) {
      out.emplace_back(1, splice(word, i, 2, {b, a}));
      each(P.derive(PoissonElem::monomial(b.sub)), 1, Letter::ad);
    } else if (a.kind == Letter::d && b.kind == Letter::l) {
      out.emplace_back(1, splice(word, i, 2, {b, a}));
      each(P.derive(PoissonElem::monomial(b.sub)), 1, Letter::l);
    } else if (a.kind == Letter::ad && b.kind == Letter::ad && b.sub < a.sub) {
      out.emplace_back(1, splice(word, i, 2, {b, a}));
      each(P.bracket(PoissonElem::monomial(a.sub), PoissonElem::monomial(b.sub)), 1, Letter::ad);
    } else {
      return std::nullopt;
    }
    return out;
  };
  auto step = [&](const RawWord& word) -> std::optional<Terms> {
    const std::size_t n = word.size();
    if (s == Strategy::leftmost) {
      for (std::size_t i = 0; i < n; ++i) {
        if (auto r = letter_rule(word, i)) return r;
        if (i + 1 < n)
          if (auto r = pair_rule(word, i)) return r;
      }
    } else {
      for (std::size_t i = n; i-- > 0;) {
        if (i + 1 < n)
          if (auto r = pair_rule(word, i)) return r;
        if (auto r = letter_rule(word, i)) return r;
      }
    }
    return std::nullopt;
  };

  std::map<RawWord, Rational> pending{{w, Rational(1)}};
  Scalars out;
  while (!pending.empty()) {
    auto it = pending.begin();
    RawWord word = it->first;
    Rational c = it->second;
    pending.erase(it);
    auto r = step(word);
    if (!r) {
      OpWord nw;
      for (const Letter& a : word) {
        if (a.kind == Letter::ad) nw.ad.push_back(a.sub[0]);
        if (a.kind == Letter::l) nw.l = a.sub;
        if (a.kind == Letter::d) ++nw.d;
      }
      auto [jt, inserted] = out.try_emplace(nw, c);
      if (!inserted) {
        jt->second += c;
        if (jt->second == 0) out.erase(jt);
      }
      continue;
    }
    for (auto& [rc, rw] : *r) {
      auto [jt, inserted] = pending.try_emplace(std::move(rw), c * rc);
      if (!inserted) {
        jt->second += c * rc;
        if (jt->second == 0) pending.erase(jt);
      }
    }
  }
  if (s == Strategy::leftmost) {
    std::lock_guard<std::mutex> lock(mutex_);
    cache_.emplace(w, out);
  }
  return out;
}

Operator CendAlgebra::normalize(const RawWord& w, Strategy s) const {
  Operator out;
  for (const auto& [nw, c] : normalize_scalar(w, s)) out.add(nw, MPoly(c));
  return reduce(out);
}

void CendAlgebra::build_relations() {
  const auto ideal = P_->ideal_basis();
  if (ideal.empty()) return;
  const int n = P_->num_generators();
  // Ad-prefixes: sorted generator words of length < relation_ad_length.
  std::vector<std::vector<int>> prefixes{{}};
  for (int len = 1; len < opts_.relation_ad_length; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& p : prefixes)
      if (static_cast<int>(p.size()) == len - 1)
        for (int g = p.empty() ? 0 : p.back(); g < n; ++g) {
          auto q = p;
          q.push_back(g);
          next.push_back(std::move(q));
        }
    prefixes.insert(prefixes.end(), next.begin(), next.end());
  }
  const auto monomials = P_->enumerate_basis();
  for (const Relation& r : ideal) {
    // Ad(r) as raw words: Ad of a free monomial by Leibniz on its factors.
    std::vector<std::pair<Rational, RawWord>> ad_r;
    for (const auto& [c, m] : r) {
      if (m.empty()) continue;
      for (std::size_t k = 0; k < m.size(); ++k) {
        if (k > 0 && m[k] == m[k - 1]) continue;
        long mult = std::count(m.begin(), m.end(), m[k]);
        BasisId rest = m;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
        try {
          PoissonElem red = P_->reduce(rest);
          for (const auto& [rm, rc] : red.terms())
            ad_r.emplace_back(c * rc * mult, RawWord{Letter{Letter::ad, BasisId{m[k]}}, Letter{Letter::l, rm}});
        } catch (const TruncationOverflow&) {
          ad_r.clear();
          break;
        }
      }
    }
    if (ad_r.empty()) continue;
    for (const auto& prefix : prefixes)
      for (const BasisId& mono : monomials) {
        Scalars row;
        try {
          for (const auto& [c, word] : ad_r) {
            RawWord full;
            for (int g : prefix) full.push_back(Letter{Letter::ad, BasisId{g}});
            full.insert(full.end(), word.begin(), word.end());
            full.push_back(Letter{Letter::l, mono});
            for (const auto& [nw, nc] : normalize_scalar(full, Strategy::leftmost)) {
              auto [it, inserted] = row.try_emplace(nw, c * nc);
              if (!inserted) {
                it->second += c * nc;
                if (it->second == 0) row.erase(it);
              }
            }
          }
        } catch (const TruncationOverflow&) {
          continue;
        }
        relations_.insert(std::move(row));
      }
  }
}

Operator CendAlgebra::reduce(const Operator& A) const {
  if (relations_.rank() == 0) return A;
  std::map<int, std::map<OpWord, MPoly, OpWordLess>> by_d;
  for (const auto& [w, c] : A.terms()) {
    OpWord w0 = w;
    w0.d = 0;
    by_d[w.d][w0] += c;
  }
  Operator out;
  for (auto& [d, v] : by_d) {
    relations_.reduce_general(v);
    for (const auto& [w0, c] : v) {
      OpWord w = w0;
      w.d = d;
      out.add(w, c);
    }
  }
  return out;
}

Operator CendAlgebra::mul(const Operator& A, const Operator& B) const {
  Operator out;
  for (const auto& [wa, fa] : A.terms())
    for (const auto& [wb, fb] : B.terms()) {
      RawWord w = wa.letters();
      RawWord wbl = wb.letters();
      w.insert(w.end(), wbl.begin(), wbl.end());
      MPoly f = fa * fb;
      for (const auto& [nw, c] : normalize_scalar(w, Strategy::leftmost)) out.add(nw, f * c);
    }
  return reduce(out);
}

Operator CendAlgebra::lambda_product(const Operator& A, const Operator& B, const MPoly& param) const {
  const MPoly T = MPoly::var(Var::T), x = MPoly::var(Var::X);
  Operator out;
  for (const auto& [wa, fa] : A.terms()) {
    MPoly f = fa.substitute(Var::T, -param);
    for (const auto& [wb, fb] : B.terms()) {
      MPoly g = fb.substitute({{Var::T, T + param}, {Var::X, x + param}});
      RawWord w = wa.letters();
      RawWord wbl = wb.letters();
      w.insert(w.end(), wbl.begin(), wbl.end());
      MPoly fg = f * g;
      for (const auto& [nw, c] : normalize_scalar(w, Strategy::leftmost)) out.add(nw, fg * c);
    }
  }
  return reduce(out);
}

Operator CendAlgebra::n_product(const Operator& A, const Operator& B, unsigned n) const {
  Rational fact = 1;
  for (unsigned i = 2; i <= n; ++i) fact *= Rational(static_cast<long>(i));
  return lambda_product(A, B).coeff(Var::Lambda, n) * MPoly(fact);
}

std::size_t CendAlgebra::locality(const Operator& A, const Operator& B) const {
  Operator p = lambda_product(A, B);
  if (p.is_zero()) return 0;
  return static_cast<std::size_t>(p.degree(Var::Lambda) + 1);
}

PoissonElem CendAlgebra::apply(const OpWord& w, const PoissonElem& u) const {
  return apply(w.letters(), u);
}

PoissonElem CendAlgebra::apply(const RawWord& w, const PoissonElem& u) const {
  PoissonElem cur = u;
  for (auto it = w.rbegin(); it != w.rend() && !cur.is_zero(); ++it) {
    switch (it->kind) {
      case Letter::ad:
        cur = P_->bracket(P_->reduce(it->sub), cur);
        break;
      case Letter::l:
        cur = P_->product(P_->reduce(it->sub), cur);
        break;
      case Letter::d:
        cur = P_->derive(cur);
        break;
    }
  }
  return cur;
}

ModuleElem CendAlgebra::act(const Operator& A, const ModuleElem& u, const MPoly& param) const {
  const MPoly T = MPoly::var(Var::T);
  ModuleElem out;
  for (const auto& [w, f] : A.terms()) {
    MPoly fs = f.substitute({{Var::T, -param}, {Var::X, T}});
    for (const auto& [m, h] : u.terms()) {
      PoissonElem image = apply(w, PoissonElem::monomial(m));
      if (image.is_zero()) continue;
      MPoly coeff = fs * h.substitute(Var::T, T + param);
      out += ModuleElem::from(image, coeff);
    }
  }
  return out;
}

namespace {

std::string with_coefficient(const MPoly& c, const std::string& body, bool first) {
  std::string sign;
  MPoly mag = c;
  if (c.size() == 1 && c.terms().begin()->second < 0) {
    mag = -c;
    sign = first ? "-" : " - ";
  } else if (!first) {
    sign = " + ";
  }
  if (body.empty()) return sign + (first || mag.size() == 1 ? mag.to_compact() : "(" + mag.to_compact() + ")");
  if (mag == MPoly(1)) return sign + body;
  if (mag.size() == 1) return sign + mag.to_compact() + "·" + body;
  return sign + "(" + mag.to_compact() + ")·" + body;
}

}  // namespace

std::string CendAlgebra::render(const OpWord& w) const {
  if (w.is_identity()) return "id";
  std::string out;
  auto sep = [&] {
    if (!out.empty()) out += "·";
  };
  for (int g : w.ad) {
    sep();
    out += "Ad(" + P_->generator_name(g) + ")";
  }
  if (!w.l.empty()) {
    sep();
    out += "L(" + P_->render(w.l) + ")";
  }
  if (w.d > 0) {
    sep();
    out += w.d == 1 ? std::string("D") : "D^" + std::to_string(w.d);
  }
  return out;
}

std::string CendAlgebra::render(const Operator& A) const {
  if (A.is_zero()) return "0";
  std::string out;
  for (auto it = A.terms().rbegin(); it != A.terms().rend(); ++it)
    out += with_coefficient(it->second, it->first.is_identity() ? "" : render(it->first), out.empty());
  return out;
}

std::string CendAlgebra::render(const ModuleElem& u) const {
  if (u.is_zero()) return "0";
  std::string out;
  for (auto it = u.terms().rbegin(); it != u.terms().rend(); ++it)
    out += with_coefficient(it->second, it->first.empty() ? "" : P_->render(it->first), out.empty());
  return out;
}

}  // namespace gdconf
