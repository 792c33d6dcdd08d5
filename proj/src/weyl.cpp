#include "gdconf/weyl.hpp"

#include <algorithm>

namespace gdconf {

Weyl Weyl::term(int i, int j, const MPoly& c) {
  Weyl out;
  out.add(i, j, c);
  return out;
}

MPoly Weyl::coeff(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? MPoly() : it->second;
}

void Weyl::add(int i, int j, const MPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace({i, j}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Weyl& Weyl::operator+=(const Weyl& o) {
  for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
  return *this;
}

Weyl& Weyl::operator-=(const Weyl& o) {
  for (const auto& [k, c] : o.terms_) add(k.first, k.second, -c);
  return *this;
}

Weyl& Weyl::operator*=(const MPoly& c) {
  Weyl out;
  for (const auto& [k, f] : terms_) out.add(k.first, k.second, f * c);
  *this = std::move(out);
  return *this;
}

// d^j p^k = Σ_r C(j,r)·k!/(k−r)!·p^(k−r) d^(j−r)
Weyl operator*(const Weyl& a, const Weyl& b) {
  Weyl out;
  for (const auto& [ka, fa] : a.terms_)
    for (const auto& [kb, fb] : b.terms_) {
      const int j = ka.second, k = kb.first;
      MPoly f = fa * fb;
      Rational falling = 1;
      for (int r = 0; r <= std::min(j, k); ++r) {
        if (r > 0) falling *= Rational(static_cast<long>(k - r + 1));
        Rational c = Rational(binomial(j, r)) * falling;
        out.add(ka.first + k - r, j - r + kb.second, f * c);
      }
    }
  return out;
}

Weyl Weyl::pow(unsigned n) const {
  Weyl out = one();
  for (unsigned i = 0; i < n; ++i) out = out * *this;
  return out;
}

int Weyl::degree(Var v) const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, c.degree(v));
  return d;
}

Weyl Weyl::coeff(Var v, unsigned power) const {
  Weyl out;
  for (const auto& [k, c] : terms_) out.add(k.first, k.second, c.coeff(v, power));
  return out;
}

Weyl Weyl::substitute(const std::vector<std::pair<Var, MPoly>>& bindings) const {
  Weyl out;
  for (const auto& [k, c] : terms_) out.add(k.first, k.second, c.substitute(bindings));
  return out;
}

namespace {

std::string letters(int i, int j) {
  std::string out;
  if (i > 0) out += i == 1 ? std::string("p") : "p^" + std::to_string(i);
  if (j > 0) {
    if (!out.empty()) out += "·";
    out += j == 1 ? std::string("d") : "d^" + std::to_string(j);
  }
  return out;
}

std::string join_terms(const std::vector<std::pair<MPoly, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [c, body] : terms) {
    bool first = out.empty();
    MPoly mag = c;
    std::string sign = first ? "" : " + ";
    if (c.size() == 1 && c.terms().begin()->second < 0) {
      mag = -c;
      sign = first ? "-" : " - ";
    }
    if (body.empty())
      out += sign + (first || mag.size() == 1 ? mag.to_compact() : "(" + mag.to_compact() + ")");
    else if (mag == MPoly(1))
      out += sign + body;
    else if (mag.size() == 1)
      out += sign + mag.to_compact() + "·" + body;
    else
      out += sign + "(" + mag.to_compact() + ")·" + body;
  }
  return out;
}

}  // namespace

std::string Weyl::to_string() const {
  std::vector<std::pair<MPoly, std::string>> terms;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
    terms.emplace_back(it->second, letters(it->first.first, it->first.second));
  return join_terms(terms);
}

std::string render(const VPoly& u) {
  std::vector<std::pair<MPoly, std::string>> terms;
  for (auto it = u.rbegin(); it != u.rend(); ++it) {
    if (it->second.is_zero()) continue;
    std::string body = it->first == 0 ? "" : it->first == 1 ? "v" : "v^" + std::to_string(it->first);
    terms.emplace_back(it->second, body);
  }
  return join_terms(terms);
}

Weyl weyl_lambda_product(const Weyl& A, const Weyl& B, const MPoly& param) {
  const MPoly T = MPoly::var(Var::T), x = MPoly::var(Var::X);
  Weyl out;
  for (const auto& [ka, fa] : A.terms()) {
    MPoly f = fa.substitute(Var::T, -param);
    for (const auto& [kb, fb] : B.terms()) {
      MPoly g = fb.substitute({{Var::T, T + param}, {Var::X, x + param}});
      out += Weyl::term(ka.first, ka.second, f) * Weyl::term(kb.first, kb.second, g);
    }
  }
  return out;
}

Weyl weyl_n_product(const Weyl& A, const Weyl& B, unsigned n) {
  Rational fact = 1;
  for (unsigned i = 2; i <= n; ++i) fact *= Rational(static_cast<long>(i));
  return weyl_lambda_product(A, B).coeff(Var::Lambda, n) * MPoly(fact);
}

VPoly weyl_act(const Weyl& A, const VPoly& u, const MPoly& param) {
  const MPoly T = MPoly::var(Var::T);
  VPoly out;
  for (const auto& [k, f] : A.terms()) {
    MPoly fs = f.substitute({{Var::T, -param}, {Var::X, T}});
    const auto [i, j] = k;
    for (const auto& [e, h] : u) {
      if (e < j) continue;
      Rational falling = 1;
      for (int r = 0; r < j; ++r) falling *= Rational(static_cast<long>(e - r));
      MPoly c = fs * h.substitute(Var::T, T + param) * falling;
      auto& slot = out[e - j + i];
      slot += c;
    }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

Operator to_operator(const Weyl& A) {
  Operator out;
  for (const auto& [k, c] : A.terms()) {
    OpWord w;
    w.l.assign(static_cast<std::size_t>(k.first), 0);
    w.d = k.second;
    out.add(w, c);
  }
  return out;
}

std::optional<Weyl> to_weyl(const Operator& A) {
  Weyl out;
  for (const auto& [w, c] : A.terms()) {
    if (!w.ad.empty()) return std::nullopt;
    if (std::any_of(w.l.begin(), w.l.end(), [](int g) { return g != 0; })) return std::nullopt;
    out.add(static_cast<int>(w.l.size()), w.d, c);
  }
  return out;
}

}  // namespace gdconf
