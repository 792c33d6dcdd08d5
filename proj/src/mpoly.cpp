#include "gdconf/mpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace gdconf {

const char* var_name(Var v) {
  switch (v) {
    case Var::T: return "T";
    case Var::X: return "x";
    case Var::Lambda: return "λ";
    case Var::Mu: return "μ";
  }
  return "?";
}

namespace {

int total(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

std::string monomial_string(const Exponents& e, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < kNumVars; ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += sep;
    out += var_name(static_cast<Var>(i));
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

}  // namespace

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
  int da = total(a), db = total(b);
  if (da != db) return da > db;
  return a > b;
}

MPoly::MPoly(const Rational& c) { add_term(Exponents{}, c); }

MPoly MPoly::var(Var v, unsigned power) {
  Exponents e{};
  e[static_cast<std::size_t>(v)] = static_cast<std::uint16_t>(power);
  return monomial(e, 1);
}

MPoly MPoly::monomial(const Exponents& e, const Rational& c) {
  MPoly p;
  p.add_term(e, c);
  return p;
}

void MPoly::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) {
    it->second.canonicalize();
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{});
}

Rational MPoly::constant_term() const {
  auto it = terms_.find(Exponents{});
  return it == terms_.end() ? Rational(0) : it->second;
}

int MPoly::degree(Var v) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[static_cast<std::size_t>(v)]));
  return d;
}

int MPoly::total_degree() const { return terms_.empty() ? -1 : total(terms_.begin()->first); }

MPoly& MPoly::operator+=(const MPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e;
      for (std::size_t i = 0; i < kNumVars; ++i) e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
      r.add_term(e, ca * cb);
    }
  return r;
}

MPoly& MPoly::operator*=(const MPoly& o) { return *this = *this * o; }

MPoly& MPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& [e, v] : r.terms_) v = -v;
  return r;
}

MPoly MPoly::pow(unsigned n) const {
  MPoly result(1), base = *this;
  while (n) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n) base *= base;
  }
  return result;
}

MPoly MPoly::coeff(Var v, unsigned power) const {
  MPoly r;
  auto idx = static_cast<std::size_t>(v);
  for (const auto& [e, c] : terms_) {
    if (e[idx] != power) continue;
    Exponents f = e;
    f[idx] = 0;
    r.add_term(f, c);
  }
  return r;
}

MPoly MPoly::substitute(const std::vector<std::pair<Var, MPoly>>& bindings) const {
  std::array<const MPoly*, kNumVars> bound{};
  for (const auto& [v, p] : bindings) bound[static_cast<std::size_t>(v)] = &p;
  std::array<std::vector<MPoly>, kNumVars> powers;
  auto power_of = [&](std::size_t i, unsigned k) -> const MPoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.emplace_back(1);
    while (cache.size() <= k) cache.push_back(cache.back() * *bound[i]);
    return cache[k];
  };
  MPoly r;
  for (const auto& [e, c] : terms_) {
    Exponents kept{};
    MPoly term(c);
    for (std::size_t i = 0; i < kNumVars; ++i) {
      if (bound[i] == nullptr)
        kept[i] = e[i];
      else if (e[i] > 0)
        term = term * power_of(i, e[i]);
    }
    r += term * MPoly::monomial(kept, 1);
  }
  return r;
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::string mono = monomial_string(e, "*");
    if (mono.empty())
      os << gdconf::to_string(mag);
    else if (mag == 1)
      os << mono;
    else
      os << gdconf::to_string(mag) << "*" << mono;
  }
  return os.str();
}

std::string MPoly::to_compact() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = abs(c);
    if (c < 0)
      os << "-";
    else if (!first)
      os << "+";
    first = false;
    std::string mono = monomial_string(e, "");
    if (mono.empty())
      os << gdconf::to_string(mag);
    else if (mag == 1)
      os << mono;
    else
      os << gdconf::to_string(mag) << mono;
  }
  return os.str();
}

bool operator<(const MPoly& a, const MPoly& b) {
  return std::lexicographical_compare(
      a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
      [](const auto& x, const auto& y) {
        if (x.first != y.first) return GrlexGreater{}(x.first, y.first);
        return x.second < y.second;
      });
}

}  // namespace gdconf
