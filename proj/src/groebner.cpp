#include "gdconf/groebner.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gdconf {

namespace {

using Key = GroebnerBasis::Key;
using Poly = GroebnerBasis::Poly;

// Header entries are linear in the exponent, so divisibility and shifting
// can work on whole keys.
bool divides(const Key& a, const Key& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

bool coprime(const Key& a, const Key& b) {
  for (std::size_t i = 2; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) return false;
  return true;
}

int total_degree(const Key& a) {
  int d = 0;
  for (std::size_t i = 2; i < a.size(); ++i) d += a[i];
  return d;
}

const Key& lead(const Poly& f) { return std::prev(f.end())->first; }

void make_monic(Poly& f) {
  if (f.empty()) return;
  Rational inv = 1 / std::prev(f.end())->second;
  for (auto& [m, c] : f) c *= inv;
}

// f −= c · x^shift · g
void sub_shifted(Poly& f, const Rational& c, const Key& shift, const Poly& g) {
  for (const auto& [m, gc] : g) {
    Key e = m;
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += shift[i];
    auto [it, inserted] = f.try_emplace(std::move(e), -c * gc);
    if (!inserted) {
      it->second -= c * gc;
      if (it->second == 0) f.erase(it);
    }
  }
}

// Full reduction against polys[idx].
Poly reduce_against(Poly f, const std::vector<Poly>& polys, const std::vector<std::size_t>& idx) {
  Poly rem;
  while (!f.empty()) {
    auto top = std::prev(f.end());
    const Poly* hit = nullptr;
    for (std::size_t i : idx)
      if (divides(lead(polys[i]), top->first)) {
        hit = &polys[i];
        break;
      }
    if (hit == nullptr) {
      rem.insert(rem.begin(), *top);
      f.erase(top);
      continue;
    }
    Key shift = top->first;
    const Key& lm = lead(*hit);
    for (std::size_t i = 0; i < shift.size(); ++i) shift[i] -= lm[i];
    Rational c = top->second / std::prev(hit->end())->second;
    sub_shifted(f, c, shift, *hit);
  }
  return rem;
}

Poly spoly(const Poly& f, const Poly& g, const Key& l) {
  Key sf = l, sg = l;
  for (std::size_t i = 0; i < l.size(); ++i) {
    sf[i] -= lead(f)[i];
    sg[i] -= lead(g)[i];
  }
  Poly out;
  sub_shifted(out, Rational(-1) / std::prev(f.end())->second, sf, f);
  sub_shifted(out, Rational(1) / std::prev(g.end())->second, sg, g);
  return out;
}

struct Pair {
  int sugar;
  Key lcm;
  std::size_t i, j;
};

}  // namespace

GroebnerBasis::GroebnerBasis(std::size_t nvars, const std::vector<GPoly>& generators, MonomialOrder order)
    : nvars_(nvars), order_(std::move(order)) {
  order_.eliminate.resize(nvars, 0);
  order_.weight.resize(nvars, 0);
  // lcm of keys, header recomputed
  auto lcm = [&](const Key& a, const Key& b) {
    Key out(a.size());
    out[0] = out[1] = 0;
    for (std::size_t i = 2; i < a.size(); ++i) {
      out[i] = std::max(a[i], b[i]);
      std::size_t v = nvars_ - 1 - (i - 2);
      out[0] += order_.eliminate[v] * out[i];
      out[1] += order_.weight[v] * out[i];
    }
    return out;
  };
  std::vector<Poly> polys;
  std::vector<int> sugar;
  std::vector<std::size_t> active;
  std::vector<Pair> pairs;

  auto update = [&](std::size_t h) {
    const Key& lh = lead(polys[h]);
    std::vector<std::size_t> C(active), D;
    // Gebauer–Möller: keep (h,g) only if no other new pair has a smaller lcm dividing it.
    for (std::size_t a = 0; a < C.size(); ++a) {
      std::size_t g1 = C[a];
      Key l1 = lcm(lh, lead(polys[g1]));
      bool keep = coprime(lh, lead(polys[g1]));
      if (!keep) {
        keep = true;
        for (std::size_t b = 0; b < C.size() && keep; ++b)
          if (b > a && divides(lcm(lh, lead(polys[C[b]])), l1)) keep = false;
        for (std::size_t g2 : D)
          if (keep && divides(lcm(lh, lead(polys[g2])), l1)) keep = false;
      }
      if (keep) D.push_back(g1);
    }
    std::vector<Pair> next;
    for (const Pair& p : pairs) {
      bool drop = divides(lh, p.lcm) && lcm(lead(polys[p.i]), lh) != p.lcm && lcm(lh, lead(polys[p.j])) != p.lcm;
      if (!drop) next.push_back(p);
    }
    for (std::size_t g : D) {
      if (coprime(lh, lead(polys[g]))) continue;
      Key l = lcm(lh, lead(polys[g]));
      int s = std::max(sugar[h] + total_degree(l) - total_degree(lh),
                       sugar[g] + total_degree(l) - total_degree(lead(polys[g])));
      next.push_back(Pair{s, l, g, h});
    }
    pairs = std::move(next);
    std::vector<std::size_t> keep_active;
    for (std::size_t g : active)
      if (!divides(lh, lead(polys[g]))) keep_active.push_back(g);
    keep_active.push_back(h);
    active = std::move(keep_active);
  };

  auto add = [&](Poly f, int s) {
    make_monic(f);
    polys.push_back(std::move(f));
    sugar.push_back(s);
    update(polys.size() - 1);
  };

  for (const GPoly& g0 : generators) {
    Poly g;
    for (const auto& [m, c] : g0) {
      if (m.size() != nvars) throw std::invalid_argument("groebner: exponent length mismatch");
      if (c != 0) g[key(m)] += c;
    }
    if (g.empty()) continue;
    Poly r = reduce_against(g, polys, active);
    if (r.empty()) continue;
    int s = 0;
    for (const auto& [m, c] : r) s = std::max(s, total_degree(m));
    add(std::move(r), s);
  }

  while (!pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
      if (a.sugar != b.sugar) return a.sugar < b.sugar;
      return a.lcm < b.lcm;
    });
    Pair p = *best;
    pairs.erase(best);
    ++pairs_reduced_;
    Poly r = reduce_against(spoly(polys[p.i], polys[p.j], p.lcm), polys, active);
    if (!r.empty()) add(std::move(r), p.sugar);
  }

  // Interreduce.
  std::sort(active.begin(), active.end(),
            [&](std::size_t a, std::size_t b) { return lead(polys[a]) < lead(polys[b]); });
  for (std::size_t a = 0; a < active.size(); ++a) {
    std::vector<std::size_t> others;
    for (std::size_t b = 0; b < active.size(); ++b)
      if (b != a) others.push_back(active[b]);
    Poly f = polys[active[a]];
    auto top = *std::prev(f.end());
    f.erase(std::prev(f.end()));
    Poly r = reduce_against(std::move(f), polys, others);
    r.insert(top);
    polys[active[a]] = std::move(r);
  }
  for (std::size_t a : active) basis_.push_back(polys[a]);
}

GroebnerBasis::Key GroebnerBasis::key(const Exponent& e) const {
  Key k(e.size() + 2, 0);
  for (std::size_t v = 0; v < e.size(); ++v) {
    k[0] += order_.eliminate[v] * e[v];
    k[1] += order_.weight[v] * e[v];
    k[2 + (e.size() - 1 - v)] = e[v];
  }
  return k;
}

Exponent GroebnerBasis::exponent(const Key& k) const {
  Exponent e(nvars_);
  for (std::size_t v = 0; v < nvars_; ++v) e[v] = k[2 + (nvars_ - 1 - v)];
  return e;
}

GPoly GroebnerBasis::element(std::size_t i) const {
  GPoly out;
  for (const auto& [k, c] : basis_[i]) out.emplace(exponent(k), c);
  return out;
}

Exponent GroebnerBasis::leading(std::size_t i) const { return exponent(lead(basis_[i])); }

GPoly GroebnerBasis::normal_form(const GPoly& f) const {
  Poly g;
  for (const auto& [m, c] : f)
    if (c != 0) g[key(m)] += c;
  std::vector<std::size_t> idx(basis_.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  GPoly out;
  for (const auto& [k, c] : reduce_against(std::move(g), basis_, idx))
    if (c != 0) out.emplace(exponent(k), c);
  return out;
}

bool GroebnerBasis::is_standard(const Exponent& m) const {
  Key k = key(m);
  for (const Poly& g : basis_)
    if (divides(lead(g), k)) return false;
  return true;
}

}  // namespace gdconf
