#include "gdconf/poisson.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace gdconf {

NovikovEnvelope::NovikovEnvelope(const StructureTable& novikov, std::vector<std::string> names, int order_bound,
                                 int degree_bound, int max_order_slack)
    : DiffPoissonAlgebra(order_bound, degree_bound), novikov_(novikov), names_(std::move(names)), dim_(novikov.dim()) {
  if (order_bound < 1) throw std::invalid_argument("novikov_universal: order bound must be at least 1");
  if (max_order_slack < 1) throw std::invalid_argument("novikov_universal: order slack must be at least 1");
  CheckReport r = check_novikov(novikov_);
  if (!r.ok) throw InvalidAlgebra("novikov_universal: table is not Novikov", r);
  if (names_.empty()) names_ = default_basis_names(dim_);

  const std::size_t low_vars = dim_ * static_cast<std::size_t>(order_bound + 1);
  int repeats = 0;
  for (int k = order_bound + 1; k <= order_bound + max_order_slack; ++k) {
    const std::size_t nvars = dim_ * static_cast<std::size_t>(k + 1);
    std::vector<GPoly> gens;
    for (const Relation& rel : relations_up_to(k)) {
      GPoly f;
      for (const auto& [c, m] : rel) {
        Exponent e(nvars, 0);
        for (int g : m) ++e[static_cast<std::size_t>(g)];
        f[e] += c;
      }
      gens.push_back(std::move(f));
    }
    MonomialOrder order;
    for (std::size_t v = 0; v < nvars; ++v) {
      const int ord = static_cast<int>(v / dim_);
      order.eliminate.push_back(ord > order_bound ? 1 : 0);
      order.weight.push_back(ord + 1);
    }
    auto gb = std::make_unique<GroebnerBasis>(nvars, gens, order);
    // The order eliminates orders > K: an element whose leading monomial
    // avoids them has no such terms at all.
    std::vector<GPoly> low;
    for (std::size_t i = 0; i < gb->size(); ++i) {
      const Exponent lm = gb->leading(i);
      bool inside = true;
      for (std::size_t v = low_vars; v < nvars; ++v)
        if (lm[v] != 0) inside = false;
      if (!inside) continue;
      GPoly t;
      for (const auto& [m, c] : gb->element(i))
        t.emplace(Exponent(m.begin(), m.begin() + static_cast<std::ptrdiff_t>(low_vars)), c);
      low.push_back(std::move(t));
    }
    std::sort(low.begin(), low.end());
    repeats = (k > order_bound + 1 && low == truncated_) ? repeats + 1 : 0;
    truncated_ = std::move(low);
    basis_ = std::move(gb);
    ambient_order_ = k;
    if (repeats == 2) {
      stable_ = true;
      break;
    }
  }
}

Exponent NovikovEnvelope::exponent(const BasisId& m) const {
  Exponent e(dim_ * static_cast<std::size_t>(ambient_order_ + 1), 0);
  for (int g : m) ++e[static_cast<std::size_t>(g)];
  return e;
}

bool NovikovEnvelope::is_normal(const BasisId& m) const {
  if (max_order(m) > ambient_order_) return false;
  return basis_->is_standard(exponent(m));
}

std::vector<Relation> NovikovEnvelope::ideal_basis() const {
  std::vector<Relation> out;
  for (const GPoly& g : truncated_) {
    Relation r;
    for (const auto& [x, c] : g) {
      BasisId m;
      for (std::size_t i = 0; i < x.size(); ++i)
        for (int t = 0; t < x[i]; ++t) m.push_back(static_cast<int>(i));
      r.emplace_back(c, m);
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<std::string> NovikovEnvelope::truncated_basis() const {
  std::vector<std::string> out;
  for (const GPoly& g : truncated_) {
    PoissonElem e;
    for (const auto& [x, c] : g) {
      BasisId m;
      for (std::size_t i = 0; i < x.size(); ++i)
        for (int t = 0; t < x[i]; ++t) m.push_back(static_cast<int>(i));
      e += PoissonElem::monomial(m, c);
    }
    out.push_back(render(e));
  }
  return out;
}

std::string NovikovEnvelope::generator_name(int code) const {
  const std::string& base = names_[static_cast<std::size_t>(code) % dim_];
  int order = generator_order(code);
  return order == 0 ? base : base + "^(" + std::to_string(order) + ")";
}

// d^k(a·b' − a∘b) = Σ_t C(k,t) a^(t) b^(k+1−t) − (a∘b)^(k)
std::vector<Relation> NovikovEnvelope::relations_up_to(int order) const {
  std::vector<Relation> out;
  for (int k = 0; k + 1 <= order; ++k)
    for (std::size_t a = 0; a < dim_; ++a)
      for (std::size_t b = 0; b < dim_; ++b) {
        Relation r;
        for (int t = 0; t <= k; ++t) {
          BasisId m{code(a, t), code(b, k + 1 - t)};
          std::sort(m.begin(), m.end());
          r.emplace_back(Rational(binomial(k, t)), m);
        }
        for (std::size_t c = 0; c < dim_; ++c)
          if (novikov_.at(a, b, c) != 0) r.emplace_back(-novikov_.at(a, b, c), BasisId{code(c, k)});
        out.push_back(std::move(r));
      }
  return out;
}

std::vector<Relation> NovikovEnvelope::defining_relations() const { return relations_up_to(order_bound()); }

PoissonElem NovikovEnvelope::reduce(const BasisId& raw) const {
  BasisId m = raw;
  std::sort(m.begin(), m.end());
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = cache_.find(m);
    if (it != cache_.end()) return it->second;
  }
  if (max_order(m) > ambient_order_)
    throw TruncationOverflow("novikov_universal: derivative order exceeds ambient order " +
                             std::to_string(ambient_order_));
  GPoly v = basis_->normal_form(GPoly{{exponent(m), Rational(1)}});
  PoissonElem out;
  for (const auto& [x, c] : v) {
    BasisId t;
    for (std::size_t i = 0; i < x.size(); ++i)
      for (int r = 0; r < x[i]; ++r) t.push_back(static_cast<int>(i));
    if (max_order(t) > order_bound())
      throw TruncationOverflow("novikov_universal: derivative order exceeds order bound " +
                               std::to_string(order_bound()));
    if (static_cast<int>(t.size()) > degree_bound())
      throw TruncationOverflow("novikov_universal: degree " + std::to_string(t.size()) + " exceeds degree bound " +
                               std::to_string(degree_bound()));
    out += PoissonElem::monomial(t, c);
  }
  std::lock_guard<std::mutex> lock(mutex_);
  cache_.emplace(std::move(m), out);
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> NovikovEnvelope::redexes(const BasisId& raw) const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (generator_order(raw[i]) != 0 || (i > 0 && raw[i] == raw[i - 1])) continue;
    for (std::size_t j = 0; j < raw.size(); ++j) {
      if (generator_order(raw[j]) == 0 || (j > 0 && raw[j] == raw[j - 1])) continue;
      out.emplace_back(i, j);
    }
  }
  return out;
}

// a·b^(k+1) → (a∘b)^(k) − Σ_{i=1..k} C(k,i) a^(i) b^(k+1−i)
std::vector<std::pair<Rational, BasisId>> NovikovEnvelope::rewrite_once(const BasisId& raw, std::size_t i,
                                                                       std::size_t j) const {
  const auto a = static_cast<std::size_t>(raw[i]) % dim_;
  const auto b = static_cast<std::size_t>(raw[j]) % dim_;
  const int k = generator_order(raw[j]) - 1;
  BasisId rest;
  for (std::size_t t = 0; t < raw.size(); ++t)
    if (t != i && t != j) rest.push_back(raw[t]);
  std::vector<std::pair<Rational, BasisId>> out;
  auto with = [&](std::initializer_list<int> gens) {
    BasisId m = rest;
    m.insert(m.end(), gens);
    std::sort(m.begin(), m.end());
    return m;
  };
  for (std::size_t c = 0; c < dim_; ++c) {
    const Rational& coef = novikov_.at(a, b, c);
    if (coef != 0) out.emplace_back(coef, with({code(c, k)}));
  }
  for (int t = 1; t <= k; ++t)
    out.emplace_back(-Rational(binomial(k, t)), with({code(a, t), code(b, k + 1 - t)}));
  return out;
}

// Highest-order factor against the largest order-0 factor, recursively.
PoissonElem NovikovEnvelope::rewrite_normal_form(const BasisId& raw) const {
  BasisId m = raw;
  std::sort(m.begin(), m.end());
  if (redexes(m).empty()) return PoissonElem::monomial(std::move(m));
  std::size_t j = m.size() - 1;
  std::size_t i = 0;
  for (std::size_t t = 0; t < m.size(); ++t)
    if (generator_order(m[t]) == 0) i = t;
  PoissonElem out;
  for (const auto& [c, term] : rewrite_once(m, i, j)) out += rewrite_normal_form(term) * c;
  return out;
}

RewriteProbe NovikovEnvelope::rewrite_probe() const {
  RewriteProbe rep;
  const int n = num_generators();
  for (int x = 0; x < n; ++x)
    for (int y = x; y < n; ++y)
      for (int z = y; z < n; ++z) {
        BasisId m{x, y, z};
        auto rx = redexes(m);
        if (rx.size() < 2) continue;
        ++rep.overlaps_checked;
        PoissonElem first;
        for (std::size_t r = 0; r < rx.size(); ++r) {
          PoissonElem value;
          for (const auto& [c, term] : rewrite_once(m, rx[r].first, rx[r].second))
            value += rewrite_normal_form(term) * c;
          if (r == 0) {
            first = value;
          } else if (value != first && rep.confluent) {
            rep.confluent = false;
            rep.witness = render(m) + ": " + render(first) + " vs " + render(value);
          }
        }
      }
  return rep;
}

namespace {

// Raw bracket of two generators as free monomials.
std::vector<std::pair<Rational, BasisId>> raw_generator_bracket(const NovikovEnvelope& P, int x, int y) {
  const auto a = static_cast<std::size_t>(x) % P.dim();
  const auto b = static_cast<std::size_t>(y) % P.dim();
  const int n = P.generator_order(x), m = P.generator_order(y);
  std::vector<std::pair<Rational, BasisId>> out;
  auto push = [&](long c, int ga, int gb) {
    if (c == 0) return;
    BasisId mono{ga, gb};
    std::sort(mono.begin(), mono.end());
    out.emplace_back(Rational(c), mono);
  };
  push(m - 1, P.code(a, n + 1), y);
  push(-(n - 1), x, P.code(b, m + 1));
  return out;
}

}  // namespace

PoissonElem NovikovEnvelope::generator_bracket(int a, int b) const {
  PoissonElem out;
  for (const auto& [c, m] : raw_generator_bracket(*this, a, b)) out += reduce(m) * c;
  return out;
}

PoissonElem NovikovEnvelope::generator_derive(int a) const {
  if (generator_order(a) + 1 > order_bound())
    throw TruncationOverflow("novikov_universal: derivative order exceeds order bound " +
                             std::to_string(order_bound()));
  return generator(a + static_cast<int>(dim_));
}

PoissonElem NovikovEnvelope::free_bracket(const BasisId& x, const BasisId& y) const {
  PoissonElem out;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j)
      for (const auto& [c, m] : raw_generator_bracket(*this, x[i], y[j])) {
        BasisId raw = m;
        for (std::size_t k = 0; k < x.size(); ++k)
          if (k != i) raw.push_back(x[k]);
        for (std::size_t k = 0; k < y.size(); ++k)
          if (k != j) raw.push_back(y[k]);
        out += reduce(raw) * c;
      }
  check_bounds(out);
  return out;
}

std::shared_ptr<const NovikovEnvelope> novikov_universal(const StructureTable& novikov, std::vector<std::string> names,
                                                         int order_bound, int degree_bound) {
  return std::make_shared<NovikovEnvelope>(novikov, std::move(names), order_bound, degree_bound);
}

}  // namespace gdconf
