#include "gdconf/linalg.hpp"
#include "gdconf/poisson.hpp"

#include <algorithm>
#include <numeric>

namespace gdconf {

namespace {

using Word = FreePoissonRank1::Word;

bool is_lyndon(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (!std::lexicographical_compare(w.begin(), w.end(), w.begin() + static_cast<std::ptrdiff_t>(i), w.end()))
      return false;
  return !w.empty();
}

// w = u·v with v the longest proper Lyndon suffix.
std::pair<Word, Word> standard_factorization(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i) {
    Word v(w.begin() + static_cast<std::ptrdiff_t>(i), w.end());
    if (is_lyndon(v)) return {Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i)), v};
  }
  return {w, {}};
}

std::string letter_name(int n) { return n == 0 ? "v" : "v^(" + std::to_string(n) + ")"; }

std::string word_name(const Word& w) {
  if (w.size() == 1) return letter_name(w[0]);
  auto [u, v] = standard_factorization(w);
  return "{" + word_name(u) + ", " + word_name(v) + "}";
}

int word_order(const Word& w) { return std::accumulate(w.begin(), w.end(), 0); }

}  // namespace

FreePoissonRank1::FreePoissonRank1(int order_bound, int degree_bound, int total_order_cap)
    : DiffPoissonAlgebra(order_bound, degree_bound), total_order_cap_(total_order_cap) {
  const int alphabet = order_bound + 1;
  // Duval's generation of Lyndon words in lexicographic order.
  Word w{-1};
  while (!w.empty()) {
    ++w.back();
    if (total_order_cap < 0 || word_order(w) <= total_order_cap) words_.push_back(w);
    const std::size_t m = w.size();
    while (w.size() < static_cast<std::size_t>(degree_bound)) w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back() == alphabet - 1) w.pop_back();
  }
  std::stable_sort(words_.begin(), words_.end(),
                   [](const Word& a, const Word& b) { return a.size() < b.size(); });
  for (std::size_t i = 0; i < words_.size(); ++i) index_.emplace(words_[i], static_cast<int>(i));
}

std::string FreePoissonRank1::generator_name(int code) const { return word_name(words_[code]); }

int FreePoissonRank1::generator_order(int code) const {
  const Word& w = words_[code];
  return *std::max_element(w.begin(), w.end());
}

int FreePoissonRank1::letter(int n) const {
  auto it = index_.find(Word{n});
  if (it == index_.end())
    throw TruncationOverflow("free_pd_quotient_rank1: v^(" + std::to_string(n) + ") exceeds order bound " +
                             std::to_string(order_bound()));
  return it->second;
}

std::pair<int, int> FreePoissonRank1::bidegree(const BasisId& m) const {
  int count = 0, order = 0;
  for (int g : m) {
    count += static_cast<int>(words_[g].size());
    order += word_order(words_[g]);
  }
  return {count, order};
}

const FreePoissonRank1::AssocPoly& FreePoissonRank1::expansion(int code) const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = expansions_.find(code);
    if (it != expansions_.end()) return it->second;
  }
  AssocPoly p;
  const Word& w = words_[code];
  if (w.size() == 1) {
    p.emplace(w, 1);
  } else {
    auto [u, v] = standard_factorization(w);
    const AssocPoly& pu = expansion(index_.at(u));
    const AssocPoly& pv = expansion(index_.at(v));
    auto add = [&](const Word& a, const Word& b, const Rational& c) {
      Word ab = a;
      ab.insert(ab.end(), b.begin(), b.end());
      auto [it, inserted] = p.try_emplace(ab, c);
      if (!inserted) {
        it->second += c;
        if (it->second == 0) p.erase(it);
      }
    };
    for (const auto& [a, ca] : pu)
      for (const auto& [b, cb] : pv) {
        add(a, b, ca * cb);
        add(b, a, -ca * cb);
      }
  }
  std::lock_guard<std::mutex> lock(mutex_);
  return expansions_.emplace(code, std::move(p)).first->second;
}

// Lie polynomial → Lyndon basis, peeling off the lexicographically smallest
// word each time (P_w = w + larger words).
PoissonElem FreePoissonRank1::decompose(AssocPoly p) const {
  PoissonElem out;
  while (!p.empty()) {
    const Word w = p.begin()->first;
    const Rational c = p.begin()->second;
    if (static_cast<int>(w.size()) > degree_bound())
      throw TruncationOverflow("free_pd_quotient_rank1: bracket length exceeds degree bound " +
                               std::to_string(degree_bound()));
    for (int n : w)
      if (n > order_bound())
        throw TruncationOverflow("free_pd_quotient_rank1: derivative order exceeds order bound " +
                                 std::to_string(order_bound()));
    if (total_order_cap_ >= 0 && word_order(w) > total_order_cap_)
      throw TruncationOverflow("free_pd_quotient_rank1: total order exceeds cap");
    auto it = index_.find(w);
    if (it == index_.end()) throw std::logic_error("free_pd_quotient_rank1: not a Lie polynomial");
    out.add({it->second}, c);
    for (const auto& [u, cu] : expansion(it->second)) {
      auto [jt, inserted] = p.try_emplace(u, -c * cu);
      if (!inserted) {
        jt->second -= c * cu;
        if (jt->second == 0) p.erase(jt);
      }
    }
  }
  return out;
}

PoissonElem FreePoissonRank1::generator_bracket(int a, int b) const {
  if (a == b) return {};
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = brackets_.find({a, b});
    if (it != brackets_.end()) return it->second;
  }
  if (words_[a].size() + words_[b].size() > static_cast<std::size_t>(degree_bound()))
    throw TruncationOverflow("free_pd_quotient_rank1: bracket length exceeds degree bound " +
                             std::to_string(degree_bound()));
  const AssocPoly& pa = expansion(a);
  const AssocPoly& pb = expansion(b);
  AssocPoly p;
  auto add = [&](const Word& x, const Word& y, const Rational& c) {
    Word xy = x;
    xy.insert(xy.end(), y.begin(), y.end());
    auto [it, inserted] = p.try_emplace(xy, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) p.erase(it);
    }
  };
  for (const auto& [x, cx] : pa)
    for (const auto& [y, cy] : pb) {
      add(x, y, cx * cy);
      add(y, x, -cx * cy);
    }
  PoissonElem out = decompose(std::move(p));
  std::lock_guard<std::mutex> lock(mutex_);
  brackets_.emplace(std::make_pair(a, b), out);
  return out;
}

PoissonElem FreePoissonRank1::generator_derive(int a) const {
  AssocPoly p;
  for (const auto& [w, c] : expansion(a))
    for (std::size_t i = 0; i < w.size(); ++i) {
      Word u = w;
      ++u[i];
      auto [it, inserted] = p.try_emplace(u, c);
      if (!inserted) {
        it->second += c;
        if (it->second == 0) p.erase(it);
      }
    }
  return decompose(std::move(p));
}

std::shared_ptr<const FreePoissonRank1> free_pd_quotient_rank1(int order_bound, int degree_bound) {
  if (order_bound < 2 || degree_bound < 2)
    throw TruncationOverflow("free_pd_quotient_rank1: bounds must be at least (2, 2)");
  return std::make_shared<FreePoissonRank1>(order_bound, degree_bound);
}

namespace {

// Graded piece of I_V of one bidegree, inside an ambient free model whose
// letters go up to the component's total order. Layers t = number of
// adjoint letters are added on demand and kept.
class IdealComponent {
 public:
  IdealComponent(int count, int order) : count_(count), order_(order), amb_(order, count, order) {
    for (const auto& m : amb_.enumerate_basis(order_, count_ - 2)) buckets_[amb_.bidegree(m)].push_back(m);
    PoissonElem base = amb_.product(amb_.generator(amb_.letter(0)), amb_.generator(amb_.letter(1)));
    for (int k = 0; 1 + k <= order_; ++k) {
      layer_.emplace_back(base, 1 + k);
      if (2 + k <= order_) base = amb_.derive(base);
    }
  }

  const FreePoissonRank1& ambient() const { return amb_; }

  MembershipResult test(const PoissonElem& target) {
    std::lock_guard<std::mutex> lock(mutex_);
    MembershipResult r;
    auto vec = to_vec(target);
    while (true) {
      r.spanning_size = spanning_;
      r.rank = echelon_.rank();
      if (echelon_.contains(vec)) {
        r.status = Membership::member;
        return r;
      }
      if (2 + next_t_ > count_) {
        r.status = Membership::not_member;
        return r;
      }
      add_layer();
    }
  }

 private:
  void add_layer() {
    if (next_t_ > 0) {
      std::vector<std::pair<PoissonElem, int>> next;
      for (const auto& [g, og] : layer_)
        for (int n = 0; og + n <= order_; ++n) {
          PoissonElem h = amb_.bracket(amb_.generator(amb_.letter(n)), g);
          if (!h.is_zero()) next.emplace_back(std::move(h), og + n);
        }
      layer_ = std::move(next);
    }
    for (const auto& [g, og] : layer_) {
      auto it = buckets_.find({count_ - 2 - next_t_, order_ - og});
      if (it == buckets_.end()) continue;
      for (const auto& m : it->second) {
        ++spanning_;
        echelon_.insert(to_vec(amb_.product(g, PoissonElem::monomial(m))));
      }
    }
    ++next_t_;
  }

  static SparseVec<BasisId, BasisLess> to_vec(const PoissonElem& e) {
    return SparseVec<BasisId, BasisLess>(e.terms().begin(), e.terms().end());
  }

  int count_, order_;
  FreePoissonRank1 amb_;
  std::map<std::pair<int, int>, std::vector<BasisId>> buckets_;
  std::vector<std::pair<PoissonElem, int>> layer_;
  int next_t_ = 0;
  std::size_t spanning_ = 0;
  Echelon<BasisId, BasisLess> echelon_;
  std::mutex mutex_;
};

IdealComponent& component(int count, int order) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::unique_ptr<IdealComponent>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[{count, order}];
  if (!slot) slot = std::make_unique<IdealComponent>(count, order);
  return *slot;
}

}  // namespace

int FreePoissonRank1::code_of(const Word& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) throw TruncationOverflow("free_pd_quotient_rank1: word outside the model");
  return it->second;
}

MembershipResult FreePoissonRank1::ideal_member(const PoissonElem& f) const {
  std::map<std::pair<int, int>, PoissonElem> components;
  for (const auto& [m, c] : f.terms()) components[bidegree(m)].add(m, c);
  MembershipResult total;
  total.status = Membership::member;
  for (const auto& [deg, part] : components) {
    const auto [count, order] = deg;
    if (count < 2 || order < 1) {
      total.status = Membership::not_member;
      return total;
    }
    IdealComponent& comp = component(count, order);
    const auto& amb = comp.ambient();
    PoissonElem target;
    for (const auto& [m, c] : part.terms()) {
      BasisId mm;
      for (int g : m) mm.push_back(amb.code_of(words_[g]));
      std::sort(mm.begin(), mm.end());
      target.add(mm, c);
    }
    MembershipResult r = comp.test(target);
    total.spanning_size += r.spanning_size;
    total.rank += r.rank;
    if (r.status != Membership::member) {
      total.status = r.status;
      return total;
    }
  }
  return total;
}

bool Lemma2Report::ok() const {
  for (const auto& it : items)
    if (it.status != Membership::member) return false;
  return corollary_failures.empty();
}

Lemma2Report lemma2_certificate(const FreePoissonRank1& nested, const FreePoissonRank1& sweep,
                                const Lemma2Options& opts) {
  Lemma2Report rep;
  auto v_of = [](const FreePoissonRank1& P, int n) { return P.generator(P.letter(n)); };
  auto certify = [&](const FreePoissonRank1& P, const PoissonElem& inner, std::string label) {
    const PoissonElem v = v_of(P, 0);
    PoissonElem e = P.product(P.bracket(v, inner), v);
    Lemma2Item item{std::move(label), P.render(e), P.ideal_member(e).status};
    return item;
  };

  for (int k = 0; k <= opts.base_k_max; ++k)
    rep.items.push_back(certify(nested, v_of(nested, k + 1), "{v, " + letter_name(k + 1) + "}·v"));

  for (int m = 1; m <= opts.nest_depth; ++m) {
    std::vector<int> ks(static_cast<std::size_t>(m), 0);
    while (true) {
      PoissonElem u = v_of(nested, ks.back());
      std::string label = letter_name(ks.back());
      for (int i = m - 2; i >= 0; --i) {
        u = nested.bracket(v_of(nested, ks[static_cast<std::size_t>(i)]), u);
        label = "{" + letter_name(ks[static_cast<std::size_t>(i)]) + ", " + label + "}";
      }
      rep.items.push_back(certify(nested, u, "{v, " + label + "}·v"));
      int pos = m - 1;
      while (pos >= 0 && ks[static_cast<std::size_t>(pos)] == opts.nest_k_max) ks[static_cast<std::size_t>(pos--)] = 0;
      if (pos < 0) break;
      ++ks[static_cast<std::size_t>(pos)];
    }
  }

  for (const auto& f : sweep.enumerate_basis(opts.f_order_bound, opts.f_degree_bound)) {
    try {
      Lemma2Item item = certify(sweep, PoissonElem::monomial(f), "{v, " + sweep.render(f) + "}·v");
      if (item.status == Membership::member)
        ++rep.corollary_checked;
      else
        rep.corollary_failures.push_back(std::move(item));
    } catch (const TruncationOverflow&) {
      ++rep.corollary_skipped;
    }
  }
  return rep;
}

}  // namespace gdconf
