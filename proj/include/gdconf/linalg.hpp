#pragma once

#include "gdconf/rational.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace gdconf {

/// Sparse vector over ℚ indexed by an ordered key type.
template <class Key, class Less = std::less<Key>>
using SparseVec = std::map<Key, Rational, Less>;

template <class Key, class Less>
void axpy(SparseVec<Key, Less>& y, const Rational& a, const SparseVec<Key, Less>& x) {
  if (a == 0) return;
  for (const auto& [k, c] : x) {
    auto [it, inserted] = y.try_emplace(k, a * c);
    if (!inserted) {
      it->second += a * c;
      if (it->second == 0) y.erase(it);
    }
  }
}

/// Echelon basis of a subspace, pivot = largest key of a row. reduce()
/// removes every pivot key, which yields a canonical representative of the
/// coset modulo the span.
template <class Key, class Less = std::less<Key>>
class Echelon {
 public:
  using Vec = SparseVec<Key, Less>;

  std::size_t rank() const { return rows_.size(); }
  const std::map<Key, Vec, Less>& rows() const { return rows_; }

  // Reduces v in place; afterwards v mentions no pivot.
  void reduce(Vec& v) const {
    // Walk from the largest key down; reduction only adds smaller keys.
    auto it = v.end();
    while (it != v.begin()) {
      --it;
      auto row = rows_.find(it->first);
      if (row == rows_.end()) continue;
      Key k = it->first;
      Rational c = it->second;
      axpy(v, Rational(-c), row->second);
      it = v.lower_bound(k);
    }
  }

  // Same for vectors whose coefficients live in a ℚ-vector space C
  // (e.g. polynomials); C must support c * Rational, +=, -= and is_zero().
  template <class C>
  void reduce_general(std::map<Key, C, Less>& v) const {
    auto it = v.end();
    while (it != v.begin()) {
      --it;
      auto row = rows_.find(it->first);
      if (row == rows_.end()) continue;
      Key k = it->first;
      C c = it->second;
      for (const auto& [rk, rc] : row->second) {
        auto [jt, inserted] = v.try_emplace(rk);
        jt->second -= c * rc;
        if (jt->second.is_zero()) v.erase(jt);
      }
      it = v.lower_bound(k);
    }
  }

  bool contains(Vec v) const {
    reduce(v);
    return v.empty();
  }

  // Adds v to the span; returns false if it was already there. Rows are
  // kept in semi-echelon form (distinct leading keys); that already makes
  // the reduced representative unique.
  bool insert(Vec v) {
    reduce(v);
    if (v.empty()) return false;
    auto pivot = std::prev(v.end());
    Rational inv = 1 / pivot->second;
    for (auto& [k, c] : v) c *= inv;
    const Key pk = pivot->first;
    rows_.emplace(pk, std::move(v));
    return true;
  }

  bool is_pivot(const Key& k) const { return rows_.count(k) != 0; }

 private:
  std::map<Key, Vec, Less> rows_;
};

/// Echelon basis that remembers how each row was built from the inserted
/// vectors, so membership comes with a certificate.
template <class Key, class Less = std::less<Key>>
class TrackedEchelon {
 public:
  using Vec = SparseVec<Key, Less>;
  using Combo = std::map<std::size_t, Rational>;

  std::size_t rank() const { return rows_.size(); }
  std::size_t inserted() const { return count_; }

  bool insert(Vec v) {
    Combo combo{{count_++, Rational(1)}};
    reduce(v, combo);
    if (v.empty()) return false;
    auto pivot = std::prev(v.end());
    Rational inv = 1 / pivot->second;
    for (auto& [k, c] : v) c *= inv;
    for (auto& [i, c] : combo) c *= inv;
    rows_.emplace(pivot->first, Row{std::move(v), std::move(combo)});
    return true;
  }

  // Coefficients c_i with Σ c_i v_i = target, if target is in the span.
  std::optional<Combo> solve(Vec target) const {
    Combo combo;
    reduce(target, combo);
    if (!target.empty()) return std::nullopt;
    Combo out;
    for (auto& [i, c] : combo)
      if (c != 0) out.emplace(i, -c);
    return out;
  }

 private:
  struct Row {
    Vec v;
    Combo combo;
  };

  void reduce(Vec& v, Combo& combo) const {
    auto it = v.end();
    while (it != v.begin()) {
      --it;
      auto row = rows_.find(it->first);
      if (row == rows_.end()) continue;
      Key k = it->first;
      Rational c = it->second;
      axpy(v, Rational(-c), row->second.v);
      for (const auto& [i, rc] : row->second.combo) {
        auto& slot = combo[i];
        slot -= c * rc;
      }
      it = v.lower_bound(k);
    }
  }

  std::map<Key, Row, Less> rows_;
  std::size_t count_ = 0;
};

}  // namespace gdconf
