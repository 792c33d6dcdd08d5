#pragma once

#include "gdconf/report.hpp"
#include "gdconf/weyl.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gdconf {

enum class Backend { generic, weyl };

/// Basis word of U(Vir; 3): (L0)^s v, or (L0)^q (L1)^l L2 v, where
/// L_n = (v (n) ·).
struct UnivBasisWord {
  enum Shape { pow0, mixed };
  Shape shape = pow0;
  int s = 0, q = 0, l = 0;

  static UnivBasisWord Pow0(int s) { return {pow0, s, 0, 0}; }
  static UnivBasisWord Mixed(int q, int l) { return {mixed, 0, q, l}; }
  int length() const { return shape == pow0 ? s + 1 : q + l + 2; }
  std::string label() const;
};

// All words with s ≤ S and q ≤ Q, l ≤ L; Pow0 first.
std::vector<UnivBasisWord> univ_basis(int S, int Q, int L);

Weyl vir_generator();      // x − T(d+1)p
Weyl adjoint_generator();  // x − T·dp

// x^s(x − T·W) and ½ x^q W^l (1 − W), W = (d+1)p.
Weyl vir_printed_image(const UnivBasisWord& w);
// x^{s+1} − x^s T·dp and x^q (dp)^l (1 − dp).
Weyl adjoint_printed_image(const UnivBasisWord& w);

// Images obtained by applying L0, L1, L2 (n-products with the generator)
// starting from the generator itself.
std::vector<Weyl> iterated_images(const Weyl& generator, const std::vector<UnivBasisWord>& words,
                                  Backend backend = Backend::weyl);

Report vir_basis_report(int S, int Q, int L, Backend backend = Backend::weyl);
Report vir_independence(int S, int Q, int L, Backend backend = Backend::weyl);
Report vir_dependence(Backend backend = Backend::weyl);
Report vir_adjoint_presentation(int S, int Q, int L, Backend backend = Backend::weyl);

// c_i with W^l (1 − W)·1 = −Σ c_i v^i, from the Weyl expansion; index i−1.
std::vector<Rational> ci_oracle(int l);
// Σ_{2 ≤ j_1 ≤ … ≤ j_m ≤ 1+i} Π_{k=1..m} j_k, m = l+1−i.
Rational ci_formula_jk(int l, int i);
// Same sum with the factor j_i in place of j_k; undefined when i > m > 0.
std::optional<Rational> ci_formula_ji(int l, int i);

Report ci_report(int lmax, const std::string& golden_path = {});
nlohmann::json ci_table(int lmax);

}  // namespace gdconf
