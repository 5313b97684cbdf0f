#pragma once

#include <map>
#include <vector>

#include "dw/drinfeld.hpp"
#include "dw/multipoly.hpp"
#include "dw/tate.hpp"

namespace dw {

// det(mu_j^(q^i))
Elem moore_det(const std::vector<Elem>& mus, std::uint64_t q);

// Position of t in P's variables (r), or r when absent; checks X1..Xr.
std::size_t diamond_layout(const MultiPoly& P, std::size_t r);

// sum_a c_a t^k M(φ_(x^a1) mu_1, ..., φ_(x^ar) mu_r), collected by the power k of t.
template <class V, class PhiX, class Moore, class Scale>
std::vector<V> diamond_generic(const MultiPoly& P, const std::vector<V>& mus, PhiX phi_x, Moore moore, Scale scale,
                               const V& zero) {
  const std::size_t r = mus.size();
  const std::size_t tpos = diamond_layout(P, r);
  std::vector<std::vector<V>> pw(r);  // pw[i][k] = φ_(x^k) mu_i
  for (std::size_t i = 0; i < r; ++i) pw[i].push_back(mus[i]);
  std::vector<V> out;
  for (const auto& [e, c] : P.terms()) {
    std::vector<V> args;
    for (std::size_t i = 0; i < r; ++i) {
      while (pw[i].size() <= e[i]) pw[i].push_back(phi_x(pw[i].back()));
      args.push_back(pw[i][e[i]]);
    }
    const std::size_t k = tpos < P.nvars() ? e[tpos] : 0;
    while (out.size() <= k) out.push_back(zero);
    out[k] = out[k] + scale(c, moore(args));
  }
  return out;
}

// P over F_q in X1..Xr; the points lie in the field of M.
Elem diamond_moore(const MultiPoly& P, const FiniteModule& M, const std::vector<Elem>& mus);
// P in X1..Xr, t; coefficients of the result lie in the field of M.
PolyF diamond_moore_t(const MultiPoly& P, const FiniteModule& M, const std::vector<Elem>& mus);
// Series version for the comparison with f-remainders, indexed by the power of t.
std::vector<QExpansion> diamond_moore_series(const MultiPoly& P, const RationalModule& M,
                                             const std::vector<QExpansion>& mus);

// M(O_f^(r) ◇ (mu_1 ⊗ ... ⊗ mu_r)); every mu_i must be f-torsion.
Elem weil_pairing(const FiniteModule& M, const PolyF& f, const std::vector<Elem>& mus);
// Same with a caller-supplied representative of O_f^(r).
Elem weil_pairing_with(const MultiPoly& O, const FiniteModule& M, const PolyF& f, const std::vector<Elem>& mus);

struct MainTheoremReport {
  std::size_t r = 0, n = 0, N = 0;
  std::vector<SeriesComparison> full;  // coefficient of t^j, j < n
  SeriesComparison leading;            // K_(n-1) against Weil_f(C_(Z_i, n-1))
  bool ok() const {
    for (const auto& c : full)
      if (!c.ok()) return false;
    return leading.ok();
  }
  std::size_t compared() const {
    std::size_t s = leading.compared.size();
    for (const auto& c : full) s += c.compared.size();
    return s;
  }
};

// [M(ω_1, ..., ω_r)]_f against O_f^(r+1)(X, t) ◇ (C_(Z_1,n-1) ⊗ ...), both truncated at N.
MainTheoremReport main_theorem_check(const RationalModule& M, const PolyF& f, std::size_t N);

}  // namespace dw
