#pragma once

#include <utility>
#include <vector>

#include "dw/multipoly.hpp"

namespace dw {

// D_f(t^i) = sum_j a_{i+j+1} t^j, 0 <= i < deg f.
PolyF dual_map(const PolyF& f, std::size_t i);

// O_f^(2)(X_a, X_b) inside the given variable list.
MultiPoly weil_op2_in(const PolyF& f, const std::vector<std::string>& vars, std::size_t a, std::size_t b);
MultiPoly weil_op2(const PolyF& f);
MultiPoly weil_op_r(const PolyF& f, std::size_t r);
// O_f^(r+1)(X_1, ..., X_r, t)
MultiPoly weil_op_with_t(const PolyF& f, std::size_t r);

MultiPoly reduce_mod_star(const MultiPoly& P, const PolyF& f, const std::vector<std::size_t>& vars);

// [g * O_f^(r)] computed through the variable X_{i+1}.
MultiPoly star_action(const PolyF& g, const PolyF& f, std::size_t r, std::size_t i = 0);

struct EdgeList {
  std::size_t r = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // 1-based vertices
};
MultiPoly tree_product(const PolyF& f, const EdgeList& g);

MultiPoly rank3_closed(const PolyF& f);

// m(X_l) O_f^(r-1)(.., X_l omitted, ..) + prod_{j != l} (X_j - zeta) O_m^(r), l 1-based.
MultiPoly katen_recursion(const PolyF& f, const Elem& zeta, std::size_t r, std::size_t l);

// The factor recursion for f = m n at index l (1-based), reduced in the pivot
// variable only; the pivot is X_r, or X_1 when l = r.
MultiPoly factor_recursion(const PolyF& m, const PolyF& n, std::size_t r, std::size_t l);

// Closed form of [t^k * O_f^(2)], not reduced.
MultiPoly tk_star_formula(const PolyF& f, std::size_t k);

}  // namespace dw
