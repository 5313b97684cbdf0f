#include "dw/weil.hpp"

#include <numeric>

namespace dw {

namespace {

FieldPtr field_of(const PolyF& f) { return f[0].field().ptr(); }

void require_monic(const PolyF& f) {
  if (f.is_zero() || f.size() < 2) throw Error(Errc::InvalidArgument, "modulus must have degree >= 1");
  if (!f.lead().is_one()) throw Error(Errc::InvalidArgument, "modulus must be monic");
}

Elem a_coef(const PolyF& f, std::size_t i) { return i < f.size() ? f[i] : f[0].field().zero(); }

Exps ex(std::size_t a, std::size_t b, std::size_t c = 0) {
  Exps e{};
  e[0] = static_cast<std::uint8_t>(a);
  e[1] = static_cast<std::uint8_t>(b);
  e[2] = static_cast<std::uint8_t>(c);
  return e;
}

// O_g^(r) in the given variables (positions idx), zero when deg g = 0 and r >= 2.
MultiPoly op_on(const PolyF& g, std::size_t r, const std::vector<std::string>& vars,
                const std::vector<std::size_t>& idx, const FieldPtr& F) {
  if (g.deg() == 0) {
    if (r == 1) return MultiPoly::constant(F, vars, F->one());
    return MultiPoly(F, vars);
  }
  return weil_op_r(make_monic(g), r).remap(idx, vars);
}

}  // namespace

PolyF dual_map(const PolyF& f, std::size_t i) {
  require_monic(f);
  const std::size_t n = f.deg();
  if (i >= n) throw Error(Errc::OutOfRange, "dual_map index must be < deg f");
  std::vector<Elem> c;
  for (std::size_t j = 0; i + j + 1 <= n; ++j) c.push_back(f[i + j + 1]);
  return PolyF(std::move(c));
}

MultiPoly weil_op2_in(const PolyF& f, const std::vector<std::string>& vars, std::size_t a, std::size_t b) {
  require_monic(f);
  FieldPtr F = field_of(f);
  MultiPoly out(F, vars);
  const std::size_t n = f.deg();
  for (std::size_t j = 1; j <= n; ++j) {
    if (f[j].is_zero()) continue;
    for (std::size_t al = 0; al < j; ++al) {
      Exps e{};
      e[a] = static_cast<std::uint8_t>(e[a] + al);
      e[b] = static_cast<std::uint8_t>(e[b] + (j - 1 - al));
      out.add_term(e, f[j]);
    }
  }
  return out;
}

MultiPoly weil_op2(const PolyF& f) { return weil_op2_in(f, MultiPoly::x_vars(2), 0, 1); }

MultiPoly weil_op_r(const PolyF& f, std::size_t r) {
  require_monic(f);
  if (r == 0) throw Error(Errc::InvalidArgument, "rank must be >= 1");
  FieldPtr F = field_of(f);
  auto vars = MultiPoly::x_vars(r);
  if (r == 1) return MultiPoly::constant(F, vars, F->one());
  MultiPoly P = weil_op2_in(f, vars, 0, r - 1);
  for (std::size_t j = 1; j + 1 < r; ++j) P = (P * weil_op2_in(f, vars, j, r - 1)).reduce(f, {r - 1});
  return P;
}

MultiPoly weil_op_with_t(const PolyF& f, std::size_t r) {
  std::vector<std::size_t> idx(r + 1);
  std::iota(idx.begin(), idx.end(), 0);
  return weil_op_r(f, r + 1).remap(idx, MultiPoly::x_vars(r, true));
}

MultiPoly reduce_mod_star(const MultiPoly& P, const PolyF& f, const std::vector<std::size_t>& vars) {
  if (vars.empty()) throw Error(Errc::InvalidArgument, "reduce_mod_star needs at least one variable");
  return P.reduce(f, vars);
}

MultiPoly star_action(const PolyF& g, const PolyF& f, std::size_t r, std::size_t i) {
  require_monic(f);
  if (i >= r) throw Error(Errc::OutOfRange, "star action variable out of range");
  FieldPtr F = field_of(f);
  MultiPoly O = weil_op_r(f, r);
  PolyF gr = g.is_zero() ? g : g % f;
  MultiPoly G = MultiPoly::univariate(gr, F, O.vars(), i);
  return (G * O).reduce_all(f);
}

MultiPoly tree_product(const PolyF& f, const EdgeList& g) {
  require_monic(f);
  const std::size_t r = g.r;
  if (r == 0) throw Error(Errc::InvalidArgument, "empty graph");
  if (g.edges.size() + 1 != r) throw Error(Errc::NotATree, "a spanning tree on r vertices has r-1 edges");
  std::vector<std::size_t> parent(r + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [a, b] : g.edges) {
    if (a < 1 || a > r || b < 1 || b > r || a == b) throw Error(Errc::NotATree, "bad edge");
    parent[find(a)] = find(b);
  }
  for (std::size_t v = 2; v <= r; ++v)
    if (find(v) != find(1)) throw Error(Errc::NotATree, "graph is disconnected");
  FieldPtr F = field_of(f);
  auto vars = MultiPoly::x_vars(r);
  MultiPoly P = MultiPoly::constant(F, vars, F->one());
  for (auto [a, b] : g.edges) P = (P * weil_op2_in(f, vars, a - 1, b - 1)).reduce_all(f);
  return P;
}

MultiPoly rank3_closed(const PolyF& f) {
  require_monic(f);
  FieldPtr F = field_of(f);
  const std::size_t n = f.deg();
  MultiPoly out(F, MultiPoly::x_vars(3));
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = k + 1; i <= n; ++i)
      for (std::size_t j = 0; j + k + 1 <= n; ++j)
        for (std::size_t al = 0; al + k + 1 <= i; ++al)
          out.add_term(ex(al + k, i - 1 - al, j), a_coef(f, i) * a_coef(f, k + j + 1));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j + k + 1 <= n; ++j)
        for (std::size_t al = 0; al + i + 1 <= k; ++al)
          out.add_term(ex(al + i, k - 1 - al, j), -(a_coef(f, i) * a_coef(f, k + j + 1)));
  }
  return out;
}

MultiPoly katen_recursion(const PolyF& f, const Elem& zeta, std::size_t r, std::size_t l) {
  require_monic(f);
  if (r < 2) throw Error(Errc::InvalidArgument, "Katen recursion needs r >= 2");
  if (l < 1 || l > r) throw Error(Errc::OutOfRange, "index l must lie in 1..r");
  if (!f.eval(zeta).is_zero()) throw Error(Errc::NotARoot, "zeta is not a root of f");
  FieldPtr F = field_of(f);
  const PolyF lin(std::vector<Elem>{-zeta, F->one()});
  const PolyF m = f / lin;
  auto vars = MultiPoly::x_vars(r);
  std::vector<std::size_t> skip;
  for (std::size_t j = 0; j < r; ++j)
    if (j != l - 1) skip.push_back(j);
  MultiPoly t1 = MultiPoly::univariate(m, F, vars, l - 1) * weil_op_r(f, r - 1).remap(skip, vars);
  MultiPoly prod = MultiPoly::constant(F, vars, F->one());
  for (std::size_t j : skip) prod = prod * MultiPoly::univariate(lin, F, vars, j);
  std::vector<std::size_t> all(r);
  std::iota(all.begin(), all.end(), 0);
  MultiPoly t2 = prod * op_on(m, r, vars, all, F);
  return t1 + t2;
}

MultiPoly factor_recursion(const PolyF& m, const PolyF& n, std::size_t r, std::size_t l) {
  if (r < 2) throw Error(Errc::InvalidArgument, "factor recursion needs r >= 2");
  if (l < 1 || l > r) throw Error(Errc::OutOfRange, "index l must lie in 1..r");
  require_monic(m);
  require_monic(n);
  const PolyF f = m * n;
  FieldPtr F = field_of(f);
  auto vars = MultiPoly::x_vars(r);
  const std::size_t li = l - 1, pivot = l < r ? r - 1 : 0;
  std::vector<std::size_t> skip;
  for (std::size_t j = 0; j < r; ++j)
    if (j != li) skip.push_back(j);
  MultiPoly on2 = weil_op2_in(n, vars, li, pivot);
  MultiPoly t1 = MultiPoly::univariate(m, F, vars, li) * on2 * weil_op_r(f, r - 1).remap(skip, vars);
  MultiPoly prod = MultiPoly::constant(F, vars, F->one());
  for (std::size_t j : skip) prod = prod * MultiPoly::univariate(n, F, vars, j);
  std::vector<std::size_t> all(r);
  std::iota(all.begin(), all.end(), 0);
  return (t1 + prod * op_on(m, r, vars, all, F)).reduce(f, {pivot});
}

MultiPoly tk_star_formula(const PolyF& f, std::size_t k) {
  require_monic(f);
  FieldPtr F = field_of(f);
  const std::size_t n = f.deg();
  MultiPoly out(F, MultiPoly::x_vars(2));
  for (std::size_t i = 0; i < k; ++i) {
    Elem a = a_coef(f, i);
    if (a.is_zero()) continue;
    for (std::size_t al = 0; al + i + 1 <= k; ++al) out.add_term(ex(al + i, (k - i - 1 - al) + i), -a);
  }
  for (std::size_t i = k + 1; i <= n; ++i) {
    Elem a = a_coef(f, i);
    if (a.is_zero()) continue;
    for (std::size_t al = 0; al + k + 1 <= i; ++al) out.add_term(ex(al + k, (i - k - 1 - al) + k), a);
  }
  return out;
}

}  // namespace dw
