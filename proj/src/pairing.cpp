#include "dw/pairing.hpp"

#include "dw/weil.hpp"

namespace dw {

Elem moore_det(const std::vector<Elem>& mus, std::uint64_t q) {
  if (mus.empty()) throw Error(Errc::InvalidArgument, "Moore determinant of an empty list");
  for (const auto& m : mus)
    if (m.field_ptr() != mus[0].field_ptr()) throw Error(Errc::InvalidArgument, "points in different fields");
  return moore_generic(mus, [q](const Elem& x) { return x.pow(q); }, mus[0].field().zero());
}

std::size_t diamond_layout(const MultiPoly& P, std::size_t r) {
  const auto& v = P.vars();
  auto xs = MultiPoly::x_vars(r);
  if (v.size() < r || v.size() > r + 1 || !std::equal(xs.begin(), xs.end(), v.begin()))
    throw Error(Errc::RankMismatch, "operator variables do not match the number of points");
  if (v.size() == r + 1 && v[r] != "t") throw Error(Errc::RankMismatch, "extra operator variable must be t");
  return v.size() == r + 1 ? r : r + 1;
}

namespace {

std::vector<Elem> diamond_elems(const MultiPoly& P, const FiniteModule& M, const std::vector<Elem>& mus) {
  if (mus.empty()) throw Error(Errc::InvalidArgument, "no points");
  const FiniteField& L = a_field(M);
  for (const auto& m : mus)
    if (m.field_ptr() != &L) throw Error(Errc::InvalidArgument, "points must lie in the field of the module");
  const std::uint64_t q = M.q();
  return diamond_generic(
      P, mus, [&M](const Elem& x) { return M.phi_x().apply(x); },
      [q](const std::vector<Elem>& a) { return moore_det(a, q); },
      [&M](const Elem& c, const Elem& v) { return M.lift(c) * v; }, L.zero());
}

}  // namespace

Elem diamond_moore(const MultiPoly& P, const FiniteModule& M, const std::vector<Elem>& mus) {
  if (diamond_layout(P, mus.size()) < P.nvars()) throw Error(Errc::RankMismatch, "operator has a t variable");
  auto v = diamond_elems(P, M, mus);
  return v.empty() ? a_field(M).zero() : v[0];
}

PolyF diamond_moore_t(const MultiPoly& P, const FiniteModule& M, const std::vector<Elem>& mus) {
  return PolyF(diamond_elems(P, M, mus));
}

std::vector<QExpansion> diamond_moore_series(const MultiPoly& P, const RationalModule& M,
                                             const std::vector<QExpansion>& mus) {
  if (mus.empty()) throw Error(Errc::InvalidArgument, "no series");
  const std::uint64_t q = M.q();
  return diamond_generic(
      P, mus, [&M](const QExpansion& x) { return phi_apply_series(M, PolyF::var(M.fq()->one()), x); },
      [q](const std::vector<QExpansion>& a) {
        return moore_generic(a, [q](const QExpansion& x) { return x.twist(q); }, QExpansion(a[0].nsym()));
      },
      [](const Elem& c, const QExpansion& v) {
        const RatFn k = rat_const(c);
        return v.map([&k](const RatFn& x) { return k * x; });
      },
      QExpansion(mus[0].nsym()));
}

Elem weil_pairing_with(const MultiPoly& O, const FiniteModule& M, const PolyF& f, const std::vector<Elem>& mus) {
  if (mus.size() != M.rank()) throw Error(Errc::RankMismatch, "need one point per unit of rank");
  for (const auto& m : mus)
    if (!M.phi_apply(f, m).is_zero()) throw Error(Errc::NotTorsion, "point is not f-torsion");
  return diamond_moore(O, M, mus);
}

Elem weil_pairing(const FiniteModule& M, const PolyF& f, const std::vector<Elem>& mus) {
  return weil_pairing_with(weil_op_r(f, M.rank()), M, f, mus);
}

MainTheoremReport main_theorem_check(const RationalModule& M, const PolyF& f, std::size_t N) {
  const std::size_t r = M.rank(), n = f.deg();
  if (r < 2) throw Error(Errc::InvalidArgument, "main theorem check needs rank >= 2");
  // the Moore determinant starts at Z_1 Z_2^q ... Z_r^(q^(r-1))
  if (N + 1 < r) throw Error(Errc::TruncationTooShallow, "truncation leaves no guarded monomial");
  const std::uint64_t q = M.q();
  auto e = exp_coeffs(M, N);
  Remainderer rem(f, q);
  std::vector<TruncAGF> ws;
  std::vector<QExpansion> cs;
  for (std::size_t i = 0; i < r; ++i) {
    ws.push_back(agf_from(e, q, i, r));
    cs.push_back(t_coefficient(rem(ws.back()), n - 1));
  }
  RemainderSeries K = rem(moore_series(ws, q));

  MainTheoremReport rep;
  rep.r = r;
  rep.n = n;
  rep.N = N;
  auto str = [](const RatFn& x) { return to_string(x); };
  auto rhs = diamond_moore_series(weil_op_with_t(f, r), M, cs);
  for (std::size_t j = 0; j < n; ++j) {
    QExpansion side = j < rhs.size() ? rhs[j] : QExpansion(r);
    rep.full.push_back(compare_series(t_coefficient(K, j), side, str));
  }
  auto lead = diamond_moore_series(weil_op_r(f, r), M, cs);
  rep.leading = compare_series(t_coefficient(K, n - 1), lead.empty() ? QExpansion(r) : lead[0], str);
  if (rep.compared() == 0) throw Error(Errc::TruncationTooShallow, "no monomial inside the guard band");
  return rep;
}

}  // namespace dw
