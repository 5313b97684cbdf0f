#include "dw/splitting.hpp"

#include <algorithm>
#include <numeric>

namespace dw {

PolyF embed_poly(const PolyF& a, const FieldEmbedding& emb) {
  return a.map([&](const Elem& c) { return emb(c); });
}

namespace {

void split_distinct(const PolyF& r, std::vector<Elem>& out) {
  if (r.is_zero() || r.size() == 1) return;
  if (r.size() == 2) {
    out.push_back(-(r[0] / r[1]));
    return;
  }
  const FiniteField& L = r[0].field();
  const PolyF x = PolyF::var(L.one());
  const PolyF one = PolyF::constant(L.one());
  for (std::uint64_t a = 0; a < L.size(); ++a) {
    PolyF h;
    if (L.p() == 2) {
      // trace of a*x
      PolyF term = x.scale(Elem(&L, a)) % r, tr;
      for (std::uint32_t i = 0; i < L.degree(); ++i) {
        tr += term;
        term = (term * term) % r;
      }
      h = gcd(r, tr);
    } else {
      PolyF base = x + PolyF::constant(Elem(&L, a));
      h = gcd(r, pow_mod_big(base, (L.size() - 1) / 2, r) - one);
    }
    if (h.size() > 1 && h.size() < r.size()) {
      split_distinct(h, out);
      split_distinct(r / h, out);
      return;
    }
  }
  throw Error(Errc::InvalidArgument, "root splitting failed");
}

}  // namespace

std::vector<Root> roots_in_field(const PolyF& g0) {
  if (g0.is_zero()) throw Error(Errc::InvalidArgument, "roots of the zero polynomial");
  std::vector<Root> out;
  if (g0.size() == 1) return out;
  const FiniteField& L = g0[0].field();
  PolyF g = make_monic(g0);
  PolyF x = PolyF::var(L.one());
  PolyF w = pow_mod_big(x, L.size(), g);
  PolyF r = gcd(g, w - x);
  std::vector<Elem> zs;
  split_distinct(r, zs);
  std::sort(zs.begin(), zs.end());
  for (const auto& z : zs) {
    PolyF lin(std::vector<Elem>{-z, L.one()});
    std::size_t m = 0;
    PolyF cur = g;
    for (;;) {
      auto [q, rem] = divmod(cur, lin);
      if (!rem.is_zero()) break;
      ++m;
      cur = q;
    }
    out.push_back({z, m});
  }
  return out;
}

std::vector<std::size_t> factor_degrees(const PolyF& h0) {
  std::vector<std::size_t> out;
  if (h0.is_zero() || h0.size() == 1) return out;
  const FiniteField& F = h0[0].field();
  PolyF h = make_monic(h0);
  const std::size_t n = h.deg();
  PolyF x = PolyF::var(F.one());
  PolyF w = x % h;
  std::vector<std::size_t> cnt(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    w = pow_mod_big(w, F.size(), h);
    std::size_t d = gcd(h, w - x).size() - 1;
    for (std::size_t j = 1; j < i; ++j)
      if (i % j == 0) d -= j * cnt[j];
    cnt[i] = d / i;
    if (cnt[i]) out.push_back(i);
  }
  return out;
}

SplittingField splitting_field(const PolyF& h, std::uint32_t cap) {
  if (h.is_zero()) throw Error(Errc::InvalidArgument, "splitting field of zero");
  const FieldPtr F = h[0].field().ptr();
  std::uint64_t s = 1;
  for (auto d : factor_degrees(h)) s = std::lcm(s, static_cast<std::uint64_t>(d));
  if (s > cap) throw Error(Errc::SplittingFieldTooLarge, "splitting degree " + std::to_string(s) + " exceeds cap");
  SplittingField out;
  out.s = static_cast<std::uint32_t>(s);
  out.field = s == 1 ? F : FiniteField::make(F->p(), F->degree() * out.s);
  out.emb = FieldEmbedding(F, out.field);
  out.roots = roots_in_field(embed_poly(h, out.emb));
  return out;
}

}  // namespace dw
