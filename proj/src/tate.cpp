#include "dw/tate.hpp"

#include <functional>

#include "dw/weil.hpp"
#include "json.hpp"

namespace dw {

PolyT ev_remainder(const RatT& w, const PolyF& f) { return ev_remainder(w, lift_to_t(f)); }

Jets jets_of(const RatFunc<Elem>& w, const PolyF& p, std::size_t k) {
  Jets J;
  J.split = splitting_field(p);
  const FieldEmbedding& emb = J.split.emb;
  const Elem zero = J.split.field->zero();
  PolyF n = embed_poly(w.num(), emb), d = embed_poly(w.den(), emb);
  for (const auto& r : J.split.roots) {
    PolyF nd = taylor_shift(n, r.value), dd = taylor_shift(d, r.value);
    if (dd.is_zero() || dd[0].is_zero()) throw Error(Errc::PoleOnModulus, "pole at a root of p");
    J.values.push_back(series_div(nd.coeffs(), dd.coeffs(), k, zero));
  }
  return J;
}

PolyF remainder_via_interpolation(const PolyF& p, std::size_t k, const SplittingField& split,
                                  const std::vector<std::vector<Elem>>& jets) {
  if (p.is_zero() || p.deg() == 0 || k == 0) throw Error(Errc::InvalidArgument, "need deg p >= 1 and k >= 1");
  if (factor_degrees(p) != std::vector<std::size_t>{p.deg()})
    throw Error(Errc::InvalidArgument, "p must be irreducible");
  const std::size_t d = p.deg(), D = d * k;
  if (split.roots.size() != d || jets.size() != d) throw Error(Errc::InconsistentJets, "need jets at all roots of p");
  const FiniteField& L = *split.field;
  const std::uint32_t ch = L.p();
  Matrix<Elem> m(D, D, L.zero());
  std::vector<Elem> b;
  for (std::size_t j = 0; j < d; ++j) {
    if (jets[j].size() != k) throw Error(Errc::InconsistentJets, "incomplete jet data");
    const Elem z = split.roots[j].value;
    for (std::size_t l = 0; l < k; ++l) {
      const std::size_t row = j * k + l;
      for (std::size_t c = l; c < D; ++c)
        m(row, c) = L.from_int(static_cast<long long>(binom_mod(c, l, ch))) * z.pow(c - l);
      if (jets[j][l].field_ptr() != &L) throw Error(Errc::InconsistentJets, "jet outside the splitting field");
      b.push_back(jets[j][l]);
    }
  }
  auto x = solve(m, b, L.zero());
  if (!x) throw Error(Errc::InconsistentJets, "no polynomial matches the jets");
  std::vector<Elem> out;
  for (const auto& c : *x) {
    auto pre = split.emb.preimage(c);
    if (!pre) throw Error(Errc::InconsistentJets, "interpolant is not defined over F_q");
    out.push_back(*pre);
  }
  return PolyF(std::move(out));
}

std::string mono_string(const Mono& m, std::uint64_t q) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += "Z" + std::to_string(i + 1) + "^";
    std::uint64_t e = m[i];
    std::size_t k = 0;
    while (e % q == 0) {
      e /= q;
      ++k;
    }
    s += e == 1 ? "q^" + std::to_string(k) : std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

RatFn theta_qpow(const FiniteField& Fq, std::uint64_t q, std::size_t j) {
  std::uint64_t e = 1;
  for (std::size_t i = 0; i < j; ++i) e *= q;
  return rat_of_poly(PolyF::monomial(Fq.one(), e), Fq);
}

// ---------------------------------------------------------------------------

namespace {

PoleSet merge(const PoleSet& a, const PoleSet& b) {
  PoleSet r;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      r.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      r.push_back(b[j++]);
    } else {
      r.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i;
      ++j;
    }
  }
  return r;
}

const FiniteField& base_field(const PolyT& n) { return n.lead().one().field(); }

// θ^(q^j) - t
PolyT pole_factor(const FiniteField& Fq, std::uint64_t q, std::uint32_t j) {
  RatFn c = theta_qpow(Fq, q, j);
  return PolyT(std::vector<RatFn>{c, -adl::ol(c)});
}

}  // namespace

PoleFrac PoleFrac::poly(const PolyT& n) {
  PoleFrac r;
  r.add_part({}, n);
  return r;
}

PoleFrac PoleFrac::simple(const RatFn& c, std::uint32_t j) {
  PoleFrac r;
  r.add_part({{j, 1}}, PolyT::constant(c));
  return r;
}

void PoleFrac::add_part(const PoleSet& s, const PolyT& n) {
  if (n.is_zero()) return;
  auto it = p_.find(s);
  if (it == p_.end()) {
    p_.emplace(s, n);
    return;
  }
  it->second += n;
  if (it->second.is_zero()) p_.erase(it);
}

PoleFrac operator+(const PoleFrac& a, const PoleFrac& b) {
  PoleFrac r = a;
  for (const auto& [s, n] : b.p_) r.add_part(s, n);
  return r;
}

PoleFrac PoleFrac::operator-() const {
  PoleFrac r = *this;
  for (auto& [s, n] : r.p_) n = -n;
  return r;
}

PoleFrac operator*(const PoleFrac& a, const PoleFrac& b) {
  PoleFrac r;
  for (const auto& [sa, na] : a.p_)
    for (const auto& [sb, nb] : b.p_) r.add_part(merge(sa, sb), na * nb);
  return r;
}

PoleFrac PoleFrac::scale(const RatFn& c) const {
  PoleFrac r;
  if (c.is_zero()) return r;
  for (const auto& [s, n] : p_) r.add_part(s, n.scale(c));
  return r;
}

PoleFrac PoleFrac::twist(std::uint64_t q) const {
  PoleFrac r;
  for (const auto& [s, n] : p_) {
    PoleSet s2 = s;
    for (auto& [j, m] : s2) ++j;
    r.add_part(s2, twist_coef(n, q));
  }
  return r;
}

// δ_l((c - t)^-m) = C(m + l - 1, l) (c - t)^-(m + l)
PoleFrac PoleFrac::hasse(std::size_t l) const {
  if (l == 0) return *this;
  PoleFrac r;
  for (const auto& [s, n] : p_) {
    const FiniteField& F = base_field(n);
    const std::uint32_t ch = F.p();
    std::vector<std::size_t> split(s.size(), 0);
    std::function<void(std::size_t, std::size_t)> go = [&](std::size_t i, std::size_t left) {
      if (i == s.size()) {
        PolyT num = n.hasse(left);
        if (num.is_zero()) return;
        std::uint64_t c = 1;
        PoleSet s2 = s;
        for (std::size_t k = 0; k < s.size(); ++k) {
          c = c * binom_mod(s[k].second + split[k] - 1, split[k], ch) % ch;
          s2[k].second += static_cast<std::uint32_t>(split[k]);
        }
        if (c) r.add_part(s2, num.scale(rat_const(F.from_int(static_cast<long long>(c)))));
        return;
      }
      for (std::size_t a = 0; a <= left; ++a) {
        split[i] = a;
        go(i + 1, left - a);
      }
      split[i] = 0;
    };
    go(0, l);
  }
  return r;
}

RatT PoleFrac::to_rat(const FiniteField& Fq, std::uint64_t q) const {
  const RatFn one = rat_const(Fq.one());
  // common denominator prod_j (θ^(q^j) - t)^(max m_j), normalized once
  std::map<std::uint32_t, std::uint32_t> top;
  for (const auto& [s, n] : p_)
    for (auto [j, m] : s) top[j] = std::max(top[j], m);
  PolyT num, den = PolyT::constant(one);
  for (auto [j, m] : top) den = den * pow(pole_factor(Fq, q, j), m, one);
  for (const auto& [s, n] : p_) {
    PolyT part = n;
    for (auto [j, m] : top) {
      std::uint32_t have = 0;
      for (auto [j2, m2] : s)
        if (j2 == j) have = m2;
      if (have < m) part = part * pow(pole_factor(Fq, q, j), m - have, one);
    }
    num += part;
  }
  return RatT(num, den);
}

std::string PoleFrac::to_string(const FiniteField& Fq, std::uint64_t q) const { return to_rat(Fq, q).to_string("t"); }

// ---------------------------------------------------------------------------

Remainderer::Remainderer(const PolyF& f, std::uint64_t q) : f_(f), ft_(lift_to_t(f)), q_(q) {
  if (f.is_zero() || f.deg() == 0 || !f.is_monic()) throw Error(Errc::InvalidArgument, "f must be monic of degree >= 1");
}

PolyT Remainderer::inverse_of(std::uint32_t j, std::uint32_t m) const {
  {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = cache_.find({j, m});
    if (it != cache_.end()) return it->second;
  }
  const FiniteField& Fq = f_.lead().field();
  const RatFn one = rat_const(Fq.one());
  PolyT inv = inv_mod(pow(pole_factor(Fq, q_, j), m, one), ft_);
  std::lock_guard<std::mutex> lk(mu_);
  cache_.emplace(std::make_pair(j, m), inv);
  return inv;
}

PolyT Remainderer::operator()(const PoleFrac& w) const {
  PolyT out;
  for (const auto& [s, n] : w.parts()) {
    PolyT acc = n % ft_;
    for (auto [j, m] : s) acc = acc * inverse_of(j, m) % ft_;
    out += acc;
  }
  return out;
}

RemainderSeries Remainderer::operator()(const TruncAGF& w) const {
  return w.map([this](const PoleFrac& c) { return (*this)(c); });
}

RemainderSeries remainder(const TruncAGF& w, const PolyF& f, std::uint64_t q) { return Remainderer(f, q)(w); }

QExpansion t_coefficient(const RemainderSeries& s, std::size_t i) {
  return s.map([i](const PolyT& p) { return i < p.size() ? p[i] : adl::zl(p.lead()); });
}

TruncAGF agf_from(const std::vector<RatFn>& e, std::uint64_t q, std::size_t sym, std::size_t nsym) {
  if (e.empty()) throw Error(Errc::InvalidArgument, "need at least e_0");
  if (sym >= nsym) throw Error(Errc::OutOfRange, "symbol index out of range");
  std::uint64_t cap = 1;
  for (std::size_t i = 0; i < e.size(); ++i) cap = sat_mul(cap, q);
  TruncAGF out(nsym);
  out.set_cap(sym, cap);
  Mono m(nsym, 0);
  std::uint64_t qi = 1;
  for (std::size_t i = 0; i < e.size(); ++i, qi *= q) {
    m[sym] = qi;
    out.add(m, PoleFrac::simple(e[i], static_cast<std::uint32_t>(i)));
  }
  return out;
}

TruncAGF agf(const RationalModule& M, std::size_t N, std::size_t sym, std::size_t nsym) {
  return agf_from(exp_coeffs(M, N), M.q(), sym, nsym);
}

TruncAGF hasse_schmidt(const TruncAGF& w, std::size_t l) {
  return w.map([l](const PoleFrac& c) { return c.hasse(l); });
}

QExpansion exp_series(const std::vector<RatFn>& e, const RatFn& c, std::uint64_t q, std::size_t sym, std::size_t nsym) {
  if (sym >= nsym) throw Error(Errc::OutOfRange, "symbol index out of range");
  std::uint64_t cap = 1;
  for (std::size_t i = 0; i < e.size(); ++i) cap = sat_mul(cap, q);
  QExpansion out(nsym);
  out.set_cap(sym, cap);
  Mono m(nsym, 0);
  RatFn cq = c;
  std::uint64_t qi = 1;
  for (std::size_t i = 0; i < e.size(); ++i, qi *= q) {
    if (i) cq = cq.frob(q);
    m[sym] = qi;
    out.add(m, e[i] * cq);
  }
  return out;
}

std::vector<QExpansion> c_coeffs(const RationalModule& M, const PolyF& f, std::size_t N) {
  RemainderSeries rem = remainder(agf(M, N), f, M.q());
  std::vector<QExpansion> out;
  for (std::size_t i = 0; i < f.deg(); ++i) out.push_back(t_coefficient(rem, i));
  return out;
}

QExpansion phi_apply_series(const RationalModule& M, const PolyF& a, const QExpansion& s) {
  TwistedPoly<RatFn> pa = M.phi_of(a);
  QExpansion out = s.map([](const RatFn& x) { return adl::zl(x); });
  QExpansion cur = s;
  for (std::size_t j = 0; j < pa.size(); ++j) {
    if (j) cur = cur.twist(M.q());
    if (pa[j].is_zero()) continue;
    const RatFn c = pa[j];
    out = out + cur.map([&c](const RatFn& x) { return c * x; });
  }
  return out;
}

TruncAGF moore_series(const std::vector<TruncAGF>& ws, std::uint64_t q) {
  if (ws.empty()) throw Error(Errc::InvalidArgument, "Moore determinant of an empty list");
  return moore_generic(ws, [q](const TruncAGF& x) { return x.twist(q); }, TruncAGF(ws[0].nsym()));
}

std::vector<PolyF> mp_coeffs(const PolyF& p, std::size_t l) {
  const FieldPtr F = p.lead().field().ptr();
  MultiPoly O = weil_op2(p);  // X1 = x, X2 = t
  MultiPoly P = O;
  for (std::size_t i = 0; i < l; ++i) P = (P * O).reduce(p, {1});
  P = P.reduce(p, {1});
  std::vector<PolyF> out;
  for (std::size_t i = 0; i < p.deg(); ++i) {
    MultiPoly c = P.coefficient_of(1, i);
    std::vector<Elem> v;
    for (const auto& [e, x] : c.terms()) {
      if (v.size() <= e[0]) v.resize(e[0] + 1, F->zero());
      v[e[0]] = x;
    }
    out.push_back(PolyF(std::move(v)));
  }
  return out;
}

std::string qexp_json(const QExpansion& s, std::uint64_t q, int indent) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [m, c] : s.terms()) j[mono_string(m, q)] = to_string(c);
  return j.dump(indent);
}

}  // namespace dw
