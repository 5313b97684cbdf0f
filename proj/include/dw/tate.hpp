#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dw/drinfeld.hpp"
#include "dw/linalg.hpp"
#include "dw/multipoly.hpp"
#include "dw/splitting.hpp"

namespace dw {

// ---------------------------------------------------------------------------
// f-remainders

// [w]_f = num * den^-1 mod f.
template <class K>
Poly<K> ev_remainder(const RatFunc<K>& w, const Poly<K>& f) {
  if (f.is_zero() || f.deg() == 0) throw Error(Errc::InvalidArgument, "modulus must have degree >= 1");
  if (w.is_zero()) return Poly<K>();
  if (gcd(w.den(), f).size() != 1) throw Error(Errc::PoleOnModulus, "denominator shares a factor with f");
  if (w.is_poly()) return (w.num() % f).scale(inverse(w.den()[0]));
  return (w.num() % f) * inv_mod(w.den(), f) % f;
}
// w over F_q(θ)[t], f over F_q
PolyT ev_remainder(const RatT& w, const PolyF& f);

// δ_l on rational functions: from n = d w, δ_l n = sum_i δ_i d δ_(l-i) w.
template <class K>
RatFunc<K> hasse_schmidt(const RatFunc<K>& w, std::size_t l) {
  if (l == 0 || w.is_zero()) return w;
  const K one = w.one();
  std::vector<RatFunc<K>> d{w};
  const Poly<K>& den = w.den();
  const RatFunc<K> dinv = RatFunc<K>::from_poly(den, one).inv();
  for (std::size_t k = 1; k <= l; ++k) {
    RatFunc<K> s = RatFunc<K>::from_poly(w.num().hasse(k), one);
    for (std::size_t i = 1; i <= k; ++i) {
      Poly<K> di = den.hasse(i);
      if (di.is_zero()) continue;
      s -= RatFunc<K>::from_poly(di, one) * d[k - i];
    }
    d.push_back(s * dinv);
  }
  return d[l];
}

// Jets δ_l w(ζ_j), l < k, at the roots of p in a splitting field.
struct Jets {
  SplittingField split;
  std::vector<std::vector<Elem>> values;  // values[j][l]
};
Jets jets_of(const RatFunc<Elem>& w, const PolyF& p, std::size_t k);
// The polynomial of degree < k deg p with the given jets, over F_q.
PolyF remainder_via_interpolation(const PolyF& p, std::size_t k, const SplittingField& split,
                                  const std::vector<std::vector<Elem>>& jets);

// ---------------------------------------------------------------------------
// Formal q-expansions in lattice symbols Z_1..Z_S

using Mono = std::vector<std::uint64_t>;  // exponent of each symbol
inline constexpr std::uint64_t kNoCap = ~std::uint64_t{0};

inline std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == kNoCap) return kNoCap;
  unsigned __int128 r = (unsigned __int128)a * b;
  return r >= kNoCap ? kNoCap : static_cast<std::uint64_t>(r);
}

// "Z1^q^2*Z2^q^0"; exponents that are not q-powers print as plain integers.
std::string mono_string(const Mono& m, std::uint64_t q);

inline RatFn twist_coef(const RatFn& c, std::uint64_t q) { return c.frob(q); }
// t is fixed by the twist
inline PolyT twist_coef(const PolyT& c, std::uint64_t q) {
  return c.map([q](const RatFn& x) { return x.frob(q); });
}

// Sparse series sum c_m Z^m, exact for monomials with m_s < cap_s for every s.
template <class C>
class QSeries {
 public:
  using Terms = std::map<Mono, C>;

  QSeries() = default;
  explicit QSeries(std::size_t nsym) : cap_(nsym, kNoCap) {}

  std::size_t nsym() const { return cap_.size(); }
  const std::vector<std::uint64_t>& cap() const { return cap_; }
  void set_cap(std::size_t s, std::uint64_t c) {
    cap_[s] = std::min(cap_[s], c);
    prune();
  }
  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t size() const { return t_.size(); }

  bool in_box(const Mono& m) const {
    for (std::size_t s = 0; s < m.size(); ++s)
      if (m[s] >= cap_[s]) return false;
    return true;
  }
  const C* find(const Mono& m) const {
    auto it = t_.find(m);
    return it == t_.end() ? nullptr : &it->second;
  }
  void add(const Mono& m, const C& c) {
    if (m.size() != nsym()) throw Error(Errc::RankMismatch, "monomial has the wrong number of symbols");
    if (c.is_zero() || !in_box(m)) return;
    auto it = t_.find(m);
    if (it == t_.end()) {
      t_.emplace(m, c);
      return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) t_.erase(it);
  }

  friend QSeries operator+(const QSeries& a, const QSeries& b) {
    QSeries r = a.merged_caps(b);
    for (const auto& [m, c] : a.t_) r.add(m, c);
    for (const auto& [m, c] : b.t_) r.add(m, c);
    return r;
  }
  QSeries operator-() const {
    QSeries r = *this;
    for (auto& [m, c] : r.t_) c = neg(c);
    return r;
  }
  friend QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }
  friend QSeries operator*(const QSeries& a, const QSeries& b) {
    QSeries r = a.merged_caps(b);
    Mono m(r.nsym());
    for (const auto& [ma, ca] : a.t_)
      for (const auto& [mb, cb] : b.t_) {
        bool ok = true;
        for (std::size_t s = 0; s < m.size() && ok; ++s) {
          m[s] = ma[s] + mb[s];
          ok = m[s] < r.cap_[s];
        }
        if (ok) r.add(m, ca * cb);
      }
    return r;
  }

  // Coefficients to the q-th power, Z^m -> Z^(qm), caps scaled by q.
  QSeries twist(std::uint64_t q, std::size_t k = 1) const {
    QSeries r = *this;
    for (std::size_t i = 0; i < k; ++i) r = r.twist_once(q);
    return r;
  }

  template <class Fn>
  auto map(Fn fn) const -> QSeries<decltype(fn(std::declval<const C&>()))> {
    QSeries<decltype(fn(std::declval<const C&>()))> r(nsym());
    for (std::size_t s = 0; s < nsym(); ++s) r.set_cap(s, cap_[s]);
    for (const auto& [m, c] : t_) r.add(m, fn(c));
    return r;
  }

 private:
  static C neg(const C& c) { return -c; }
  QSeries merged_caps(const QSeries& b) const {
    if (nsym() != b.nsym()) throw Error(Errc::RankMismatch, "series in different symbol sets");
    QSeries r(nsym());
    for (std::size_t s = 0; s < nsym(); ++s) r.cap_[s] = std::min(cap_[s], b.cap_[s]);
    return r;
  }
  QSeries twist_once(std::uint64_t q) const {
    QSeries r(nsym());
    for (std::size_t s = 0; s < nsym(); ++s) r.cap_[s] = sat_mul(cap_[s], q);
    Mono m(nsym());
    for (const auto& [ma, c] : t_) {
      for (std::size_t s = 0; s < m.size(); ++s) m[s] = ma[s] * q;
      r.add(m, twist_coef(c, q));
    }
    return r;
  }
  void prune() {
    for (auto it = t_.begin(); it != t_.end();) it = in_box(it->first) ? std::next(it) : t_.erase(it);
  }

  std::vector<std::uint64_t> cap_;
  Terms t_;
};

struct MonoMismatch {
  Mono mono;
  std::string lhs, rhs;
};
struct SeriesComparison {
  std::vector<Mono> compared;  // monomials inside both boxes, in order
  std::vector<MonoMismatch> mismatches;
  bool ok() const { return mismatches.empty(); }
};

// Compares a and b on every monomial both sides guarantee; Str renders a coefficient.
template <class C, class Str>
SeriesComparison compare_series(const QSeries<C>& a, const QSeries<C>& b, Str str) {
  SeriesComparison out;
  std::vector<Mono> keys;
  for (const auto& [m, c] : a.terms()) keys.push_back(m);
  for (const auto& [m, c] : b.terms()) keys.push_back(m);
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  for (const auto& m : keys) {
    if (!a.in_box(m) || !b.in_box(m)) continue;
    out.compared.push_back(m);
    const C* x = a.find(m);
    const C* y = b.find(m);
    if (x && y && *x == *y) continue;
    out.mismatches.push_back({m, x ? str(*x) : "0", y ? str(*y) : "0"});
  }
  return out;
}

// Sum of N_P(t) / prod_j (θ^(q^j) - t)^(m_j) over pole sets P = {(j, m_j)}.
using PoleSet = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

RatFn theta_qpow(const FiniteField& Fq, std::uint64_t q, std::size_t j);

class PoleFrac {
 public:
  using Parts = std::map<PoleSet, PolyT>;

  PoleFrac() = default;
  static PoleFrac poly(const PolyT& n);
  // c / (θ^(q^j) - t)
  static PoleFrac simple(const RatFn& c, std::uint32_t j);

  const Parts& parts() const { return p_; }
  bool is_zero() const { return p_.empty(); }

  friend PoleFrac operator+(const PoleFrac& a, const PoleFrac& b);
  PoleFrac operator-() const;
  friend PoleFrac operator-(const PoleFrac& a, const PoleFrac& b) { return a + (-b); }
  friend PoleFrac operator*(const PoleFrac& a, const PoleFrac& b);
  friend bool operator==(const PoleFrac& a, const PoleFrac& b) { return a.p_ == b.p_; }
  PoleFrac scale(const RatFn& c) const;

  PoleFrac twist(std::uint64_t q) const;
  PoleFrac hasse(std::size_t l) const;
  // Collapsed to a single reduced fraction in t.
  RatT to_rat(const FiniteField& Fq, std::uint64_t q) const;
  std::string to_string(const FiniteField& Fq, std::uint64_t q) const;

 private:
  void add_part(const PoleSet& s, const PolyT& n);
  Parts p_;
};

inline PoleFrac twist_coef(const PoleFrac& c, std::uint64_t q) { return c.twist(q); }

using QExpansion = QSeries<RatFn>;
using TruncAGF = QSeries<PoleFrac>;
using RemainderSeries = QSeries<PolyT>;

// f-remainders of pole-fraction series for a fixed f over F_q; thread safe.
class Remainderer {
 public:
  Remainderer(const PolyF& f, std::uint64_t q);
  PolyT operator()(const PoleFrac& w) const;
  RemainderSeries operator()(const TruncAGF& w) const;
  const PolyF& modulus() const { return f_; }

 private:
  PolyT inverse_of(std::uint32_t j, std::uint32_t m) const;
  PolyF f_;
  PolyT ft_;
  std::uint64_t q_;
  mutable std::map<std::pair<std::uint32_t, std::uint32_t>, PolyT> cache_;
  mutable std::mutex mu_;
};

RemainderSeries remainder(const TruncAGF& w, const PolyF& f, std::uint64_t q);
// Coefficient of t^i of every term.
QExpansion t_coefficient(const RemainderSeries& s, std::size_t i);

// sum_{i<=N} e_i Z_sym^(q^i) / (θ^(q^i) - t)
TruncAGF agf(const RationalModule& M, std::size_t N, std::size_t sym = 0, std::size_t nsym = 1);
TruncAGF agf_from(const std::vector<RatFn>& e, std::uint64_t q, std::size_t sym, std::size_t nsym);
inline TruncAGF twist(const TruncAGF& w, std::size_t k, std::uint64_t q) { return w.twist(q, k); }
TruncAGF hasse_schmidt(const TruncAGF& w, std::size_t l);

// exp_φ(c Z_sym) = sum_{i<=N} e_i c^(q^i) Z_sym^(q^i), exact below Z^(q^(N+1)).
QExpansion exp_series(const std::vector<RatFn>& e, const RatFn& c, std::uint64_t q, std::size_t sym = 0,
                      std::size_t nsym = 1);
// Coefficients C_0..C_(n-1) of [agf]_f.
std::vector<QExpansion> c_coeffs(const RationalModule& M, const PolyF& f, std::size_t N);

// φ_a acting on a series: sum_j c_j τ^j(s).
QExpansion phi_apply_series(const RationalModule& M, const PolyF& a, const QExpansion& s);

// det(v_j^(i)) for i, j < r, expanded over permutations; tw is one Frobenius twist.
template <class V, class Tw>
V moore_generic(const std::vector<V>& v, Tw tw, const V& zero) {
  const std::size_t r = v.size();
  if (r == 0) throw Error(Errc::InvalidArgument, "Moore determinant of an empty list");
  std::vector<std::vector<V>> rows{v};  // rows[i][j] = v_j^(i)
  for (std::size_t i = 1; i < r; ++i) {
    std::vector<V> next;
    for (const auto& x : rows.back()) next.push_back(tw(x));
    rows.push_back(std::move(next));
  }
  std::vector<std::size_t> perm(r);
  std::iota(perm.begin(), perm.end(), 0);
  V out = zero;
  do {
    std::size_t inv = 0;
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = a + 1; b < r; ++b)
        if (perm[a] > perm[b]) ++inv;
    V term = rows[perm[0]][0];
    for (std::size_t j = 1; j < r; ++j) term = term * rows[perm[j]][j];
    out = inv % 2 ? out - term : out + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

TruncAGF moore_series(const std::vector<TruncAGF>& ws, std::uint64_t q);

// Coefficients of t^i in O_p^(2)(x, t)^(l+1) mod p(t), as polynomials in x.
std::vector<PolyF> mp_coeffs(const PolyF& p, std::size_t l);

// JSON object from monomial strings to coefficients in θ, sorted by key.
std::string qexp_json(const QExpansion& s, std::uint64_t q, int indent = -1);

}  // namespace dw
