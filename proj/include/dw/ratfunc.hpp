#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dw/poly.hpp"

namespace dw {

// Reduced fraction num/den with den monic.
template <class K>
class RatFunc {
 public:
  RatFunc() = default;
  RatFunc(Poly<K> num, Poly<K> den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  static RatFunc from_poly(Poly<K> p, const K& one) {
    RatFunc r;
    r.num_ = std::move(p);
    r.den_ = Poly<K>::constant(one);
    return r;
  }
  static RatFunc constant(const K& c) { return from_poly(Poly<K>::constant(c), adl::ol(c)); }

  const Poly<K>& num() const { return num_; }
  const Poly<K>& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_poly() const { return den_.size() == 1; }
  K one() const { return adl::ol(den_.lead()); }

  RatFunc operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
  }
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) {
      if (a.is_poly()) return from_poly(a.num_ + b.num_, a.one());
      return RatFunc(a.num_ + b.num_, a.den_);
    }
    if (a.is_poly()) return raw(a.num_ * b.den_ + b.num_, b.den_);
    if (b.is_poly()) return raw(a.num_ + b.num_ * a.den_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return a;
    if (b.is_zero()) return b;
    if (a.is_poly() && b.is_poly()) return from_poly(a.num_ * b.num_, a.one());
    Poly<K> g1 = b.is_poly() ? Poly<K>::constant(a.one()) : gcd(a.num_, b.den_);
    Poly<K> g2 = a.is_poly() ? Poly<K>::constant(a.one()) : gcd(b.num_, a.den_);
    Poly<K> n = (a.num_ / g1) * (b.num_ / g2);
    Poly<K> d = (a.den_ / g2) * (b.den_ / g1);
    return raw_monic(std::move(n), std::move(d));
  }
  RatFunc inv() const {
    if (is_zero()) throw Error(Errc::InvalidArgument, "inverse of zero rational function");
    return raw_monic(den_, num_);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inv(); }
  RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
  RatFunc& operator-=(const RatFunc& b) { return *this = *this - b; }
  RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }
  RatFunc& operator/=(const RatFunc& b) { return *this = *this / b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  RatFunc pow(std::uint64_t k) const {
    RatFunc r = from_poly(Poly<K>::constant(one()), one()), b = *this;
    while (k > 0) {
      if (k & 1) r = r * b;
      k >>= 1;
      if (k) b = b * b;
    }
    return r;
  }
  // x -> x^q; for the function field case this is the substitution var -> var^q
  RatFunc frob(std::uint64_t q) const {
    RatFunc r;
    r.num_ = num_.frob(q);
    r.den_ = den_.frob(q);
    return r;
  }
  K eval(const K& x) const {
    K d = den_.eval(x);
    if (adl::iz(d)) throw Error(Errc::InvalidArgument, "evaluation at a pole");
    return num_.eval(x) / d;
  }

  std::string to_string(const std::string& var = "t") const {
    if (is_poly()) return num_.to_string(var);
    auto wrap = [&](const Poly<K>& p) {
      std::string s = p.to_string(var);
      return s.find_first_of("+ ") != std::string::npos ? "(" + s + ")" : s;
    };
    return wrap(num_) + "/" + wrap(den_);
  }

 private:
  static RatFunc raw(Poly<K> n, Poly<K> d) {
    // d monic and already coprime to n
    RatFunc r;
    r.num_ = std::move(n);
    r.den_ = std::move(d);
    if (r.num_.is_zero()) r.den_ = Poly<K>::constant(adl::ol(r.den_.lead()));
    return r;
  }
  static RatFunc raw_monic(Poly<K> n, Poly<K> d) {
    RatFunc r;
    if (d.is_zero()) throw Error(Errc::InvalidArgument, "zero denominator");
    K li = inverse(d.lead());
    r.num_ = n.scale(li);
    r.den_ = d.scale(li);
    if (r.num_.is_zero()) r.den_ = Poly<K>::constant(adl::ol(li));
    return r;
  }
  void normalize() {
    if (den_.is_zero()) throw Error(Errc::InvalidArgument, "zero denominator");
    if (num_.is_zero()) {
      den_ = Poly<K>::constant(adl::ol(den_.lead()));
      return;
    }
    if (den_.size() > 1) {
      Poly<K> g = gcd(num_, den_);
      if (g.size() > 1) {
        num_ = num_ / g;
        den_ = den_ / g;
      }
    }
    K li = inverse(den_.lead());
    if (!(li == adl::ol(li))) {
      num_ = num_.scale(li);
      den_ = den_.scale(li);
    }
  }
  Poly<K> num_, den_;
};

template <class K>
RatFunc<K> zero_like(const RatFunc<K>& r) {
  return RatFunc<K>::from_poly(Poly<K>(), r.one());
}
template <class K>
RatFunc<K> one_like(const RatFunc<K>& r) {
  return RatFunc<K>::constant(r.one());
}
template <class K>
RatFunc<K> int_like(const RatFunc<K>& r, long long n) {
  return RatFunc<K>::constant(adl::il(r.one(), n));
}
template <class K>
RatFunc<K> frob(const RatFunc<K>& r, std::uint64_t q) {
  return r.frob(q);
}
template <class K>
bool is_zero(const RatFunc<K>& r) {
  return r.is_zero();
}
template <class K>
std::uint32_t characteristic(const RatFunc<K>& r) {
  return adl::chr(r.one());
}
template <class K>
std::string to_string(const RatFunc<K>& r) {
  return r.to_string("θ");
}

// Elements of F_q(θ) and polynomials / rational functions in t over it.
using RatFn = RatFunc<Elem>;
using PolyT = Poly<RatFn>;
using RatT = RatFunc<RatFn>;

inline RatFn rat_const(const Elem& c) { return RatFn::constant(c); }
inline RatFn theta_of(const FiniteField& Fq) {
  return RatFn::from_poly(PolyF::var(Fq.one()), Fq.one());
}
inline RatFn rat_of_poly(const PolyF& p, const FiniteField& Fq) { return RatFn::from_poly(p, Fq.one()); }
// a(t) over F_q as a polynomial in t over F_q(θ)
inline PolyT lift_to_t(const PolyF& a) {
  return a.map([](const Elem& c) { return RatFn::constant(c); });
}

template <class K>
struct Differential {
  RatFunc<K> g;  // g dt
};

// Coefficients of r in u = 1/t: r = sum_k coeffs[k] u^(lead_exp + k), exact to prec terms.
template <class K>
struct LaurentAtInfinity {
  long long lead_exp = 0;
  std::vector<K> coeffs;
  std::size_t prec = 0;
};

// First n coefficients of the power series a/b, b(0) != 0.
template <class K>
std::vector<K> series_div(const std::vector<K>& a, const std::vector<K>& b, std::size_t n, const K& zero) {
  std::vector<K> out(n, zero);
  if (b.empty() || adl::iz(b[0])) throw Error(Errc::InvalidArgument, "series divisor with zero constant term");
  const K b0i = inverse(b[0]);
  for (std::size_t k = 0; k < n; ++k) {
    K s = k < a.size() ? a[k] : zero;
    for (std::size_t j = 1; j <= k && j < b.size(); ++j) s -= b[j] * out[k - j];
    out[k] = s * b0i;
  }
  return out;
}

template <class K>
LaurentAtInfinity<K> laurent_at_infinity(const RatFunc<K>& r, std::size_t prec) {
  LaurentAtInfinity<K> L;
  L.prec = prec;
  if (r.is_zero()) return L;
  const std::size_t dn = r.num().deg(), dd = r.den().deg();
  // r = u^(dd-dn) * rev(num)(u) / rev(den)(u)
  std::vector<K> a(r.num().coeffs().rbegin(), r.num().coeffs().rend());
  std::vector<K> b(r.den().coeffs().rbegin(), r.den().coeffs().rend());
  L.lead_exp = static_cast<long long>(dd) - static_cast<long long>(dn);
  L.coeffs = series_div(a, b, prec, adl::zl(r.one()));
  return L;
}

template <class K>
K laurent_coeff(const LaurentAtInfinity<K>& L, long long exponent, const K& zero) {
  long long k = exponent - L.lead_exp;
  if (k < 0) return zero;
  if (static_cast<std::size_t>(k) >= L.coeffs.size()) {
    if (L.coeffs.empty() && L.prec == 0) return zero;
    if (static_cast<std::size_t>(k) >= L.prec) throw Error(Errc::OutOfRange, "Laurent coefficient beyond precision");
    return zero;
  }
  return L.coeffs[static_cast<std::size_t>(k)];
}

// Res_inf(g dt): with t = 1/u, dt = -du/u^2, the residue is -[u^1] g.
template <class K>
K residue_at_infinity(const RatFunc<K>& g) {
  const K zero = adl::zl(g.one());
  if (g.is_zero()) return zero;
  long long le = static_cast<long long>(g.den().deg()) - static_cast<long long>(g.num().deg());
  if (le > 1) return zero;
  auto L = laurent_at_infinity(g, static_cast<std::size_t>(2 - le));
  return -laurent_coeff(L, 1, zero);
}
template <class K>
K residue_at_infinity(const Differential<K>& w) {
  return residue_at_infinity(w.g);
}

// Taylor shift p(t + c).
template <class K>
Poly<K> taylor_shift(const Poly<K>& p, const K& c) {
  Poly<K> lin(std::vector<K>{c, adl::ol(c)});
  return p.compose(lin);
}

// Coefficient of (t-c)^-1 in the expansion at c.
template <class K>
K residue_at_point(const RatFunc<K>& g, const K& c) {
  const K zero = adl::zl(c);
  if (g.is_zero()) return zero;
  Poly<K> n = taylor_shift(g.num(), c), d = taylor_shift(g.den(), c);
  std::size_t vn = 0, vd = 0;
  while (adl::iz(n[vn])) ++vn;
  while (adl::iz(d[vd])) ++vd;
  if (vn >= vd) return zero;
  std::size_t need = vd - vn - 1;  // index of s^-1 in s^(vn-vd) * (n/s^vn)/(d/s^vd)
  std::vector<K> a(n.coeffs().begin() + static_cast<std::ptrdiff_t>(vn), n.coeffs().end());
  std::vector<K> b(d.coeffs().begin() + static_cast<std::ptrdiff_t>(vd), d.coeffs().end());
  auto s = series_div(a, b, need + 1, zero);
  return s[need];
}
template <class K>
K residue_at_point(const Differential<K>& w, const K& c) {
  return residue_at_point(w.g, c);
}

}  // namespace dw
