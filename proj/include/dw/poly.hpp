#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "dw/error.hpp"
#include "dw/scalar.hpp"

namespace dw {

// Dense univariate polynomial, constant term first, no trailing zeros.
// The zero polynomial is the empty list; its degree is std::nullopt (-infinity).
template <class K>
class Poly {
 public:
  using coeff_type = K;

  Poly() = default;
  explicit Poly(std::vector<K> c) : c_(std::move(c)) { trim(); }

  static Poly constant(const K& c) { return Poly(std::vector<K>{c}); }
  static Poly monomial(const K& c, std::size_t k) {
    if (adl::iz(c)) return Poly();
    std::vector<K> v(k + 1, adl::zl(c));
    v[k] = c;
    return Poly(std::move(v));
  }
  static Poly var(const K& one) { return monomial(one, 1); }

  bool is_zero() const noexcept { return c_.empty(); }
  std::optional<std::size_t> degree() const {
    if (c_.empty()) return std::nullopt;
    return c_.size() - 1;
  }
  std::size_t deg() const {
    if (c_.empty()) throw Error(Errc::InvalidArgument, "degree of the zero polynomial");
    return c_.size() - 1;
  }
  std::size_t size() const noexcept { return c_.size(); }
  const K& operator[](std::size_t i) const { return c_[i]; }
  K coeff(std::size_t i, const K& like) const { return i < c_.size() ? c_[i] : adl::zl(like); }
  const K& lead() const { return c_.back(); }
  const std::vector<K>& coeffs() const noexcept { return c_; }
  bool is_monic() const { return !c_.empty() && c_.back() == adl::ol(c_.back()); }

  Poly operator-() const {
    Poly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  Poly& operator+=(const Poly& b) {
    if (b.c_.size() > c_.size()) c_.resize(b.c_.size(), adl::zl(b.c_[0]));
    for (std::size_t i = 0; i < b.c_.size(); ++i) c_[i] += b.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& b) { return *this += -b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<K> r(a.c_.size() + b.c_.size() - 1, adl::zl(a.c_[0]));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (adl::iz(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly scale(const K& s) const {
    if (adl::iz(s)) return Poly();
    std::vector<K> r = c_;
    for (auto& x : r) x *= s;
    return Poly(std::move(r));
  }
  // multiply by t^k
  Poly shift(std::size_t k) const {
    if (c_.empty()) return Poly();
    std::vector<K> r(k, adl::zl(c_[0]));
    r.insert(r.end(), c_.begin(), c_.end());
    return Poly(std::move(r));
  }
  Poly truncate(std::size_t n) const {
    if (c_.size() <= n) return *this;
    return Poly(std::vector<K>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(n)));
  }

  K eval(const K& x) const {
    K r = adl::zl(x);
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
  }
  // Horner evaluation in any algebra V given a lift K -> V.
  template <class V, class Lift>
  V eval_in(const V& x, const V& zero, Lift lift) const {
    V r = zero;
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x + lift(c_[i]);
    return r;
  }
  Poly compose(const Poly& g) const {
    Poly r;
    for (std::size_t i = c_.size(); i-- > 0;) r = r * g + constant(c_[i]);
    return r;
  }

  // Hasse-Schmidt derivative: t^k -> C(k, l) t^(k-l)
  Poly hasse(std::size_t l) const {
    if (c_.size() <= l) return Poly();
    const auto p = adl::chr(c_[0]);
    std::vector<K> r;
    r.reserve(c_.size() - l);
    for (std::size_t k = l; k < c_.size(); ++k)
      r.push_back(c_[k] * adl::il(c_[0], static_cast<long long>(binom_mod(k, l, p))));
    return Poly(std::move(r));
  }

  // Coefficientwise q-power and t -> t^q (the q-Frobenius of the whole polynomial).
  Poly frob(std::uint64_t q) const {
    if (c_.empty()) return Poly();
    std::vector<K> r((c_.size() - 1) * q + 1, adl::zl(c_[0]));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i * q] = adl::fr(c_[i], q);
    return Poly(std::move(r));
  }

  template <class F>
  auto map(F fn) const -> Poly<decltype(fn(std::declval<const K&>()))> {
    using R = decltype(fn(std::declval<const K&>()));
    std::vector<R> r;
    r.reserve(c_.size());
    for (const auto& x : c_) r.push_back(fn(x));
    return Poly<R>(std::move(r));
  }

  std::string to_string(const std::string& var = "t") const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (adl::iz(c_[i])) continue;
      if (!first) os << " + ";
      first = false;
      std::string cs = adl::str(c_[i]);
      bool one = c_[i] == adl::ol(c_[i]);
      bool compound = cs.find_first_of("+/ ") != std::string::npos;
      if (i == 0) {
        os << cs;
        continue;
      }
      if (!one) os << (compound ? "(" + cs + ")" : cs) << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && adl::iz(c_.back())) c_.pop_back();
  }
  std::vector<K> c_;
};

template <class K>
inline K inverse(const K& a) {
  return adl::ol(a) / a;
}

template <class K>
std::pair<Poly<K>, Poly<K>> divmod(const Poly<K>& a, const Poly<K>& b) {
  if (b.is_zero()) throw Error(Errc::InvalidArgument, "polynomial division by zero");
  if (a.is_zero() || a.size() < b.size()) return {Poly<K>(), a};
  std::vector<K> r = a.coeffs();
  const std::size_t db = b.size() - 1;
  const K li = inverse(b.lead());
  std::vector<K> qc(a.size() - db, adl::zl(b.lead()));
  for (std::size_t k = r.size(); k-- > db;) {
    if (adl::iz(r[k])) continue;
    K c = r[k] * li;
    qc[k - db] = c;
    for (std::size_t i = 0; i <= db; ++i) r[k - db + i] -= c * b[i];
  }
  r.resize(db);
  return {Poly<K>(std::move(qc)), Poly<K>(std::move(r))};
}

template <class K>
Poly<K> operator/(const Poly<K>& a, const Poly<K>& b) {
  return divmod(a, b).first;
}
template <class K>
Poly<K> operator%(const Poly<K>& a, const Poly<K>& b) {
  return divmod(a, b).second;
}

template <class K>
Poly<K> make_monic(const Poly<K>& a) {
  if (a.is_zero()) return a;
  return a.scale(inverse(a.lead()));
}

template <class K>
Poly<K> gcd(Poly<K> a, Poly<K> b) {
  while (!b.is_zero()) {
    Poly<K> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

// Returns (g, s, u) with s*a + u*b = g monic.
template <class K>
std::tuple<Poly<K>, Poly<K>, Poly<K>> xgcd(const Poly<K>& a, const Poly<K>& b, const K& one) {
  Poly<K> r0 = a, r1 = b, s0 = Poly<K>::constant(one), s1, u0, u1 = Poly<K>::constant(one);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly<K> s2 = s0 - q * s1, u2 = u0 - q * u1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    u0 = std::move(u1);
    u1 = std::move(u2);
  }
  if (r0.is_zero()) return {r0, s0, u0};
  K li = inverse(r0.lead());
  return {r0.scale(li), s0.scale(li), u0.scale(li)};
}

// g with g*h = 1 mod f, deg g < deg f.
template <class K>
Poly<K> inv_mod(const Poly<K>& h, const Poly<K>& f) {
  if (f.is_zero()) throw Error(Errc::InvalidArgument, "inv_mod with zero modulus");
  const K one = adl::ol(f.lead());
  Poly<K> hr = h % f;
  if (hr.is_zero()) throw Error(Errc::NotInvertibleModF, "h is divisible by f");
  auto [g, s, u] = xgcd(hr, f, one);
  if (g.size() != 1) throw Error(Errc::NotInvertibleModF, "gcd(h, f) is not 1");
  return s % f;
}

template <class K>
Poly<K> pow(const Poly<K>& a, std::uint64_t k, const K& one) {
  Poly<K> r = Poly<K>::constant(one), b = a;
  while (k > 0) {
    if (k & 1) r = r * b;
    k >>= 1;
    if (k) b = b * b;
  }
  return r;
}

template <class K>
Poly<K> pow_mod(const Poly<K>& a, std::uint64_t k, const Poly<K>& m) {
  const K one = adl::ol(m.lead());
  Poly<K> r = Poly<K>::constant(one) % m, b = a % m;
  while (k > 0) {
    if (k & 1) r = (r * b) % m;
    k >>= 1;
    if (k) b = (b * b) % m;
  }
  return r;
}

template <class K>
Poly<K> pow_mod_big(const Poly<K>& a, unsigned __int128 k, const Poly<K>& m) {
  const K one = adl::ol(m.lead());
  Poly<K> r = Poly<K>::constant(one) % m, b = a % m;
  while (k > 0) {
    if (k & 1) r = (r * b) % m;
    k >>= 1;
    if (k) b = (b * b) % m;
  }
  return r;
}

using PolyF = Poly<Elem>;

// Polynomial over a finite field from integer encodings of the coefficients.
inline PolyF poly_from_values(const FiniteField& F, const std::vector<std::uint64_t>& vals) {
  std::vector<Elem> c;
  c.reserve(vals.size());
  for (auto v : vals) c.push_back(F.from_value(v));
  return PolyF(std::move(c));
}
inline PolyF poly_from_ints(const FiniteField& F, const std::vector<long long>& vals) {
  std::vector<Elem> c;
  c.reserve(vals.size());
  for (auto v : vals) c.push_back(F.from_int(v));
  return PolyF(std::move(c));
}
inline std::vector<std::uint64_t> poly_values(const PolyF& a) {
  std::vector<std::uint64_t> out;
  for (const auto& c : a.coeffs()) out.push_back(c.value());
  return out;
}

}  // namespace dw
