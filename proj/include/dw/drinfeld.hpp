#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dw/ratfunc.hpp"

namespace dw {

// c -> c^(q^k)
template <class K>
K frob_iter(K c, std::uint64_t q, std::size_t k) {
  for (std::size_t i = 0; i < k; ++i) c = adl::fr(c, q);
  return c;
}

// Polynomials sum c_i tau^i with tau c = c^q tau.
template <class K>
class TwistedPoly {
 public:
  TwistedPoly() = default;
  TwistedPoly(std::vector<K> c, std::uint64_t q) : c_(std::move(c)), q_(q) { trim(); }
  static TwistedPoly constant(const K& c, std::uint64_t q) { return TwistedPoly(std::vector<K>{c}, q); }
  static TwistedPoly tau(const K& one, std::uint64_t q, std::size_t k = 1) {
    std::vector<K> v(k + 1, adl::zl(one));
    v[k] = one;
    return TwistedPoly(std::move(v), q);
  }

  std::uint64_t q() const { return q_; }
  bool is_zero() const { return c_.empty(); }
  std::size_t size() const { return c_.size(); }
  std::optional<std::size_t> degree() const {
    if (c_.empty()) return std::nullopt;
    return c_.size() - 1;
  }
  const K& operator[](std::size_t i) const { return c_[i]; }
  const std::vector<K>& coeffs() const { return c_; }

  friend TwistedPoly operator+(const TwistedPoly& a, const TwistedPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    std::vector<K> r = a.c_.size() >= b.c_.size() ? a.c_ : b.c_;
    const auto& o = a.c_.size() >= b.c_.size() ? b.c_ : a.c_;
    for (std::size_t i = 0; i < o.size(); ++i) r[i] += o[i];
    return TwistedPoly(std::move(r), a.q_);
  }
  TwistedPoly operator-() const {
    TwistedPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend TwistedPoly operator-(const TwistedPoly& a, const TwistedPoly& b) { return a + (-b); }
  friend TwistedPoly operator*(const TwistedPoly& a, const TwistedPoly& b) {
    if (a.is_zero() || b.is_zero()) return TwistedPoly(std::vector<K>{}, a.q_ ? a.q_ : b.q_);
    if (a.q_ != b.q_) throw Error(Errc::InvalidArgument, "twisted polynomials over different q");
    std::vector<K> r(a.c_.size() + b.c_.size() - 1, adl::zl(a.c_[0]));
    std::vector<K> bt = b.c_;  // b coefficients raised to q^i
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (i) for (auto& x : bt) x = adl::fr(x, a.q_);
      if (adl::iz(a.c_[i])) continue;
      for (std::size_t j = 0; j < bt.size(); ++j) r[i + j] += a.c_[i] * bt[j];
    }
    return TwistedPoly(std::move(r), a.q_);
  }
  friend bool operator==(const TwistedPoly& a, const TwistedPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const TwistedPoly& a, const TwistedPoly& b) { return !(a == b); }

  // sum c_i mu^(q^i)
  K apply(const K& mu) const {
    K r = adl::zl(mu), m = mu;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i) m = adl::fr(m, q_);
      r += c_[i] * m;
    }
    return r;
  }

  std::string to_string() const {
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (adl::iz(c_[i])) continue;
      if (!s.empty()) s += " + ";
      std::string cs = adl::str(c_[i]);
      if (cs.find_first_of("+/ ") != std::string::npos) cs = "(" + cs + ")";
      if (i == 0) {
        s += cs;
        continue;
      }
      if (!(c_[i] == adl::ol(c_[i]))) s += cs + "*";
      s += "τ";
      if (i > 1) s += "^" + std::to_string(i);
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && adl::iz(c_.back())) c_.pop_back();
  }
  std::vector<K> c_;
  std::uint64_t q_ = 0;
};

// phi_x = theta + g_1 tau + ... + g_r tau^r over a field K containing F_q.
template <class K>
class DrinfeldModule {
 public:
  using Lift = std::function<K(const Elem&)>;

  DrinfeldModule() = default;
  DrinfeldModule(K theta, std::vector<K> g, FieldPtr Fq, Lift lift)
      : theta_(std::move(theta)), g_(std::move(g)), Fq_(std::move(Fq)), lift_(std::move(lift)) {
    if (g_.empty() || adl::iz(g_.back())) throw Error(Errc::InvalidArgument, "leading coefficient g_r must be nonzero");
    std::vector<K> c{theta_};
    c.insert(c.end(), g_.begin(), g_.end());
    phi_x_ = TwistedPoly<K>(std::move(c), q());
  }

  std::size_t rank() const { return g_.size(); }
  const K& theta() const { return theta_; }
  const std::vector<K>& g() const { return g_; }
  const FieldPtr& fq() const { return Fq_; }
  std::uint64_t q() const { return Fq_->size(); }
  K lift(const Elem& c) const { return lift_(c); }
  const Lift& lifter() const { return lift_; }
  const TwistedPoly<K>& phi_x() const { return phi_x_; }

  TwistedPoly<K> phi_of(const PolyF& a) const {
    check_poly(a);
    TwistedPoly<K> r(std::vector<K>{}, q());
    for (std::size_t i = a.size(); i-- > 0;) r = r * phi_x_ + TwistedPoly<K>::constant(lift_(a[i]), q());
    return r;
  }
  K phi_apply(const PolyF& a, const K& mu) const {
    check_poly(a);
    K r = adl::zl(mu), m = mu;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i) m = phi_x_.apply(m);
      if (!a[i].is_zero()) r += lift_(a[i]) * m;
    }
    return r;
  }

  // psi_x = theta + (-1)^(r-1) g_r tau
  DrinfeldModule exterior() const {
    K c = rank() % 2 == 1 ? g_.back() : -g_.back();
    return DrinfeldModule(theta_, {c}, Fq_, lift_);
  }

 private:
  void check_poly(const PolyF& a) const {
    if (!a.is_zero() && a[0].field_ptr() != Fq_.get())
      throw Error(Errc::InvalidArgument, "polynomial is not over the constant field F_q");
  }
  K theta_;
  std::vector<K> g_;
  FieldPtr Fq_;
  Lift lift_;
  TwistedPoly<K> phi_x_;
};

using FiniteModule = DrinfeldModule<Elem>;
using RationalModule = DrinfeldModule<RatFn>;

// Module over a finite A-field K = F_{q^m} (theta and g in K).
FiniteModule finite_module(const FieldPtr& Fq, Elem theta, std::vector<Elem> g);
// Module over F_q(theta).
RationalModule rational_module(const FieldPtr& Fq, std::vector<RatFn> g);

const FiniteField& a_field(const FiniteModule& M);
FiniteModule base_change(const FiniteModule& M, const FieldEmbedding& emb);
// Minimal polynomial of theta over F_q, the characteristic of the A-field.
PolyF a_characteristic(const FiniteModule& M);

struct TorsionBasis {
  FieldPtr field;        // F_{q^(m s)}
  FieldEmbedding emb;    // A-field -> field
  std::uint32_t s = 1;
  PolyF f;
  std::vector<Elem> points;  // F_q-basis of phi[f]
  FiniteModule module;       // M over field
};

TorsionBasis torsion_basis(const FiniteModule& M, const PolyF& f, std::uint32_t cap = 12);

// F_q-structure of an extension L of F_q.
std::size_t fq_rank(const std::vector<Elem>& xs, const FiniteField& Fq);
std::vector<Elem> fq_span(const std::vector<Elem>& basis, const FiniteField& Fq);
Elem fq_combination(const std::vector<Elem>& basis, const std::vector<Elem>& coeffs);

// r torsion points generating phi[f] as an A/f-module, found by a seeded search.
std::vector<Elem> module_basis(const TorsionBasis& tb, std::uint64_t seed = 0);

// e_i = 1/D_i for i = 0..N
std::vector<RatFn> exp_coeffs(const RationalModule& M, std::size_t N);

}  // namespace dw
