#include "dw/field.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

namespace dw {

const char* errc_name(Errc c) noexcept {
  switch (c) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::NotPrime: return "NotPrime";
    case Errc::ReducibleModulus: return "ReducibleModulus";
    case Errc::NotInvertibleModF: return "NotInvertibleModF";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::NotATree: return "NotATree";
    case Errc::NotARoot: return "NotARoot";
    case Errc::PoleOnModulus: return "PoleOnModulus";
    case Errc::InconsistentJets: return "InconsistentJets";
    case Errc::SplittingFieldTooLarge: return "SplittingFieldTooLarge";
    case Errc::BadCharacteristic: return "BadCharacteristic";
    case Errc::NotTorsion: return "NotTorsion";
    case Errc::TruncationTooShallow: return "TruncationTooShallow";
    case Errc::RankMismatch: return "RankMismatch";
    case Errc::Unsupported: return "Unsupported";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

// Dense polynomials over F_p with int64 coefficients, constant first.
using PP = std::vector<std::int64_t>;

void pp_trim(PP& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

PP pp_mod(PP a, const PP& m, std::int64_t p) {
  pp_trim(a);
  const std::size_t dm = m.size() - 1;
  const std::int64_t lead_inv = [&] {
    std::int64_t r = 1, b = m.back() % p, k = p - 2;
    while (k > 0) {
      if (k & 1) r = r * b % p;
      b = b * b % p;
      k >>= 1;
    }
    return r;
  }();
  while (a.size() > dm) {
    std::int64_t c = a.back() * lead_inv % p;
    std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = ((a[shift + i] - c * m[i]) % p + p) % p;
    pp_trim(a);
  }
  return a;
}

PP pp_mulmod(const PP& a, const PP& b, const PP& m, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  PP r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return pp_mod(std::move(r), m, p);
}

PP pp_gcd(PP a, PP b, std::int64_t p) {
  pp_trim(a);
  pp_trim(b);
  while (!b.empty()) {
    PP r = pp_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// x^(p^k) mod m
PP pp_frob_x(const PP& m, std::int64_t p, std::uint32_t k) {
  PP x = pp_mod(PP{0, 1}, m, p);
  for (std::uint32_t i = 0; i < k; ++i) {
    PP base = x, r{1};
    std::int64_t e = p;
    while (e > 0) {
      if (e & 1) r = pp_mulmod(r, base, m, p);
      base = pp_mulmod(base, base, m, p);
      e >>= 1;
    }
    x = r;
  }
  return x;
}

std::vector<std::uint32_t> prime_divisors(std::uint32_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_irreducible_mod_p(std::uint32_t p, const std::vector<std::uint32_t>& monic) {
  if (monic.size() < 2 || monic.back() != 1) return false;
  const std::uint32_t e = static_cast<std::uint32_t>(monic.size() - 1);
  if (e == 1) return true;
  PP m(monic.begin(), monic.end());
  const std::int64_t P = p;
  PP xe = pp_frob_x(m, P, e);
  PP x = pp_mod(PP{0, 1}, m, P);
  if (xe != x) return false;
  for (std::uint32_t l : prime_divisors(e)) {
    PP h = pp_frob_x(m, P, e / l);
    h.resize(std::max<std::size_t>(h.size(), 2), 0);
    h[1] = ((h[1] - 1) % P + P) % P;
    pp_trim(h);
    PP g = pp_gcd(m, h, P);
    if (g.size() != 1) return false;
  }
  return true;
}

std::vector<std::uint32_t> smallest_irreducible(std::uint32_t p, std::uint32_t e) {
  if (e == 0) throw Error(Errc::InvalidArgument, "extension degree must be >= 1");
  std::vector<std::uint32_t> c(e + 1, 0);
  c[e] = 1;
  if (e > 1) c[0] = 1;  // constant 0 means divisible by y
  // counter with c[0] most significant: lexicographic on the constant-first list
  for (;;) {
    if (is_irreducible_mod_p(p, c)) return c;
    int i = static_cast<int>(e) - 1;
    while (i >= 0 && c[i] == p - 1) c[i--] = 0;
    if (i < 0) break;
    ++c[i];
  }
  throw Error(Errc::InvalidArgument, "no irreducible polynomial found");
}

struct FieldRegistry {
  std::mutex mu;
  std::map<std::pair<std::uint32_t, std::vector<std::uint32_t>>, std::shared_ptr<FiniteField>> fields;

  static FieldRegistry& get() {
    static FieldRegistry r;
    return r;
  }
};

FieldPtr FiniteField::make(std::uint32_t p, std::uint32_t e,
                           std::optional<std::vector<std::uint32_t>> modulus) {
  if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  if (e == 0) throw Error(Errc::InvalidArgument, "extension degree must be >= 1");
  std::vector<std::uint32_t> m;
  if (modulus) {
    m = *modulus;
    for (auto& c : m) {
      if (c >= p) throw Error(Errc::InvalidArgument, "modulus coefficient out of range");
    }
    while (!m.empty() && m.back() == 0) m.pop_back();
    if (m.size() != e + 1 || m.back() != 1)
      throw Error(Errc::InvalidArgument, "modulus must be monic of degree e");
  }
  double bits = e * std::log2(static_cast<double>(p));
  if (bits > 62) throw Error(Errc::Unsupported, "field too large");

  auto& reg = FieldRegistry::get();
  {
    std::lock_guard<std::mutex> lk(reg.mu);
    if (modulus) {
      auto it = reg.fields.find({p, m});
      if (it != reg.fields.end()) return it->second;
    }
  }
  if (modulus) {
    if (!is_irreducible_mod_p(p, m))
      throw Error(Errc::ReducibleModulus, "modulus is reducible over F_" + std::to_string(p));
  } else {
    // default modulus per (p, e)
    static std::mutex dmu;
    static std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::uint32_t>> defaults;
    std::lock_guard<std::mutex> lk(dmu);
    auto it = defaults.find({p, e});
    if (it == defaults.end()) it = defaults.emplace(std::make_pair(p, e), smallest_irreducible(p, e)).first;
    m = it->second;
  }
  std::lock_guard<std::mutex> lk(reg.mu);
  auto it = reg.fields.find({p, m});
  if (it != reg.fields.end()) return it->second;
  std::shared_ptr<FiniteField> f(new FiniteField(FieldDesc{p, e, m}));
  f->self_ = f;
  reg.fields.emplace(std::make_pair(p, m), f);
  return f;
}

FiniteField::FiniteField(FieldDesc d) : desc_(std::move(d)) {
  pw_.resize(desc_.e + 1);
  pw_[0] = 1;
  for (std::uint32_t i = 1; i <= desc_.e; ++i) pw_[i] = pw_[i - 1] * desc_.p;
  size_ = pw_[desc_.e];
  if (desc_.e > 1 && size_ <= (1u << 20)) build_tables();
}

FieldPtr FiniteField::ptr() const { return self_.lock(); }

void FiniteField::build_tables() {
  const std::uint64_t n1 = size_ - 1;
  std::vector<std::uint64_t> ps;
  {
    std::uint64_t n = n1;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) {
        ps.push_back(d);
        while (n % d == 0) n /= d;
      }
    }
    if (n > 1) ps.push_back(n);
  }
  auto slow_pow = [&](std::uint64_t a, std::uint64_t k) {
    std::uint64_t r = 1;
    while (k > 0) {
      if (k & 1) r = slow_mul(r, a);
      a = slow_mul(a, a);
      k >>= 1;
    }
    return r;
  };
  std::uint64_t g = 2;
  for (;; ++g) {
    bool prim = true;
    for (auto l : ps) {
      if (slow_pow(g, n1 / l) == 1) {
        prim = false;
        break;
      }
    }
    if (prim) break;
  }
  exp_.resize(n1);
  log_.assign(size_, 0);
  std::uint64_t x = 1;
  for (std::uint64_t i = 0; i < n1; ++i) {
    exp_[i] = static_cast<std::uint32_t>(x);
    log_[x] = static_cast<std::uint32_t>(i);
    x = slow_mul(x, g);
  }
  tables_ = true;
}

std::uint64_t FiniteField::add(std::uint64_t a, std::uint64_t b) const {
  const std::uint32_t p = desc_.p;
  if (desc_.e == 1) {
    std::uint64_t s = a + b;
    return s >= p ? s - p : s;
  }
  if (p == 2) return a ^ b;
  std::uint64_t r = 0;
  for (std::uint32_t i = 0; (a | b) != 0; ++i) {
    std::uint64_t s = a % p + b % p;
    if (s >= p) s -= p;
    r += s * pw_[i];
    a /= p;
    b /= p;
  }
  return r;
}

std::uint64_t FiniteField::neg(std::uint64_t a) const {
  const std::uint32_t p = desc_.p;
  if (p == 2) return a;
  if (desc_.e == 1) return a == 0 ? 0 : p - a;
  std::uint64_t r = 0;
  for (std::uint32_t i = 0; a != 0; ++i) {
    std::uint64_t d = a % p;
    if (d) r += (p - d) * pw_[i];
    a /= p;
  }
  return r;
}

std::uint64_t FiniteField::sub(std::uint64_t a, std::uint64_t b) const { return add(a, neg(b)); }

std::uint64_t FiniteField::slow_mul(std::uint64_t a, std::uint64_t b) const {
  const std::uint32_t p = desc_.p, e = desc_.e;
  std::vector<std::uint64_t> da(e, 0), db(e, 0), prod(2 * e, 0);
  for (std::uint32_t i = 0; i < e; ++i) {
    da[i] = a % p;
    a /= p;
    db[i] = b % p;
    b /= p;
  }
  for (std::uint32_t i = 0; i < e; ++i) {
    if (!da[i]) continue;
    for (std::uint32_t j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
  }
  for (std::uint32_t k = 2 * e - 1; k >= e; --k) {
    std::uint64_t c = prod[k];
    if (!c) continue;
    prod[k] = 0;
    for (std::uint32_t i = 0; i < e; ++i)
      prod[k - e + i] = (prod[k - e + i] + (p - desc_.modulus[i]) % p * c) % p;
  }
  std::uint64_t r = 0;
  for (std::uint32_t i = e; i-- > 0;) r = r * p + prod[i];
  return r;
}

std::uint64_t FiniteField::mul(std::uint64_t a, std::uint64_t b) const {
  if (a == 0 || b == 0) return 0;
  if (desc_.e == 1) return a * b % desc_.p;
  if (tables_) {
    std::uint64_t s = std::uint64_t(log_[a]) + log_[b];
    if (s >= size_ - 1) s -= size_ - 1;
    return exp_[s];
  }
  return slow_mul(a, b);
}

std::uint64_t FiniteField::pow(std::uint64_t a, std::uint64_t k) const {
  if (k == 0) return 1;
  if (a == 0) return 0;
  if (tables_) {
    unsigned __int128 s = static_cast<unsigned __int128>(log_[a]) * (k % (size_ - 1));
    return exp_[static_cast<std::uint64_t>(s % (size_ - 1))];
  }
  std::uint64_t r = 1;
  k %= (size_ - 1);
  if (k == 0) return 1;
  while (k > 0) {
    if (k & 1) r = mul(r, a);
    a = mul(a, a);
    k >>= 1;
  }
  return r;
}

std::uint64_t FiniteField::inv(std::uint64_t a) const {
  if (a == 0) throw Error(Errc::InvalidArgument, "division by zero in F_" + std::to_string(size_));
  if (tables_) return exp_[(size_ - 1 - log_[a]) % (size_ - 1)];
  return pow(a, size_ - 2);
}

Elem FiniteField::from_int(long long n) const {
  long long p = desc_.p;
  long long r = ((n % p) + p) % p;
  return Elem(this, static_cast<std::uint64_t>(r));
}

Elem FiniteField::from_value(std::uint64_t v) const {
  if (v >= size_) throw Error(Errc::OutOfRange, "element encoding out of range");
  return Elem(this, v);
}

Elem FiniteField::from_coeffs(const std::vector<std::uint32_t>& c) const {
  const std::uint32_t p = desc_.p, e = desc_.e;
  std::vector<std::uint64_t> d(std::max<std::size_t>(c.size(), e), 0);
  for (std::size_t i = 0; i < c.size(); ++i) d[i] = c[i] % p;
  for (std::size_t k = d.size(); k-- > e;) {
    std::uint64_t co = d[k];
    if (!co) continue;
    d[k] = 0;
    for (std::uint32_t i = 0; i < e; ++i) d[k - e + i] = (d[k - e + i] + (p - desc_.modulus[i]) % p * co) % p;
  }
  std::uint64_t r = 0;
  for (std::uint32_t i = e; i-- > 0;) r = r * p + d[i];
  return Elem(this, r);
}

std::vector<std::uint32_t> FiniteField::coeffs(const Elem& a) const {
  std::vector<std::uint32_t> out(desc_.e);
  std::uint64_t v = a.value();
  for (std::uint32_t i = 0; i < desc_.e; ++i) {
    out[i] = static_cast<std::uint32_t>(v % desc_.p);
    v /= desc_.p;
  }
  return out;
}

Elem FiniteField::gen() const { return from_coeffs({0, 1}); }

std::string FiniteField::to_string(const Elem& a) const {
  if (desc_.e == 1) return std::to_string(a.value());
  auto c = coeffs(a);
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (!c[i]) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || c[i] != 1) os << c[i];
    if (i > 0) {
      if (c[i] != 1) os << "*";
      os << "a";
      if (i > 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  return os.str();
}

Elem Elem::operator-() const { return Elem(f_, f_->neg(v_)); }
Elem& Elem::operator+=(const Elem& b) {
  v_ = f_->add(v_, b.v_);
  return *this;
}
Elem& Elem::operator-=(const Elem& b) {
  v_ = f_->sub(v_, b.v_);
  return *this;
}
Elem& Elem::operator*=(const Elem& b) {
  v_ = f_->mul(v_, b.v_);
  return *this;
}
Elem& Elem::operator/=(const Elem& b) {
  v_ = f_->mul(v_, f_->inv(b.v_));
  return *this;
}
Elem Elem::inv() const { return Elem(f_, f_->inv(v_)); }
Elem Elem::pow(std::uint64_t k) const { return Elem(f_, f_->pow(v_, k)); }

FieldEmbedding::FieldEmbedding(FieldPtr from, FieldPtr to) : from_(std::move(from)), to_(std::move(to)) {
  if (from_->p() != to_->p() || to_->degree() % from_->degree() != 0)
    throw Error(Errc::InvalidArgument, "source is not a subfield of target");
  const auto& m = from_->desc().modulus;
  auto eval_mod = [&](const Elem& x) {
    Elem r = to_->zero();
    for (std::size_t i = m.size(); i-- > 0;) r = r * x + to_->from_int(m[i]);
    return r;
  };
  if (from_->degree() == 1) {
    root_ = to_->from_int(-static_cast<long long>(m[0]));
  } else {
    const std::uint64_t nt = to_->size() - 1, nf = from_->size() - 1;
    bool found = false;
    for (std::uint64_t a = 2; a <= nt && !found; ++a) {
      Elem beta = Elem(to_.get(), a).pow(nt / nf);
      Elem x = to_->one();
      for (std::uint64_t k = 0; k < nf; ++k) {
        if (eval_mod(x).is_zero()) {
          root_ = x;
          found = true;
          break;
        }
        x *= beta;
      }
    }
    if (!found) throw Error(Errc::InvalidArgument, "no root of the subfield modulus in target");
  }
  root_pows_.resize(from_->degree());
  Elem x = to_->one();
  for (auto& rp : root_pows_) {
    rp = x;
    x *= root_;
  }
}

Elem FieldEmbedding::operator()(const Elem& a) const {
  if (from_->degree() == 1) return to_->from_int(static_cast<long long>(a.value()));
  Elem r = to_->zero();
  std::uint64_t v = a.value();
  for (std::size_t i = 0; v != 0; ++i) {
    std::uint64_t d = v % from_->p();
    v /= from_->p();
    if (d) r += to_->from_int(static_cast<long long>(d)) * root_pows_[i];
  }
  return r;
}

std::optional<Elem> FieldEmbedding::preimage(const Elem& b) const {
  if (from_->degree() == 1) {
    if (b.value() < from_->p()) return from_->from_int(static_cast<long long>(b.value()));
    return std::nullopt;
  }
  // b lies in the image iff b^(|from|) = b; then solve by enumeration
  if (b.pow(from_->size()) != b) return std::nullopt;
  for (std::uint64_t v = 0; v < from_->size(); ++v) {
    Elem a(from_.get(), v);
    if ((*this)(a) == b) return a;
  }
  return std::nullopt;
}

}  // namespace dw
