#include "dw/multipoly.hpp"

#include <algorithm>
#include <cstring>
#include <sstream>
#include <unordered_map>

namespace dw {

namespace {

std::uint64_t pack(const Exps& e) {
  std::uint64_t k;
  std::memcpy(&k, e.data(), sizeof k);
  return k;
}
Exps unpack(std::uint64_t k) {
  Exps e;
  std::memcpy(e.data(), &k, sizeof k);
  return e;
}
struct Mix {
  std::size_t operator()(std::uint64_t x) const {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return static_cast<std::size_t>(x ^ (x >> 31));
  }
};

void check_vars(const std::vector<std::string>& v) {
  if (v.size() > kMaxVars) throw Error(Errc::Unsupported, "too many variables");
}

}  // namespace

MultiPoly::MultiPoly(FieldPtr F, std::vector<std::string> vars) : F_(std::move(F)), vars_(std::move(vars)) {
  check_vars(vars_);
}

std::vector<std::string> MultiPoly::x_vars(std::size_t r, bool with_t) {
  std::vector<std::string> v;
  for (std::size_t i = 1; i <= r; ++i) v.push_back("X" + std::to_string(i));
  if (with_t) v.push_back("t");
  return v;
}

MultiPoly MultiPoly::constant(FieldPtr F, std::vector<std::string> vars, const Elem& c) {
  MultiPoly m(std::move(F), std::move(vars));
  m.add_term(Exps{}, c);
  return m;
}

MultiPoly MultiPoly::var(FieldPtr F, std::vector<std::string> vars, std::size_t i) {
  MultiPoly m(F, std::move(vars));
  Exps e{};
  e[i] = 1;
  m.add_term(e, F->one());
  return m;
}

MultiPoly MultiPoly::univariate(const PolyF& g, FieldPtr F, std::vector<std::string> vars, std::size_t i) {
  MultiPoly m(std::move(F), std::move(vars));
  if (i >= m.nvars()) throw Error(Errc::RankMismatch, "variable index out of range");
  for (std::size_t k = 0; k < g.size(); ++k) {
    if (k > 255) throw Error(Errc::Unsupported, "exponent overflow");
    Exps e{};
    e[i] = static_cast<std::uint8_t>(k);
    m.add_term(e, g[k]);
  }
  return m;
}

std::size_t MultiPoly::var_index(const std::string& name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  if (it == vars_.end()) throw Error(Errc::RankMismatch, "unknown variable " + name);
  return static_cast<std::size_t>(it - vars_.begin());
}

Elem MultiPoly::coeff(const Exps& e) const {
  auto it = t_.find(e);
  return it == t_.end() ? F_->zero() : it->second;
}

void MultiPoly::add_term(const Exps& e, const Elem& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = t_.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

std::size_t MultiPoly::degree_in(std::size_t i) const {
  std::size_t d = 0;
  for (const auto& [e, c] : t_) d = std::max<std::size_t>(d, e[i]);
  return d;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [e, c] : r.t_) c = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& b) {
  if (!F_) {
    *this = b;
    return *this;
  }
  for (const auto& [e, c] : b.t_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& b) {
  if (!F_) {
    *this = -b;
    return *this;
  }
  for (const auto& [e, c] : b.t_) add_term(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.vars_ != b.vars_) throw Error(Errc::RankMismatch, "variable lists differ");
  const FiniteField& F = *a.F_;
  std::unordered_map<std::uint64_t, std::uint64_t, Mix> acc;
  acc.reserve(a.size() * b.size());
  for (const auto& [ea, ca] : a.t_) {
    for (const auto& [eb, cb] : b.t_) {
      Exps e;
      for (std::size_t i = 0; i < kMaxVars; ++i) {
        unsigned s = unsigned(ea[i]) + eb[i];
        if (s > 255) throw Error(Errc::Unsupported, "exponent overflow");
        e[i] = static_cast<std::uint8_t>(s);
      }
      auto& slot = acc[pack(e)];
      slot = F.add(slot, F.mul(ca.value(), cb.value()));
    }
  }
  MultiPoly r(a.F_, a.vars_);
  for (const auto& [k, v] : acc)
    if (v) r.t_.emplace(unpack(k), Elem(&F, v));
  return r;
}

MultiPoly MultiPoly::scale(const Elem& c) const {
  MultiPoly r(F_, vars_);
  if (c.is_zero()) return r;
  for (const auto& [e, x] : t_) r.t_.emplace(e, x * c);
  return r;
}

MultiPoly MultiPoly::reduce(const PolyF& f, const std::vector<std::size_t>& which) const {
  if (f.is_zero() || f.size() < 2) throw Error(Errc::InvalidArgument, "reduction modulus must have degree >= 1");
  const std::size_t n = f.deg();
  PolyF fm = make_monic(f);
  MultiPoly cur = *this;
  std::vector<PolyF> rem;  // t^k mod f
  auto rem_of = [&](std::size_t k) -> const PolyF& {
    while (rem.size() <= k) {
      if (rem.empty()) {
        rem.push_back(PolyF::constant(F_->one()) % fm);
      } else {
        rem.push_back(rem.back().shift(1) % fm);
      }
    }
    return rem[k];
  };
  for (std::size_t v : which) {
    if (v >= nvars()) throw Error(Errc::RankMismatch, "variable index out of range");
    std::unordered_map<std::uint64_t, std::uint64_t, Mix> acc;
    bool touched = false;
    for (const auto& [e, c] : cur.t_) {
      if (e[v] < n) {
        auto& slot = acc[pack(e)];
        slot = F_->add(slot, c.value());
        continue;
      }
      touched = true;
      const PolyF& r = rem_of(e[v]);
      for (std::size_t j = 0; j < r.size(); ++j) {
        if (r[j].is_zero()) continue;
        Exps e2 = e;
        e2[v] = static_cast<std::uint8_t>(j);
        auto& slot = acc[pack(e2)];
        slot = F_->add(slot, F_->mul(c.value(), r[j].value()));
      }
    }
    if (!touched) continue;
    MultiPoly nxt(F_, vars_);
    for (const auto& [k, val] : acc)
      if (val) nxt.t_.emplace(unpack(k), Elem(F_.get(), val));
    cur = std::move(nxt);
  }
  return cur;
}

MultiPoly MultiPoly::reduce_all(const PolyF& f) const {
  std::vector<std::size_t> w(nvars());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = i;
  return reduce(f, w);
}

MultiPoly MultiPoly::remap(const std::vector<std::size_t>& to, std::vector<std::string> new_vars) const {
  if (to.size() != nvars()) throw Error(Errc::RankMismatch, "remap size mismatch");
  MultiPoly r(F_, std::move(new_vars));
  for (const auto& [e, c] : t_) {
    Exps e2{};
    for (std::size_t i = 0; i < to.size(); ++i) {
      if (!e[i]) continue;
      if (to[i] >= r.nvars()) throw Error(Errc::RankMismatch, "remap target out of range");
      unsigned s = unsigned(e2[to[i]]) + e[i];
      if (s > 255) throw Error(Errc::Unsupported, "exponent overflow");
      e2[to[i]] = static_cast<std::uint8_t>(s);
    }
    r.add_term(e2, c);
  }
  return r;
}

MultiPoly MultiPoly::coefficient_of(std::size_t var, std::size_t power) const {
  MultiPoly r(F_, vars_);
  for (const auto& [e, c] : t_) {
    if (e[var] != power) continue;
    Exps e2 = e;
    e2[var] = 0;
    r.t_.emplace(e2, c);
  }
  return r;
}

MultiPoly MultiPoly::hasse(std::size_t var, std::size_t l) const {
  MultiPoly r(F_, vars_);
  for (const auto& [e, c] : t_) {
    if (e[var] < l) continue;
    std::uint64_t b = binom_mod(e[var], l, F_->p());
    if (!b) continue;
    Exps e2 = e;
    e2[var] = static_cast<std::uint8_t>(e[var] - l);
    r.add_term(e2, c * F_->from_int(static_cast<long long>(b)));
  }
  return r;
}

MultiPoly MultiPoly::divide_by_difference(std::size_t a, std::size_t b) const {
  const std::size_t K = degree_in(b);
  MultiPoly xa = var(F_, vars_, a), xb = var(F_, vars_, b);
  MultiPoly q(F_, vars_), carry(F_, vars_);
  // synthetic division in X_b: q_{k-1} = c_k + X_a q_k
  std::vector<MultiPoly> qs(K + 1, MultiPoly(F_, vars_));
  for (std::size_t k = K; k >= 1; --k) {
    carry = coefficient_of(b, k) + xa * carry;
    qs[k - 1] = carry;
  }
  MultiPoly rem = coefficient_of(b, 0) + xa * carry;
  if (K == 0) rem = *this;
  if (!rem.is_zero()) throw Error(Errc::InvalidArgument, "not divisible by the variable difference");
  MultiPoly xbk = constant(F_, vars_, F_->one());
  for (std::size_t k = 0; k < K; ++k) {
    q += qs[k] * xbk;
    xbk = xbk * xb;
  }
  return q;
}

namespace {

std::string coeff_text(const Elem& c) {
  std::string s = c.field().to_string(c);
  if (s.find(' ') != std::string::npos) return "(" + s + ")";
  return s;
}

std::string latex_var(const std::string& v) {
  if (v.size() > 1 && v[0] == 'X') return "X_{" + v.substr(1) + "}";
  return v;
}

}  // namespace

std::string MultiPoly::to_text() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : t_) {
    if (!first) os << " + ";
    first = false;
    bool constant = true;
    for (std::size_t i = 0; i < nvars(); ++i) constant = constant && e[i] == 0;
    if (constant) {
      os << coeff_text(c);
      continue;
    }
    bool need_star = false;
    if (!c.is_one()) {
      os << coeff_text(c);
      need_star = true;
    }
    for (std::size_t i = 0; i < nvars(); ++i) {
      if (!e[i]) continue;
      if (need_star) os << "*";
      os << vars_[i];
      if (e[i] > 1) os << "^" << unsigned(e[i]);
      need_star = true;
    }
  }
  return os.str();
}

std::string MultiPoly::to_latex() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : t_) {
    if (!first) os << " + ";
    first = false;
    bool constant = true;
    for (std::size_t i = 0; i < nvars(); ++i) constant = constant && e[i] == 0;
    std::vector<std::string> parts;
    if (!c.is_one() || constant) parts.push_back(coeff_text(c));
    for (std::size_t i = 0; i < nvars(); ++i) {
      if (!e[i]) continue;
      std::string v = latex_var(vars_[i]);
      if (e[i] > 1) v += "^{" + std::to_string(unsigned(e[i])) + "}";
      parts.push_back(v);
    }
    for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? " " : "") << parts[i];
  }
  return os.str();
}

}  // namespace dw
