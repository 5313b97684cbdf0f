#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dw/poly.hpp"

namespace dw {

constexpr std::size_t kMaxVars = 8;
using Exps = std::array<std::uint8_t, kMaxVars>;

// Graded lexicographic, larger monomials first; ties broken by variable index.
struct GrLex {
  bool operator()(const Exps& a, const Exps& b) const {
    unsigned da = 0, db = 0;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      da += a[i];
      db += b[i];
    }
    if (da != db) return da > db;
    return a > b;
  }
};

// Sparse polynomial over F_q in named variables (X1..Xr, optionally t).
class MultiPoly {
 public:
  using Terms = std::map<Exps, Elem, GrLex>;

  MultiPoly() = default;
  MultiPoly(FieldPtr F, std::vector<std::string> vars);

  static std::vector<std::string> x_vars(std::size_t r, bool with_t = false);
  static MultiPoly constant(FieldPtr F, std::vector<std::string> vars, const Elem& c);
  static MultiPoly var(FieldPtr F, std::vector<std::string> vars, std::size_t i);
  // g(X_i)
  static MultiPoly univariate(const PolyF& g, FieldPtr F, std::vector<std::string> vars, std::size_t i);

  const FiniteField& field() const { return *F_; }
  const FieldPtr& field_ptr() const { return F_; }
  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  std::size_t var_index(const std::string& name) const;
  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t size() const { return t_.size(); }
  Elem coeff(const Exps& e) const;
  void add_term(const Exps& e, const Elem& c);
  std::size_t degree_in(std::size_t i) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& b);
  MultiPoly& operator-=(const MultiPoly& b);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.vars_ == b.vars_ && a.t_ == b.t_; }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }
  MultiPoly scale(const Elem& c) const;

  // Division by f(X_i) for each listed variable, in the listed order.
  MultiPoly reduce(const PolyF& f, const std::vector<std::size_t>& which) const;
  MultiPoly reduce_all(const PolyF& f) const;
  // Variable i moves to index to[i] in a polynomial over new_vars.
  MultiPoly remap(const std::vector<std::size_t>& to, std::vector<std::string> new_vars) const;
  MultiPoly permute(const std::vector<std::size_t>& perm) const { return remap(perm, vars_); }
  // Part with X_var^power, returned with that exponent cleared.
  MultiPoly coefficient_of(std::size_t var, std::size_t power) const;
  // Hasse-Schmidt derivative in one variable.
  MultiPoly hasse(std::size_t var, std::size_t l) const;
  // Exact quotient by (X_b - X_a); throws if not divisible.
  MultiPoly divide_by_difference(std::size_t a, std::size_t b) const;

  std::string to_text() const;
  std::string to_latex() const;

 private:
  FieldPtr F_;
  std::vector<std::string> vars_;
  Terms t_;
};

}  // namespace dw
