#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dw/error.hpp"

namespace dw {

struct FieldDesc {
  std::uint32_t p = 0;
  std::uint32_t e = 0;
  std::vector<std::uint32_t> modulus;  // constant term first, monic, length e+1
  bool operator==(const FieldDesc&) const = default;
};

class FiniteField;
using FieldPtr = std::shared_ptr<const FiniteField>;

// An element is the residue polynomial over F_p packed in base p
// (constant digit least significant). Fields are interned and live for the
// whole process, so the raw pointer never dangles.
class Elem {
 public:
  Elem() = default;
  Elem(const FiniteField* f, std::uint64_t v) : f_(f), v_(v) {}

  const FiniteField& field() const { return *f_; }
  const FiniteField* field_ptr() const { return f_; }
  std::uint64_t value() const { return v_; }
  bool valid() const { return f_ != nullptr; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  Elem operator-() const;
  Elem& operator+=(const Elem& b);
  Elem& operator-=(const Elem& b);
  Elem& operator*=(const Elem& b);
  Elem& operator/=(const Elem& b);
  Elem inv() const;
  Elem pow(std::uint64_t k) const;

  friend Elem operator+(Elem a, const Elem& b) { return a += b; }
  friend Elem operator-(Elem a, const Elem& b) { return a -= b; }
  friend Elem operator*(Elem a, const Elem& b) { return a *= b; }
  friend Elem operator/(Elem a, const Elem& b) { return a /= b; }
  friend bool operator==(const Elem& a, const Elem& b) { return a.f_ == b.f_ && a.v_ == b.v_; }
  friend bool operator<(const Elem& a, const Elem& b) { return a.v_ < b.v_; }

 private:
  const FiniteField* f_ = nullptr;
  std::uint64_t v_ = 0;
};

class FiniteField {
 public:
  // Interned constructor; throws NotPrime / ReducibleModulus / InvalidArgument.
  static FieldPtr make(std::uint32_t p, std::uint32_t e,
                       std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);
  static FieldPtr make(const FieldDesc& d) { return make(d.p, d.e, d.modulus); }

  std::uint32_t p() const { return desc_.p; }
  std::uint32_t degree() const { return desc_.e; }
  std::uint64_t size() const { return size_; }
  const FieldDesc& desc() const { return desc_; }
  FieldPtr ptr() const;

  Elem zero() const { return Elem(this, 0); }
  Elem one() const { return Elem(this, 1); }
  Elem from_int(long long n) const;
  Elem from_value(std::uint64_t v) const;
  Elem from_coeffs(const std::vector<std::uint32_t>& c) const;  // over F_p, reduced mod modulus
  std::vector<std::uint32_t> coeffs(const Elem& a) const;        // length e
  Elem gen() const;                                              // class of y
  bool in_prime_field(const Elem& a) const { return a.value() < desc_.p; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t neg(std::uint64_t a) const;
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t inv(std::uint64_t a) const;
  std::uint64_t pow(std::uint64_t a, std::uint64_t k) const;

  std::string to_string(const Elem& a) const;

 private:
  FiniteField(FieldDesc d);
  std::uint64_t slow_mul(std::uint64_t a, std::uint64_t b) const;
  void build_tables();

  FieldDesc desc_;
  std::uint64_t size_ = 0;
  std::vector<std::uint64_t> pw_;  // p^i
  bool tables_ = false;
  std::vector<std::uint32_t> log_, exp_;
  std::weak_ptr<const FiniteField> self_;
  friend struct FieldRegistry;
};

bool is_prime(std::uint64_t n);
bool is_irreducible_mod_p(std::uint32_t p, const std::vector<std::uint32_t>& monic);
std::vector<std::uint32_t> smallest_irreducible(std::uint32_t p, std::uint32_t e);

// F_p-linear ring embedding of a subfield; the image of the source generator
// is a root of its modulus in the target.
class FieldEmbedding {
 public:
  FieldEmbedding() = default;
  FieldEmbedding(FieldPtr from, FieldPtr to);
  Elem operator()(const Elem& a) const;
  std::optional<Elem> preimage(const Elem& b) const;
  const FieldPtr& source() const { return from_; }
  const FieldPtr& target() const { return to_; }
  const Elem& root() const { return root_; }

 private:
  FieldPtr from_, to_;
  Elem root_;
  std::vector<Elem> root_pows_;
};

}  // namespace dw
