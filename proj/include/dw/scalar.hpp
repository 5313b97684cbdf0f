#pragma once

#include <cstdint>
#include <string>

#include "dw/field.hpp"

namespace dw {

// Scalar protocol used by the generic containers (found by ADL):
// zero_like, one_like, int_like, frob, is_zero, characteristic, to_string.
inline Elem zero_like(const Elem& a) { return a.field().zero(); }
inline Elem one_like(const Elem& a) { return a.field().one(); }
inline Elem int_like(const Elem& a, long long n) { return a.field().from_int(n); }
inline Elem frob(const Elem& a, std::uint64_t q) { return a.pow(q); }
inline bool is_zero(const Elem& a) { return a.is_zero(); }
inline std::uint32_t characteristic(const Elem& a) { return a.field().p(); }
inline std::string to_string(const Elem& a) { return a.field().to_string(a); }

inline std::uint64_t powmod_u64(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e > 0) {
    if (e & 1) r = static_cast<std::uint64_t>((unsigned __int128)r * b % m);
    b = static_cast<std::uint64_t>((unsigned __int128)b * b % m);
    e >>= 1;
  }
  return r;
}

// C(n, k) mod p by Lucas.
inline std::uint64_t binom_mod(std::uint64_t n, std::uint64_t k, std::uint64_t p) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  while (n || k) {
    std::uint64_t ni = n % p, ki = k % p;
    if (ki > ni) return 0;
    std::uint64_t num = 1, den = 1;
    for (std::uint64_t i = 0; i < ki; ++i) {
      num = num * ((ni - i) % p) % p;
      den = den * ((i + 1) % p) % p;
    }
    r = r * num % p * powmod_u64(den, p - 2, p) % p;
    n /= p;
    k /= p;
  }
  return r;
}

// Forwarders so class members named like the protocol do not hide ADL.
namespace adl {
template <class T> bool iz(const T& x) { return is_zero(x); }
template <class T> T zl(const T& x) { return zero_like(x); }
template <class T> T ol(const T& x) { return one_like(x); }
template <class T> T il(const T& x, long long n) { return int_like(x, n); }
template <class T> T fr(const T& x, std::uint64_t q) { return frob(x, q); }
template <class T> std::string str(const T& x) { return to_string(x); }
template <class T> std::uint32_t chr(const T& x) { return characteristic(x); }
}  // namespace adl

}  // namespace dw
