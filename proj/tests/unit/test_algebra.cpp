#include <random>

#include "doctest.h"
#include "dw/ratfunc.hpp"

using namespace dw;

namespace {

PolyF P(const FiniteField& F, std::vector<long long> c) { return poly_from_ints(F, c); }

// carry-less product modulo a binary modulus; oracle for GF(2^e) slow path
std::uint64_t gf2_mul(std::uint64_t a, std::uint64_t b, std::uint64_t mod, unsigned e) {
  std::uint64_t r = 0;
  for (unsigned i = 0; i < e; ++i)
    if (b >> i & 1) r ^= a << i;
  for (unsigned k = 2 * e; k-- > e;)
    if (r >> k & 1) r ^= mod << (k - e);
  return r;
}

}  // namespace

TEST_CASE("make_field examples") {
  auto F3 = FiniteField::make(3, 1);
  CHECK(F3->size() == 3);
  auto F4 = FiniteField::make(2, 2, std::vector<std::uint32_t>{1, 1, 1});
  CHECK(F4->size() == 4);
  auto F9 = FiniteField::make(3, 2);
  CHECK(F9->desc().modulus == std::vector<std::uint32_t>{1, 0, 1});
  CHECK(FiniteField::make(2, 3)->desc().modulus == std::vector<std::uint32_t>{1, 0, 1, 1});
  CHECK(FiniteField::make(2, 2) == F4);
  CHECK_THROWS_AS(FiniteField::make(4, 1), Error);
  try {
    FiniteField::make(2, 2, std::vector<std::uint32_t>{1, 0, 1});
    FAIL("reducible modulus accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ReducibleModulus);
  }
  // y^2 + 1 has no root in F_3
  for (long long y = 0; y < 3; ++y) CHECK((y * y + 1) % 3 != 0);
  // F_9: y^3 = 2y
  Elem y = F9->gen();
  CHECK(y.pow(3) == F9->from_int(2) * y);
}

TEST_CASE("field axioms exhaustive for q <= 16") {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pe = {{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1},
                                                           {2, 3}, {3, 2}, {11, 1}, {13, 1}, {2, 4}};
  for (auto [p, e] : pe) {
    auto F = FiniteField::make(p, e);
    const auto n = F->size();
    for (std::uint64_t a = 0; a < n; ++a) {
      Elem A(F.get(), a);
      CHECK(A + F->zero() == A);
      CHECK(A * F->one() == A);
      CHECK(A + (-A) == F->zero());
      if (a) CHECK(A * A.inv() == F->one());
      for (std::uint64_t b = 0; b < n; ++b) {
        Elem B(F.get(), b);
        REQUIRE(A * B == B * A);
        REQUIRE(A + B == B + A);
        for (std::uint64_t c = 0; c < n; ++c) {
          Elem C(F.get(), c);
          REQUIRE((A * B) * C == A * (B * C));
          REQUIRE((A + B) + C == A + (B + C));
          REQUIRE(A * (B + C) == A * B + A * C);
        }
      }
    }
  }
}

TEST_CASE("large binary field without tables matches carry-less oracle") {
  auto F = FiniteField::make(2, 21);
  std::uint64_t mod = 0;
  for (std::size_t i = 0; i < F->desc().modulus.size(); ++i) mod |= std::uint64_t(F->desc().modulus[i]) << i;
  std::mt19937_64 rng(5);
  for (int it = 0; it < 500; ++it) {
    std::uint64_t a = rng() % F->size(), b = rng() % F->size();
    CHECK((Elem(F.get(), a) * Elem(F.get(), b)).value() == gf2_mul(a, b, mod, 21));
    if (a) CHECK((Elem(F.get(), a) * Elem(F.get(), a).inv()).is_one());
  }
}

TEST_CASE("embedding of F_4 into F_16 is a ring map") {
  auto F4 = FiniteField::make(2, 2), F16 = FiniteField::make(2, 4);
  FieldEmbedding emb(F4, F16);
  for (std::uint64_t a = 0; a < 4; ++a)
    for (std::uint64_t b = 0; b < 4; ++b) {
      Elem A(F4.get(), a), B(F4.get(), b);
      CHECK(emb(A * B) == emb(A) * emb(B));
      CHECK(emb(A + B) == emb(A) + emb(B));
      CHECK(emb.preimage(emb(A)) == A);
    }
  CHECK_FALSE(emb.preimage(F16->gen()).has_value());
}

TEST_CASE("polynomial basics") {
  auto F3 = FiniteField::make(3, 1);
  PolyF zero;
  CHECK_FALSE(zero.degree().has_value());
  PolyF f = P(*F3, {1, 0, 1});
  CHECK(f.degree() == 2u);
  // t^3 = t (t^2 + 1) - t
  CHECK(P(*F3, {0, 0, 0, 1}) % f == P(*F3, {0, 2}));
  CHECK(inv_mod(P(*F3, {0, 1}), f) == P(*F3, {0, 2}));
  CHECK(inv_mod(P(*F3, {1}), f) == P(*F3, {1}));
  try {
    inv_mod(P(*F3, {0, 1}), P(*F3, {0, 0, 1}));
    FAIL("expected NotInvertibleModF");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotInvertibleModF);
  }
  // delta_1(t^2) = 2t
  CHECK(P(*F3, {0, 0, 1}).hasse(1) == P(*F3, {0, 2}));
  CHECK(P(*F3, {2, 1, 1}).hasse(0) == P(*F3, {2, 1, 1}));
  CHECK(gcd(P(*F3, {2, 0, 1}), P(*F3, {2, 1})) == P(*F3, {2, 1}));
}

TEST_CASE("inv_mod property on random coprime pairs") {
  std::mt19937_64 rng(11);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto F = FiniteField::make(p, 1);
    for (int it = 0; it < 200; ++it) {
      std::vector<long long> hc(1 + rng() % 7), fc(2 + rng() % 6);
      for (auto& c : hc) c = static_cast<long long>(rng() % p);
      for (auto& c : fc) c = static_cast<long long>(rng() % p);
      fc.back() = 1;
      PolyF h = P(*F, hc), f = P(*F, fc);
      if (gcd(h, f).size() != 1) continue;
      PolyF g = inv_mod(h, f);
      CHECK((g * h) % f == PolyF::constant(F->one()));
      CHECK((!g.degree() || *g.degree() < f.deg()));
    }
  }
}

TEST_CASE("laurent_at_infinity examples") {
  auto F3 = FiniteField::make(3, 1);
  const Elem one = F3->one(), zero = F3->zero();
  // 1/t -> u
  RatFunc<Elem> a(P(*F3, {1}), P(*F3, {0, 1}));
  auto La = laurent_at_infinity(a, 3);
  CHECK(La.lead_exp == 1);
  CHECK(La.coeffs[0] == one);
  CHECK(La.coeffs[1] == zero);
  // 1/(c - t) with c = 2 -> -u - c u^2 - c^2 u^3
  const Elem c = F3->from_int(2);
  RatFunc<Elem> b(P(*F3, {1}), P(*F3, {2, -1}));
  auto Lb = laurent_at_infinity(b, 3);
  CHECK(Lb.lead_exp == 1);
  CHECK(Lb.coeffs[0] == -one);
  CHECK(Lb.coeffs[1] == -c);
  CHECK(Lb.coeffs[2] == -(c * c));
  // (t+1)/t -> 1 + u
  RatFunc<Elem> d(P(*F3, {1, 1}), P(*F3, {0, 1}));
  auto Ld = laurent_at_infinity(d, 2);
  CHECK(Ld.lead_exp == 0);
  CHECK(Ld.coeffs[0] == one);
  CHECK(Ld.coeffs[1] == one);
}

TEST_CASE("laurent expansion is multiplicative") {
  std::mt19937_64 rng(3);
  auto F = FiniteField::make(3, 1);
  auto rnd = [&](std::size_t n, bool monic) {
    std::vector<long long> c(n);
    for (auto& x : c) x = static_cast<long long>(rng() % 3);
    if (monic) c.back() = 1;
    return P(*F, c);
  };
  for (int it = 0; it < 100; ++it) {
    PolyF n1 = rnd(1 + rng() % 4, false), d1 = rnd(1 + rng() % 4, true);
    PolyF n2 = rnd(1 + rng() % 4, false), d2 = rnd(1 + rng() % 4, true);
    if (n1.is_zero() || n2.is_zero()) continue;
    RatFunc<Elem> a(n1, d1), b(n2, d2);
    const std::size_t prec = 6;
    auto La = laurent_at_infinity(a, prec), Lb = laurent_at_infinity(b, prec), Lab = laurent_at_infinity(a * b, prec);
    CHECK(Lab.lead_exp == La.lead_exp + Lb.lead_exp);
    for (std::size_t k = 0; k < prec; ++k) {
      Elem s = F->zero();
      for (std::size_t i = 0; i <= k; ++i) s += La.coeffs[i] * Lb.coeffs[k - i];
      CHECK(s == Lab.coeffs[k]);
    }
  }
}

TEST_CASE("residue examples") {
  auto F3 = FiniteField::make(3, 1);
  const Elem one = F3->one();
  CHECK(residue_at_infinity(RatFunc<Elem>(P(*F3, {1}), P(*F3, {0, 1}))) == -one);
  CHECK(residue_at_infinity(RatFunc<Elem>(P(*F3, {0, -1}), P(*F3, {1, 0, 1}))) == one);
  CHECK(residue_at_infinity(RatFunc<Elem>(P(*F3, {1}), P(*F3, {1}))).is_zero());
  const Elem c = F3->from_int(2);
  CHECK(residue_at_point(RatFunc<Elem>(P(*F3, {1}), P(*F3, {-2, 1})), c) == one);
  CHECK(residue_at_point(RatFunc<Elem>(P(*F3, {1}), P(*F3, {0, 0, 1})), F3->zero()).is_zero());
  // not a pole
  CHECK(residue_at_point(RatFunc<Elem>(P(*F3, {1}), P(*F3, {0, 1})), one).is_zero());
  // (t+2)/t^2 at 0 -> 1
  CHECK(residue_at_point(RatFunc<Elem>(P(*F3, {2, 1}), P(*F3, {0, 0, 1})), F3->zero()) == one);
}

TEST_CASE("rational functions in theta") {
  auto F3 = FiniteField::make(3, 1);
  RatFn th = theta_of(*F3);
  RatFn one = rat_const(F3->one());
  RatFn x = one / (th - one);
  CHECK(x * (th - one) == one);
  CHECK((x + x - x) == x);
  CHECK(th.frob(3) == th * th * th);
  CHECK(x.frob(3) == x * x * x);
  CHECK(to_string(th * th + one) == "θ^2 + 1");
}
