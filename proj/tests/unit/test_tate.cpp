#include <random>

#include "doctest.h"
#include "dw/tate.hpp"
#include "dw/weil.hpp"

using namespace dw;

namespace {

PolyF P(const FieldPtr& F, std::vector<long long> c) { return poly_from_ints(*F, c); }

PolyF random_poly(const FieldPtr& F, std::size_t deg, std::mt19937_64& rng, bool monic) {
  std::vector<Elem> c;
  for (std::size_t i = 0; i < deg; ++i) c.push_back(F->from_value(rng() % F->size()));
  c.push_back(monic ? F->one() : F->from_value(1 + rng() % (F->size() - 1)));
  return PolyF(std::move(c));
}

struct Ctx {
  FieldPtr F;
  std::uint64_t q;
  RatFn one, zero, th;
  explicit Ctx(std::uint64_t p) : F(FiniteField::make(static_cast<std::uint32_t>(p), 1)), q(p) {
    one = rat_const(F->one());
    zero = adl::zl(one);
    th = theta_of(*F);
  }
  RatFn at_theta(const PolyF& a) const { return rat_of_poly(a, *F); }
  PolyT T(std::vector<RatFn> c) const { return PolyT(std::move(c)); }
  // c - t
  PolyT lin(const RatFn& c) const { return T({c, -one}); }
};

Mono Z(std::uint64_t e) { return Mono{e}; }

}  // namespace

TEST_CASE("f-remainder examples") {
  Ctx c(3);
  PolyF f = P(c.F, {1, 0, 1});
  RatT w(PolyT::constant(c.one), c.lin(c.th));
  RatFn d = (c.th * c.th + c.one).inv();
  CHECK(ev_remainder(w, f) == c.T({c.th * d, d}));
  CHECK(ev_remainder(RatFunc<Elem>::from_poly(P(c.F, {0, 0, 0, 1}), c.F->one()), f) == P(c.F, {0, 2}));
  RatFunc<Elem> small = RatFunc<Elem>::from_poly(P(c.F, {2, 1}), c.F->one());
  CHECK(ev_remainder(small, f) == small.num());
  try {
    ev_remainder(RatFunc<Elem>(P(c.F, {1}), P(c.F, {1, 1})), P(c.F, {2, 0, 1}));
    FAIL("pole on the modulus accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::PoleOnModulus);
  }
}

TEST_CASE("remainder of 1/(theta - t)") {
  for (std::uint64_t p : {2, 3}) {
    Ctx c(p);
    std::mt19937_64 rng(31 + p);
    RatT w(PolyT::constant(c.one), c.lin(c.th));
    for (int it = 0; it < 20; ++it) {
      PolyF f = random_poly(c.F, 1 + rng() % 5, rng, true);
      RatFn fth = c.at_theta(f);
      PolyT num = PolyT::constant(fth) - lift_to_t(f);
      auto [quo, rem] = divmod(num, c.lin(c.th));
      REQUIRE(rem.is_zero());
      CHECK(ev_remainder(w, f) - quo.scale(fth.inv()) == PolyT());
    }
  }
}

TEST_CASE("interpolation examples") {
  Ctx c(3);
  PolyF p = P(c.F, {1, 0, 1});
  RatFunc<Elem> t3 = RatFunc<Elem>::from_poly(P(c.F, {0, 0, 0, 1}), c.F->one());
  Jets J = jets_of(t3, p, 1);
  CHECK(remainder_via_interpolation(p, 1, J.split, J.values) == P(c.F, {0, 2}));
  RatFunc<Elem> low = RatFunc<Elem>::from_poly(P(c.F, {1, 2}), c.F->one());
  J = jets_of(low, p, 1);
  CHECK(remainder_via_interpolation(p, 1, J.split, J.values) == low.num());

  PolyF lin = P(c.F, {1, 1});
  J = jets_of(t3, lin, 2);
  PolyF r = remainder_via_interpolation(lin, 2, J.split, J.values);
  CHECK(((t3.num() - r) % (lin * lin)).is_zero());
  CHECK(r.deg() < 2);

  auto missing = J.values;
  missing[0].pop_back();
  try {
    remainder_via_interpolation(lin, 2, J.split, missing);
    FAIL("incomplete jets accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::InconsistentJets);
  }
}

TEST_CASE("interpolation agrees with division") {
  int cases = 0;
  for (std::uint64_t p : {2, 3}) {
    Ctx c(p);
    std::mt19937_64 rng(41 + p);
    std::vector<PolyF> irr;
    for (std::size_t d = 1; d <= 2; ++d)
      for (std::uint64_t v = 0; v < (d == 1 ? p : p * p); ++v) {
        std::vector<Elem> co;
        std::uint64_t x = v;
        for (std::size_t i = 0; i < d; ++i, x /= p) co.push_back(c.F->from_value(x % p));
        co.push_back(c.F->one());
        PolyF g(co);
        if (factor_degrees(g) == std::vector<std::size_t>{d}) irr.push_back(g);
      }
    while (cases < (p == 2 ? 100 : 200)) {
      const PolyF& pp = irr[rng() % irr.size()];
      const std::size_t k = 1 + rng() % 3;
      PolyF pk = pow(pp, k, c.F->one());
      PolyF num = random_poly(c.F, rng() % 8, rng, false), den = random_poly(c.F, rng() % 3, rng, true);
      if (gcd(den, pp).size() != 1) continue;
      RatFunc<Elem> w(num, den);
      PolyF rem = ev_remainder(w, pk);
      Jets J = jets_of(w, pp, k);
      CHECK(remainder_via_interpolation(pp, k, J.split, J.values) == rem);
      // Hermite: the remainder has the same jets, another low-degree polynomial does not
      Jets Jr = jets_of(RatFunc<Elem>::from_poly(rem, c.F->one()), pp, k);
      CHECK(Jr.values == J.values);
      PolyF other = random_poly(c.F, pk.deg() - 1, rng, false);
      if (other != rem) CHECK(jets_of(RatFunc<Elem>::from_poly(other, c.F->one()), pp, k).values != J.values);
      ++cases;
    }
  }
  CHECK(cases == 200);
}

TEST_CASE("Hasse derivatives of p^k") {
  for (std::uint64_t p : {2, 3}) {
    Ctx c(p);
    for (std::uint64_t v = 0; v < p * p; ++v) {
      PolyF pp = P(c.F, {static_cast<long long>(v % p), static_cast<long long>(v / p), 1});
      std::vector<PolyF> cands{pp, P(c.F, {static_cast<long long>(v % p), 1})};
      for (const auto& g : cands) {
        if (factor_degrees(g) != std::vector<std::size_t>{g.deg()}) continue;
        for (std::size_t k = 1; k <= 4; ++k) {
          PolyF gk = pow(g, k, c.F->one());
          for (std::size_t l = 0; l < k; ++l) CHECK((gk.hasse(l) % g).is_zero());
          CHECK(gcd(gk.hasse(k), g).size() == 1);
        }
      }
    }
  }
}

TEST_CASE("Hasse-Schmidt derivatives") {
  Ctx c(3);
  RatT w(PolyT::constant(c.one), c.lin(c.th));
  CHECK(hasse_schmidt(w, 0) == w);
  RatT t2 = RatT::from_poly(c.T({c.zero, c.zero, c.one}), c.one);
  CHECK(hasse_schmidt(t2, 1) == RatT::from_poly(c.T({c.zero, c.one + c.one}), c.one));
  CHECK(hasse_schmidt(w, 1) == RatT(PolyT::constant(c.one), c.lin(c.th) * c.lin(c.th)));

  PoleFrac a = PoleFrac::simple(c.one, 0);
  CHECK(a.hasse(0) == a);
  CHECK(a.hasse(1).to_rat(*c.F, 3) == hasse_schmidt(w, 1));
  // products of pole fractions against the generic quotient rule
  PoleFrac b = PoleFrac::simple(c.th, 1) * PoleFrac::poly(c.T({c.one, c.th, c.one}));
  PoleFrac prod = a * a * b + PoleFrac::simple(c.th + c.one, 2);
  for (std::size_t l = 0; l <= 2; ++l) CHECK(prod.hasse(l).to_rat(*c.F, 3) == hasse_schmidt(prod.to_rat(*c.F, 3), l));
}

TEST_CASE("truncated generating functions") {
  Ctx c(3);
  RationalModule C = rational_module(c.F, {c.one});
  TruncAGF w0 = agf(C, 0);
  REQUIRE(w0.size() == 1);
  CHECK(w0.find(Z(1))->to_rat(*c.F, 3) == RatT(PolyT::constant(c.one), c.lin(c.th)));
  TruncAGF w1 = agf(C, 1);
  REQUIRE(w1.size() == 2);
  RatFn thq = c.th.pow(3);
  CHECK(w1.find(Z(3))->to_rat(*c.F, 3) == RatT(PolyT::constant((thq - c.th).inv()), c.lin(thq)));
  CHECK(w1.cap()[0] == 9);
  RationalModule R = rational_module(c.F, {c.zero, c.th});
  TruncAGF wr = agf(R, 1);
  CHECK(wr.size() == 1);
  CHECK(wr.find(Z(1)) != nullptr);

  // twists
  TruncAGF tw = twist(w0, 1, 3);
  CHECK(tw.find(Z(3))->to_rat(*c.F, 3) == RatT(PolyT::constant(c.one), c.lin(thq)));
  CHECK(twist(w0 + w1, 1, 3).terms() == (twist(w0, 1, 3) + twist(w1, 1, 3)).terms());
  for (auto f : {P(c.F, {0, 1}), P(c.F, {1, 0, 1}), P(c.F, {2, 1, 1})}) {
    RemainderSeries lhs = remainder(twist(w1, 1, 3), f, 3);
    RemainderSeries rhs = remainder(w1, f, 3).twist(3);
    CHECK(lhs.terms() == rhs.terms());
  }
}

TEST_CASE("remainder coefficients") {
  Ctx c(3);
  RationalModule C = rational_module(c.F, {c.one});
  RationalModule R = rational_module(c.F, {c.th, c.th + c.one});
  for (auto f : {P(c.F, {0, 1}), P(c.F, {0, 0, 1}), P(c.F, {1, 0, 1}), P(c.F, {2, 1, 1})}) {
    RatFn fth = c.at_theta(f);
    auto c0 = c_coeffs(C, f, 0);
    for (std::size_t i = 0; i < f.deg(); ++i) {
      RatFn want = c.at_theta(dual_map(f, i)) / fth;
      const RatFn* got = c0[i].find(Z(1));
      CHECK((got ? *got : c.zero) == want);
    }
    for (const auto& M : {C, R}) {
      auto e = exp_coeffs(M, 2);
      auto cc = c_coeffs(M, f, 2);
      CHECK(compare_series(cc[f.deg() - 1], exp_series(e, fth.inv(), 3), [](const RatFn& x) { return to_string(x); }).ok());
      // slotwise exponential and the φ-action on exp(Z/f(θ))
      QExpansion base = exp_series(e, fth.inv(), 3);
      for (std::size_t i = 0; i < f.deg(); ++i) {
        PolyF D = dual_map(f, i);
        auto cmp = compare_series(cc[i], exp_series(e, c.at_theta(D) / fth, 3), [](const RatFn& x) { return to_string(x); });
        CHECK(cmp.ok());
        CHECK(cmp.compared.size() >= 1);
        auto act = compare_series(cc[i], phi_apply_series(M, D, base), [](const RatFn& x) { return to_string(x); });
        CHECK(act.ok());
      }
    }
  }
  // Carlitz, f = x, N = 1
  auto cx = c_coeffs(C, P(c.F, {0, 1}), 1);
  RatFn thq = c.th.pow(3);
  CHECK(*cx[0].find(Z(1)) == c.th.inv());
  CHECK(*cx[0].find(Z(3)) == ((thq - c.th) * thq).inv());
  CHECK(qexp_json(cx[0], 3) == "{\"Z1^q^0\":\"" + to_string(c.th.inv()) + "\",\"Z1^q^1\":\"" +
                                   to_string(((thq - c.th) * thq).inv()) + "\"}");
}

TEST_CASE("Moore determinant of series") {
  Ctx c(3);
  RationalModule R = rational_module(c.F, {c.th, c.one});
  TruncAGF w1 = agf(R, 1, 0, 2), w2 = agf(R, 1, 1, 2);
  CHECK(moore_series({w1}, 3).terms() == w1.terms());
  TruncAGF m = moore_series({w1, w2}, 3);
  CHECK(m.terms() == (w1 * twist(w2, 1, 3) - w2 * twist(w1, 1, 3)).terms());
  CHECK(!m.is_zero());
  CHECK(moore_series({w1, w1}, 3).is_zero());
  CHECK(mono_string(Mono{9, 1}, 3) == "Z1^q^2*Z2^q^0");
}

TEST_CASE("Maurischat-Perkins coefficients") {
  Ctx c(3);
  PolyF p = P(c.F, {1, 0, 1});
  auto e1 = mp_coeffs(p, 1);
  REQUIRE(e1.size() == 2);
  CHECK(e1[0] == P(c.F, {2, 0, 1}));
  CHECK(e1[1] == P(c.F, {0, 2}));
  auto e0 = mp_coeffs(p, 0);
  for (std::size_t i = 0; i < 2; ++i) CHECK(e0[i] == dual_map(p, i));
  std::mt19937_64 rng(7);
  for (std::uint64_t pr : {2, 3}) {
    Ctx d(pr);
    for (int it = 0; it < 10; ++it) {
      PolyF g = random_poly(d.F, 1 + rng() % 3, rng, true);
      for (std::size_t l = 0; l <= 3; ++l)
        for (const auto& E : mp_coeffs(g, l)) CHECK((E.is_zero() || E.deg() < (l + 1) * g.deg()));
    }
  }

  // δ_l O_(p^k) = p(x)^(k-l-1) O_p^(l+1) mod p(t)
  for (std::uint64_t pr : {2, 3}) {
    Ctx d(pr);
    for (auto g : {P(d.F, {1, 1}), P(d.F, {1, 1, 1}), P(d.F, {2, 0, 1})}) {
      if (factor_degrees(g) != std::vector<std::size_t>{g.deg()}) continue;
      MultiPoly O = weil_op2(g);
      auto vars = O.vars();
      for (std::size_t k = 1; k <= 3; ++k) {
        MultiPoly Ok = weil_op2(pow(g, k, d.F->one()));
        for (std::size_t l = 0; l < k; ++l) {
          MultiPoly rhs = MultiPoly::constant(d.F, vars, d.F->one());
          for (std::size_t i = 0; i < k - l - 1; ++i) rhs = rhs * MultiPoly::univariate(g, d.F, vars, 0);
          for (std::size_t i = 0; i <= l; ++i) rhs = rhs * O;
          CHECK(Ok.hasse(1, l).reduce(g, {1}) == rhs.reduce(g, {1}));
        }
      }
    }
  }

  // δ_l agf mod p termwise
  RationalModule C = rational_module(c.F, {c.one});
  RationalModule R = rational_module(c.F, {c.th, c.one});
  for (const auto& M : {C, R}) {
    auto e = exp_coeffs(M, 2);
    TruncAGF w = agf(M, 2);
    RatFn pth = c.at_theta(p);
    for (std::size_t l = 0; l <= 1; ++l) {
      RemainderSeries lhs = remainder(hasse_schmidt(w, l), p, 3);
      auto E = mp_coeffs(p, l);
      for (std::size_t i = 0; i < 2; ++i) {
        QExpansion rhs = exp_series(e, c.at_theta(E[i]) / pth.pow(l + 1), 3);
        auto cmp = compare_series(t_coefficient(lhs, i), rhs, [](const RatFn& x) { return to_string(x); });
        CHECK(cmp.ok());
        CHECK(cmp.compared.size() == 3);
      }
    }
  }
}
