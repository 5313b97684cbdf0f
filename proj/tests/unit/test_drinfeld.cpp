#include <random>

#include "doctest.h"
#include "dw/drinfeld.hpp"

using namespace dw;

namespace {

PolyF P(const FieldPtr& F, std::vector<long long> c) { return poly_from_ints(*F, c); }

FiniteModule carlitz_f4() {
  auto F2 = FiniteField::make(2, 1);
  auto F4 = FiniteField::make(2, 2);
  return finite_module(F2, F4->gen(), {F4->one()});
}

FiniteModule rank2_f4() {
  auto F2 = FiniteField::make(2, 1);
  auto F4 = FiniteField::make(2, 2);
  return finite_module(F2, F4->gen(), {F4->one(), F4->one()});
}

// brute force kernel of phi_f on a field: count of roots among all elements
std::size_t brute_kernel(const FiniteModule& M, const PolyF& f) {
  const FiniteField& L = a_field(M);
  std::size_t c = 0;
  for (std::uint64_t v = 0; v < L.size(); ++v)
    if (M.phi_apply(f, L.from_value(v)).is_zero()) ++c;
  return c;
}

}  // namespace

TEST_CASE("twisted multiplication") {
  auto F9 = FiniteField::make(3, 2);
  Elem y = F9->gen();
  auto tau = TwistedPoly<Elem>::tau(F9->one(), 3);
  auto c = TwistedPoly<Elem>::constant(y, 3);
  CHECK(tau * c == TwistedPoly<Elem>({F9->zero(), F9->from_int(2) * y}, 3));
  CHECK(tau * c == TwistedPoly<Elem>({F9->zero(), y.pow(3)}, 3));
  auto th = TwistedPoly<Elem>::constant(y, 3);
  CHECK((tau + th) * tau == TwistedPoly<Elem>({F9->zero(), y, F9->one()}, 3));

  auto F3 = FiniteField::make(3, 1);
  RatFn t = theta_of(*F3);
  auto tq = TwistedPoly<RatFn>::tau(rat_const(F3->one()), 3);
  auto ct = TwistedPoly<RatFn>::constant(t, 3);
  CHECK((tq * ct)[1] == t.pow(3));
}

TEST_CASE("phi is a ring homomorphism") {
  auto F3 = FiniteField::make(3, 1);
  auto F9 = FiniteField::make(3, 2);
  FiniteModule M = finite_module(F3, F9->gen(), {F9->from_int(1), F9->gen() + F9->one()});
  CHECK(M.phi_of(P(F3, {0, 1})) == M.phi_x());
  CHECK(M.phi_of(P(F3, {0, 0, 1})) == M.phi_x() * M.phi_x());
  CHECK(M.phi_of(P(F3, {2, 1})) == M.phi_x() + TwistedPoly<Elem>::constant(F9->from_int(2), 3));
  std::mt19937_64 rng(5);
  for (int it = 0; it < 50; ++it) {
    std::vector<long long> a(1 + rng() % 4), b(1 + rng() % 4);
    for (auto& x : a) x = rng() % 3;
    for (auto& x : b) x = rng() % 3;
    PolyF A = P(F3, a), B = P(F3, b);
    CHECK(M.phi_of(A * B) == M.phi_of(A) * M.phi_of(B));
    CHECK(M.phi_of(A + B) == M.phi_of(A) + M.phi_of(B));
    if (!(A * B).is_zero()) CHECK(M.phi_of(A * B).size() == 2 * (A * B).deg() + 1);
    Elem mu = F9->from_value(rng() % 9);
    CHECK(M.phi_apply(A, mu) == M.phi_of(A).apply(mu));
  }
}

TEST_CASE("phi_apply examples") {
  FiniteModule C = carlitz_f4();
  auto F2 = FiniteField::make(2, 1);
  const FiniteField& F4 = a_field(C);
  for (std::uint64_t v = 0; v < 4; ++v) {
    Elem mu = F4.from_value(v);
    CHECK(C.phi_apply(P(F2, {1}), mu) == mu);
    CHECK(C.phi_apply(P(F2, {0, 1}), mu) == C.theta() * mu + mu * mu);
  }
}

TEST_CASE("torsion of small modules") {
  auto F2 = FiniteField::make(2, 1);
  FiniteModule C = carlitz_f4();
  TorsionBasis tb = torsion_basis(C, P(F2, {0, 1}));
  CHECK(tb.s == 1);
  REQUIRE(tb.points.size() == 1);
  CHECK(tb.points[0] == C.theta());

  FiniteModule R = rank2_f4();
  TorsionBasis t2 = torsion_basis(R, P(F2, {0, 1}));
  CHECK(t2.points.size() == 2);
  CHECK(brute_kernel(t2.module, P(F2, {0, 1})) == 4);
  for (const auto& mu : fq_span(t2.points, *F2)) CHECK(t2.module.phi_apply(P(F2, {0, 1}), mu).is_zero());

  // x^2 + x over F_2 with theta of order 3: coprime to y^2 + y + 1
  TorsionBasis t3 = torsion_basis(R, P(F2, {0, 1, 1}));
  CHECK(t3.points.size() == 4);
  CHECK(fq_span(t3.points, *F2).size() == 16);
  CHECK(brute_kernel(t3.module, P(F2, {0, 1, 1})) == 16);

  try {
    torsion_basis(C, P(F2, {1, 1, 1}));
    FAIL("the A-characteristic was accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::BadCharacteristic);
  }
  CHECK(a_characteristic(C) == P(F2, {1, 1, 1}));
}

TEST_CASE("torsion cardinality over F_3") {
  auto F3 = FiniteField::make(3, 1);
  auto F9 = FiniteField::make(3, 2);
  FiniteModule M = finite_module(F3, F9->gen(), {F9->one(), F9->from_int(2)});
  for (auto f : {P(F3, {0, 1}), P(F3, {1, 1}), P(F3, {0, 1, 1})}) {
    TorsionBasis tb = torsion_basis(M, f);
    CHECK(tb.points.size() == 2 * f.deg());
    CHECK(fq_rank(tb.points, *F3) == tb.points.size());
    for (const auto& mu : tb.points) CHECK(tb.module.phi_apply(f, mu).is_zero());
    if (tb.field->size() <= 6561) CHECK(brute_kernel(tb.module, f) == fq_span(tb.points, *F3).size());
    auto mus = module_basis(tb, 1);
    std::vector<Elem> gens;
    for (const auto& mu : mus)
      for (std::size_t j = 0; j < f.deg(); ++j) {
        std::vector<Elem> d;
        for (std::size_t i = j + 1; i < f.size(); ++i) d.push_back(f[i]);
        gens.push_back(tb.module.phi_apply(PolyF(d), mu));
      }
    CHECK(fq_rank(gens, *F3) == 2 * f.deg());
  }
}

TEST_CASE("exterior module") {
  auto F3 = FiniteField::make(3, 1);
  auto F9 = FiniteField::make(3, 2);
  Elem w = F9->gen();
  FiniteModule M2 = finite_module(F3, w, {F9->one(), w});
  CHECK(M2.exterior().g() == std::vector<Elem>{-w});
  FiniteModule M1 = finite_module(F3, w, {w});
  CHECK(M1.exterior().g() == M1.g());
  FiniteModule M3 = finite_module(F3, w, {F9->one(), F9->one(), w});
  CHECK(M3.exterior().g() == std::vector<Elem>{w});

  // psi_x kills the Moore determinant of phi[x] points
  auto F2 = FiniteField::make(2, 1);
  FiniteModule R = rank2_f4();
  TorsionBasis tb = torsion_basis(R, P(F2, {0, 1}));
  FiniteModule psi = tb.module.exterior();
  for (const auto& a : fq_span(tb.points, *F2))
    for (const auto& b : fq_span(tb.points, *F2)) CHECK(psi.phi_apply(P(F2, {0, 1}), a * b.pow(2) - b * a.pow(2)).is_zero());
}

TEST_CASE("exponential coefficients") {
  auto F3 = FiniteField::make(3, 1);
  RatFn t = theta_of(*F3);
  RatFn one = rat_const(F3->one()), zero = adl::zl(one);
  RationalModule C = rational_module(F3, {one});
  auto e = exp_coeffs(C, 5);
  CHECK(e[0] == one);
  CHECK(e[1] == (t.pow(3) - t).inv());
  RationalModule Z = rational_module(F3, {zero, t});
  CHECK(exp_coeffs(Z, 3)[1].is_zero());
  std::mt19937_64 rng(9);
  std::vector<RationalModule> mods{C};
  for (int k = 0; k < 5; ++k) {
    auto rnd = [&] {
      std::vector<long long> c(1 + rng() % 2);
      for (auto& x : c) x = rng() % 3;
      return rat_of_poly(P(F3, c), *F3);
    };
    RatFn g2 = rnd();
    if (g2.is_zero()) g2 = one;
    mods.push_back(rational_module(F3, {rnd(), g2}));
  }
  for (const auto& M : mods) {
    auto ex = exp_coeffs(M, 5);
    for (std::size_t i = 1; i <= 5; ++i) {
      RatFn rhs = zero;
      for (std::size_t j = 1; j <= std::min<std::size_t>(i, M.rank()); ++j) rhs += M.g()[j - 1] * frob_iter(ex[i - j], 3, j);
      CHECK(ex[i] * (frob_iter(t, 3, i) - t) == rhs);
    }
  }
}
