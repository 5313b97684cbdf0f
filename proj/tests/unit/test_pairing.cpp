#include <random>

#include "doctest.h"
#include "dw/pairing.hpp"
#include "dw/weil.hpp"

using namespace dw;

namespace {

PolyF P(const FieldPtr& F, std::vector<long long> c) { return poly_from_ints(*F, c); }

FiniteModule rank2_f4() {
  auto F2 = FiniteField::make(2, 1);
  auto F4 = FiniteField::make(2, 2);
  return finite_module(F2, F4->gen(), {F4->one(), F4->one()});
}

}  // namespace

TEST_CASE("Moore determinant") {
  auto F9 = FiniteField::make(3, 2);
  std::mt19937_64 rng(3);
  for (int it = 0; it < 20; ++it) {
    Elem a = F9->from_value(rng() % 9), b = F9->from_value(rng() % 9);
    CHECK(moore_det({a}, 3) == a);
    CHECK(moore_det({a, b}, 3) == a * b.pow(3) - b * a.pow(3));
    CHECK(moore_det({a, a}, 3).is_zero());
  }
  auto F27 = FiniteField::make(3, 3);
  Elem y = F27->gen();
  // nonzero exactly on F_3-independent triples
  CHECK(!moore_det({F27->one(), y, y * y}, 3).is_zero());
  CHECK(moore_det({F27->one(), y, y + F27->one()}, 3).is_zero());
}

TEST_CASE("action on tensors") {
  auto F2 = FiniteField::make(2, 1);
  FiniteModule R = rank2_f4();
  TorsionBasis tb = torsion_basis(R, P(F2, {0, 1, 1}));
  const FiniteModule& M = tb.module;
  Elem m1 = tb.points[0], m2 = tb.points[1];
  auto vars = MultiPoly::x_vars(2);
  CHECK(diamond_moore(MultiPoly::constant(F2, vars, F2->one()), M, {m1, m2}) == moore_det({m1, m2}, 2));
  MultiPoly x1x2 = MultiPoly::var(F2, vars, 0) * MultiPoly::var(F2, vars, 1);
  Elem p1 = M.phi_x().apply(m1), p2 = M.phi_x().apply(m2);
  CHECK(diamond_moore(x1x2, M, {m1, m2}) == moore_det({p1, p2}, 2));
  auto tv = MultiPoly::x_vars(2, true);
  MultiPoly tx1 = MultiPoly::var(F2, tv, 2) * MultiPoly::var(F2, tv, 0);
  PolyF d = diamond_moore_t(tx1, M, {m1, m2});
  CHECK(d.size() == 2);
  CHECK(d[0].is_zero());
  CHECK(d[1] == moore_det({p1, m2}, 2));
  CHECK_THROWS_AS(diamond_moore(x1x2, M, {m1}), Error);
}

TEST_CASE("Weil pairing small cases") {
  auto F2 = FiniteField::make(2, 1);
  FiniteModule R = rank2_f4();
  PolyF x = P(F2, {0, 1});
  TorsionBasis tb = torsion_basis(R, x);
  FiniteModule psi = tb.module.exterior();
  auto all = fq_span(tb.points, *F2);
  REQUIRE(all.size() == 4);
  std::size_t nonzero = 0;
  for (const auto& a : all)
    for (const auto& b : all) {
      Elem W = weil_pairing(tb.module, x, {a, b});
      CHECK(W == a * b.pow(2) - b * a.pow(2));
      CHECK(psi.phi_apply(x, W).is_zero());
      if (!W.is_zero()) ++nonzero;
    }
  CHECK(nonzero == 6);
  CHECK(weil_pairing(tb.module, x, {tb.points[0], tb.points[0]}).is_zero());
  try {
    weil_pairing(tb.module, x, {tb.points[0], tb.field->gen()});
    FAIL("non-torsion point accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotTorsion);
  }
}

TEST_CASE("Weil pairing over F_3") {
  auto F3 = FiniteField::make(3, 1);
  auto F9 = FiniteField::make(3, 2);
  FiniteModule M = finite_module(F3, F9->gen(), {F9->one(), F9->from_int(2)});
  std::mt19937_64 rng(17);
  for (auto f : {P(F3, {0, 1}), P(F3, {1, 1}), P(F3, {0, 1, 1})}) {
    TorsionBasis tb = torsion_basis(M, f);
    FiniteModule psi = tb.module.exterior();
    auto pick = [&] {
      std::vector<Elem> c;
      for (std::size_t i = 0; i < tb.points.size(); ++i) c.push_back(F3->from_value(rng() % 3));
      return fq_combination(tb.points, c);
    };
    for (int it = 0; it < 10; ++it) {
      Elem a = pick(), b = pick(), a2 = pick();
      Elem W = weil_pairing(tb.module, f, {a, b});
      CHECK(psi.phi_apply(f, W).is_zero());
      CHECK(weil_pairing(tb.module, f, {b, a}) == -W);
      CHECK(weil_pairing(tb.module, f, {a + a2, b}) == W + weil_pairing(tb.module, f, {a2, b}));
      PolyF g = P(F3, {static_cast<long long>(rng() % 3), static_cast<long long>(rng() % 3), 1});
      CHECK(weil_pairing(tb.module, f, {tb.module.phi_apply(g, a), b}) == psi.phi_apply(g, W));
    }
    auto mus = module_basis(tb, 3);
    CHECK(!weil_pairing(tb.module, f, mus).is_zero());
  }
}

TEST_CASE("tree representatives give the same pairing") {
  auto F2 = FiniteField::make(2, 1);
  auto F4 = FiniteField::make(2, 2);
  FiniteModule M3 = finite_module(F2, F4->gen(), {F4->one(), F4->zero(), F4->one()});
  PolyF x = P(F2, {0, 1}), f = P(F2, {0, 1, 1});
  for (const auto& g : {x, f}) {
    TorsionBasis tb = torsion_basis(M3, g);
    auto mus = module_basis(tb, 1);
    Elem W = weil_pairing(tb.module, g, mus);
    CHECK(!W.is_zero());
    for (EdgeList t : {EdgeList{3, {{1, 2}, {2, 3}}}, EdgeList{3, {{1, 3}, {2, 3}}}, EdgeList{3, {{1, 2}, {1, 3}}}})
      CHECK(weil_pairing_with(tree_product(g, t), tb.module, g, mus) == W);
    CHECK(tb.module.exterior().phi_apply(g, W).is_zero());
  }
}

TEST_CASE("main theorem bridge") {
  auto F3 = FiniteField::make(3, 1);
  RatFn one = rat_const(F3->one()), zero = adl::zl(one), th = theta_of(*F3);
  RationalModule C2 = rational_module(F3, {zero, one});
  MainTheoremReport rep = main_theorem_check(C2, P(F3, {0, 1}), 1);
  CHECK(rep.ok());
  CHECK(rep.compared() > 0);
  RationalModule R = rational_module(F3, {th, th + one});
  for (auto f : {P(F3, {0, 1}), P(F3, {1, 0, 1}), P(F3, {0, 1, 1})}) {
    MainTheoremReport r2 = main_theorem_check(R, f, 2);
    CHECK(r2.ok());
    for (const auto& m : r2.leading.mismatches) MESSAGE(mono_string(m.mono, 3) << ": " << m.lhs << " vs " << m.rhs);
    CHECK(r2.leading.compared.size() > 0);
  }
  try {
    main_theorem_check(R, P(F3, {0, 1}), 0);
    FAIL("shallow truncation accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::TruncationTooShallow);
  }
  PolyF f = P(F3, {2, 1, 1});
  CHECK(weil_op_with_t(f, 2).coefficient_of(2, 1) == weil_op_r(f, 2).remap({0, 1}, MultiPoly::x_vars(2, true)));
}
