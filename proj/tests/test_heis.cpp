// Copyright 2026 The vdgv Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "vdgv/error.hpp"
#include "vdgv/heis/heisenberg.hpp"

namespace vdgv::heis {
namespace {

AdditivePolynomial running_R() {
  Field f3 = gf::build_field(3, 1);
  return AdditivePolynomial(f3, 1, {f3.from_int(-1), f3.one()});
}

AdditivePolynomial char2_R() {
  Field f4 = gf::build_field(2, 2);
  return AdditivePolynomial(f4, 1, {f4.zero(), f4.one()});
}

// omega in F_4 with omega^2 + omega = 1.
FieldElement w4() {
  Field f4 = gf::build_field(2, 2);
  for (std::uint64_t i = 0; i < 4; ++i) {
    FieldElement x = f4.element(i);
    if (x * x + x == f4.one()) return x;
  }
  return f4.zero();
}

template <class F>
void expect_error(ErrorKind kind, F&& fn) {
  try {
    fn();
    ADD_FAILURE() << "no error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), kind);
  }
}

TEST(Heis, MultiplyExamples) {
  Heisenberg H(running_R());
  Field f3 = H.base();
  HeisenbergElement g{f3.one(), f3.zero()};
  EXPECT_EQ(H.multiply(g, g), (HeisenbergElement{f3.from_int(2), f3.one()}));
  HeisenbergElement z{f3.zero(), f3.one()};
  HeisenbergElement h{f3.from_int(2), f3.one()};
  EXPECT_EQ(H.multiply(z, h), (HeisenbergElement{h.a, h.b + f3.one()}));

  Heisenberg H2(char2_R());
  Field f4 = H2.base();
  HeisenbergElement t{f4.one(), w4()};
  EXPECT_EQ(H2.multiply(t, t), (HeisenbergElement{f4.zero(), f4.one()}));
  expect_error(ErrorKind::NotInGroup, [&] { H2.multiply(t, {f4.one(), f4.one()}); });
}

TEST(Heis, OrdersAndPowers) {
  Heisenberg H(running_R());
  Field f3 = H.base();
  EXPECT_EQ(H.element_order({f3.one(), f3.zero()}), 3u);
  EXPECT_EQ(H.element_order({f3.zero(), f3.one()}), 3u);
  Heisenberg H2(char2_R());
  Field f4 = H2.base();
  EXPECT_EQ(H2.element_order({f4.zero(), f4.one()}), 2u);
  EXPECT_EQ(H2.element_order({f4.one(), w4()}), 4u);
}

TEST(Heis, ExhaustiveGroupFacts) {
  for (auto R : {running_R(), char2_R()}) {
    Heisenberg H(R);
    const Field w = H.group_field();
    const auto all = H.enumerate(w);
    std::uint64_t expect = H.p();
    for (unsigned i = 0; i < 2 * H.e(); ++i) expect *= H.p();
    ASSERT_EQ(all.size(), expect);
    const unsigned bound = H.p0() == 2 ? 4 : H.p0();
    std::set<std::uint64_t> a_parts;
    std::vector<HeisenbergElement> centre;
    for (const auto& h : all) {
      EXPECT_EQ(bound % H.element_order(h), 0u);
      a_parts.insert(h.a.index());
      for (std::uint64_t i = 0; i < 6; ++i) {
        // Closed-form power against repeated multiplication.
        HeisenbergElement r = H.identity(w);
        for (std::uint64_t j = 0; j < i; ++j) r = H.multiply(r, h);
        EXPECT_EQ(H.power(h, i), r);
      }
      EXPECT_EQ(H.multiply(h, H.inverse(h)), H.identity(w));
      bool central = true;
      for (const auto& g : all)
        if (!(H.multiply(h, g) == H.multiply(g, h))) {
          central = false;
          break;
        }
      if (central) centre.push_back(h);
    }
    // Center is {0} x F_p and H/Z is V_R.
    EXPECT_EQ(centre.size(), H.p());
    for (const auto& c : centre) {
      EXPECT_TRUE(c.a.is_zero());
      EXPECT_EQ(c.b.frobenius(H.p_exp()), c.b);
    }
    EXPECT_EQ(a_parts.size() * H.p(), all.size());
  }
}

TEST(Heis, ActionExamplesAndCompatibility) {
  Heisenberg H(running_R());
  Field f3 = H.base();
  Point P{f3.zero(), f3.zero()};
  EXPECT_EQ(H.act(P, {f3.one(), f3.zero()}), (Point{f3.one(), f3.zero()}));
  EXPECT_EQ(H.act(P, {f3.zero(), f3.one()}), (Point{f3.zero(), f3.one()}));
  Field f9 = gf::build_field(3, 2);
  expect_error(ErrorKind::PointNotOnCurve, [&] { H.act({f9.gen(), f9.zero()}, {f3.one(), f3.zero()}); });

  Field f27 = gf::build_field(3, 3);
  std::vector<Point> pts;
  for (std::uint64_t i = 0; i < 27; ++i)
    for (std::uint64_t j = 0; j < 27; ++j) {
      FieldElement x = f27.element(i), y = f27.element(j);
      if (H.on_curve({x, y})) pts.push_back({x, y});
    }
  auto hs = H.enumerate(f27);
  ASSERT_EQ(hs.size(), 27u);
  std::mt19937 rng(1);
  for (int t = 0; t < 100; ++t) {
    const Point& p = pts[rng() % pts.size()];
    const auto& h = hs[rng() % hs.size()];
    const auto& g = hs[rng() % hs.size()];
    Point q = H.act(p, h);
    EXPECT_TRUE(H.on_curve(q));
    EXPECT_EQ(H.act(q, g), H.act(p, H.multiply(h, g)));
  }
}

TEST(Heis, OmegaExamples) {
  Heisenberg H(running_R());
  Field f3 = H.base();
  EXPECT_TRUE(H.omega(f3.one(), f3.from_int(2)).is_zero());
  for (const auto& a : gf::span_elements(H.vr_field(), H.vr_basis())) EXPECT_TRUE(H.omega(a, a).is_zero());
  EXPECT_EQ(H.vr_field().degree(), 3u);
  EXPECT_EQ(H.gram_matrix().rank(), 2u);
  expect_error(ErrorKind::NotInVR, [&] { H.omega(gf::build_field(3, 3).gen(), f3.one()); });
}

TEST(Heis, OmegaBilinearNondegenerateOnGrid) {
  Field f9 = gf::build_field(3, 2);
  Field f4 = gf::build_field(2, 2);
  std::vector<AdditivePolynomial> Rs{running_R(), char2_R(), AdditivePolynomial(f9, 1, {f9.gen(), f9.one()}),
                                     AdditivePolynomial(f4, 2, {f4.one(), f4.gen()})};
  for (const auto& R : Rs) {
    Heisenberg H(R);
    const auto& B = H.vr_basis();
    EXPECT_EQ(B.size(), 2 * H.e() * H.p_exp());
    EXPECT_EQ(H.gram_matrix().rank(), B.size());
    for (const auto& x : B)
      for (const auto& y : B) {
        EXPECT_EQ(H.omega(x, y), -H.omega(y, x));
        for (const auto& z : B) EXPECT_EQ(H.omega(x + z, y), H.omega(x, y) + H.omega(z, y));
        for (std::uint64_t c = 0; c < H.fp().order(); ++c) {
          FieldElement beta = H.fp().element(c);
          EXPECT_EQ(H.omega(gf::embed(beta, x.field()) * x, y), beta * H.omega(x, y));
        }
      }
  }
}

TEST(Heis, MaximalIsotropic) {
  Heisenberg H(running_R());
  auto A = maximal_isotropic_rational(H);
  ASSERT_EQ(A.basis.size(), 1u);
  EXPECT_EQ(A.elements.size(), 3u);
  EXPECT_EQ(A.F, running_R());

  Heisenberg H2(char2_R());
  auto A2 = maximal_isotropic_rational(H2);
  Field f4 = H2.base();
  EXPECT_EQ(A2.basis, std::vector<FieldElement>{f4.one()});
  EXPECT_EQ(A2.F, AdditivePolynomial(f4, 1, {-f4.one(), f4.one()}));

  Field f9 = gf::build_field(3, 2);
  Heisenberg H3(running_R().over(f9));
  auto A3 = maximal_isotropic_rational(H3);
  EXPECT_EQ(A3.elements.size(), 3u);
  EXPECT_TRUE(addpoly::kernel(H3.E(), f9).basis.size() == 1);
  // F_A divides E_R.
  EXPECT_NO_THROW(addpoly::outer_divide(H3.E(), A3.F));

  auto again = isotropic_from_FR(H, running_R());
  EXPECT_EQ(again.elements, A.elements);
  expect_error(ErrorKind::InvalidInput,
               [&] { isotropic_from_FR(H3, AdditivePolynomial(f9, 1, {f9.one(), f9.one()})); });
}

TEST(Heis, NoRationalIsotropic) {
  Field f5 = gf::build_field(5, 1);
  Heisenberg H(AdditivePolynomial(f5, 1, {f5.one(), f5.one()}));
  expect_error(ErrorKind::NoRationalMaximalIsotropic, [&] { maximal_isotropic_rational(H); });
}

TEST(Heis, Lifts) {
  Heisenberg H(running_R());
  Field f3 = H.base();
  EXPECT_EQ(lift_to_AR(H, f3.one()), (HeisenbergElement{f3.one(), f3.from_int(2)}));
  EXPECT_EQ(lift_to_AR(H, f3.zero()), (HeisenbergElement{f3.zero(), f3.zero()}));
  Heisenberg H2(char2_R());
  Field f4 = H2.base();
  EXPECT_EQ(lift_to_AR(H2, f4.one()), (HeisenbergElement{f4.one(), w4()}));
}

TEST(Heis, GroupStructureExamples) {
  Heisenberg H(running_R());
  MaximalAbelian AR(H, maximal_isotropic_rational(H));
  Field f3 = H.base();
  ASSERT_EQ(AR.elements().size(), 9u);
  EXPECT_EQ(AR.structure().orders, (std::vector<unsigned>{3, 3}));
  EXPECT_EQ(AR.structure().generators, (std::vector<HeisenbergElement>{{f3.one(), f3.zero()}, {f3.zero(), f3.one()}}));

  Heisenberg H2(char2_R());
  MaximalAbelian AR2(H2, maximal_isotropic_rational(H2));
  EXPECT_EQ(AR2.structure().orders, std::vector<unsigned>{4});
  EXPECT_EQ(AR2.structure().generators.front(), (HeisenbergElement{H2.base().one(), w4()}));

  Heisenberg H0(AdditivePolynomial(f3, 1, {f3.one()}));
  MaximalAbelian AR0(H0, maximal_isotropic_rational(H0));
  EXPECT_EQ(AR0.elements().size(), 3u);
  for (const auto& g : AR0.structure().generators) EXPECT_TRUE(g.a.is_zero());
}

TEST(Heis, CharactersExtending) {
  Heisenberg H(running_R());
  MaximalAbelian AR(H, maximal_isotropic_rational(H));
  Field fp = H.fp();
  auto xs = characters_extending(AR, fp.one());
  ASSERT_EQ(xs.size(), 3u);
  Field f3 = H.base();
  std::vector<unsigned> at_g;
  for (const auto& xi : xs) at_g.push_back(character_value(AR, xi, {f3.one(), f3.zero()}));
  EXPECT_EQ(at_g, (std::vector<unsigned>{0, 1, 2}));
  for (const auto& xi : xs)
    for (const auto& g : AR.elements())
      for (const auto& h : AR.elements())
        EXPECT_EQ(character_value(AR, xi, H.multiply(g, h)),
                  (character_value(AR, xi, g) + character_value(AR, xi, h)) % 3);

  Heisenberg H2(char2_R());
  MaximalAbelian AR2(H2, maximal_isotropic_rational(H2));
  auto ys = characters_extending(AR2, H2.fp().one());
  ASSERT_EQ(ys.size(), 2u);
  std::set<unsigned> vals;
  for (const auto& xi : ys) vals.insert(character_value(AR2, xi, {H2.base().one(), w4()}));
  EXPECT_EQ(vals, (std::set<unsigned>{1, 3}));
  expect_error(ErrorKind::CentralCharacterTrivial, [&] { characters_extending(AR2, H2.fp().zero()); });
}

TEST(Heis, Assumptions) {
  Field f2 = gf::build_field(2, 1);
  expect_error(ErrorKind::AssumptionViolated, [&] { Heisenberg H(AdditivePolynomial(f2, 1, {f2.one()})); });
  Heisenberg H(running_R());
  auto r = validate_assumptions(H, maximal_isotropic_rational(H));
  EXPECT_TRUE(r.ok());
  Heisenberg H2(char2_R());
  auto r2 = validate_assumptions(H2, maximal_isotropic_rational(H2));
  EXPECT_TRUE(r2.ok());
  EXPECT_TRUE(r2.heisenberg_rational);
  EXPECT_EQ(H2.enumerate(H2.base()).size(), 8u);
}

}  // namespace
}  // namespace vdgv::heis
