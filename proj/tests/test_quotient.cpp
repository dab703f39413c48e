// Copyright 2026 The vdgv Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <optional>
#include <random>

#include "vdgv/error.hpp"
#include "vdgv/quotient/quotient.hpp"

namespace vdgv::quotient {
namespace {

using heis::Heisenberg;

AdditivePolynomial running_R() {
  Field f3 = gf::build_field(3, 1);
  return AdditivePolynomial(f3, 1, {f3.from_int(-1), f3.one()});
}

// First R = x^9 + a1 x^3 + a0 x over F_9 whose V_R ∩ F_9 holds a
// two-dimensional isotropic subspace.
std::optional<std::pair<AdditivePolynomial, heis::IsotropicSubspace>> e2_case() {
  Field f9 = gf::build_field(3, 2);
  for (std::uint64_t i = 1; i < 9; ++i)
    for (std::uint64_t j = 0; j < 9; ++j) {
      AdditivePolynomial R(f9, 1, {f9.element(i), f9.element(j), f9.one()});
      Heisenberg H(R);
      try {
        return std::make_pair(R, heis::maximal_isotropic_rational(H));
      } catch (const Error&) {
      }
    }
  return std::nullopt;
}

TEST(Quotient, RunningExampleStep) {
  Field f3 = gf::build_field(3, 1);
  auto st = quotient_step(running_R(), f3.one());
  SparsePoly d(f3);
  d.add_term(2, f3.from_int(2));
  EXPECT_EQ(st.delta0, d);
  EXPECT_EQ(st.u, running_R());
  EXPECT_EQ(st.R1, AdditivePolynomial(f3, 1, {f3.one()}));
  EXPECT_TRUE(verify_step_identity(st));
  // Hand expansion: x^4 - x^2 - (2x^2)^3 + 2x^2 = (x^3 - x)^2.
  auto st2 = quotient_step(running_R(), f3.from_int(2));
  EXPECT_EQ(st2.u, st.u);
  EXPECT_EQ(st2.R1, st.R1);
}

TEST(Quotient, StepErrors) {
  Field f3 = gf::build_field(3, 1), f4 = gf::build_field(2, 2), f27 = gf::build_field(3, 3);
  EXPECT_THROW(quotient_step(AdditivePolynomial(f4, 1, {f4.zero(), f4.one()}), f4.one()), Error);
  try {
    quotient_step(running_R(), f3.zero());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroElement);
  }
  try {
    quotient_step(running_R(), f27.gen());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotInVR);
  }
}

TEST(Quotient, DescendRunningExample) {
  Field f3 = gf::build_field(3, 1);
  auto st = quotient_step(running_R(), f3.one());
  EXPECT_TRUE(descend_subspace({f3.one()}, st).empty());
  auto pi = descend_element({f3.from_int(2), f3.from_int(2)}, st);
  EXPECT_TRUE(pi.a.is_zero());
  auto pi1 = descend_element({f3.one(), f3.from_int(2)}, st);
  EXPECT_TRUE(pi1.a.is_zero());
}

TEST(Quotient, ChainRunningExample) {
  Heisenberg H(running_R());
  auto A = heis::maximal_isotropic_rational(H);
  auto chain = iterate_to_cA(running_R(), A);
  Field f3 = H.base();
  EXPECT_EQ(chain.cA, f3.one());
  SparsePoly d(f3);
  d.add_term(2, f3.from_int(2));
  EXPECT_EQ(chain.delta, d);
  EXPECT_TRUE(verify_chain_identity(running_R(), chain));
  auto cf = closed_form_cA(running_R(), A, chain.cA);
  EXPECT_EQ(cf.coeff_form, f3.one());
  EXPECT_TRUE(cf.coeff_form_agrees);
  EXPECT_EQ(cf.root_form, f3.from_int(2));
  EXPECT_FALSE(cf.root_form_agrees);
}

TEST(Quotient, ChainEZero) {
  Field f3 = gf::build_field(3, 1);
  AdditivePolynomial R(f3, 1, {f3.from_int(2)});
  Heisenberg H(R);
  auto chain = iterate_to_cA(R, heis::maximal_isotropic_rational(H));
  EXPECT_EQ(chain.cA, f3.from_int(2));
  EXPECT_TRUE(chain.delta.is_zero());
  EXPECT_TRUE(chain.steps.empty());
}

TEST(Quotient, ChainP5) {
  Field f5 = gf::build_field(5, 1);
  AdditivePolynomial R(f5, 1, {f5.from_int(-1), f5.one()});
  Heisenberg H(R);
  auto A = heis::maximal_isotropic_rational(H);
  auto chain = iterate_to_cA(R, A);
  EXPECT_TRUE(verify_chain_identity(R, chain));
  EXPECT_TRUE(verify_translation_identity(R, chain, A.elements));
  EXPECT_TRUE(closed_form_cA(R, A, chain.cA).coeff_form_agrees);
}

TEST(Quotient, ChainEqualsTwo) {
  auto c = e2_case();
  ASSERT_TRUE(c.has_value());
  const auto& [R, A] = *c;
  auto chain = iterate_to_cA(R, A);
  ASSERT_EQ(chain.steps.size(), 2u);
  EXPECT_EQ(chain.bases[1].size(), 1u);
  for (const auto& st : chain.steps) {
    EXPECT_TRUE(verify_step_identity(st));
    // deg R_{k+1} = deg R_k / p.
    EXPECT_EQ(st.R1.e() + 1, st.R.e());
  }
  // Descent identity for every a' in A commuting with a.
  Heisenberg H(R);
  const auto& st0 = chain.steps[0];
  for (const auto& a2 : A.elements) {
    EXPECT_TRUE(verify_descent_identity(st0, a2));
    auto pi = descend_element(heis::lift_to_AR(H, a2), st0);
    EXPECT_EQ(pi.a, st0.u.eval(a2));
  }
  EXPECT_TRUE(verify_translation_identity(R, chain, A.elements));
  EXPECT_TRUE(verify_chain_identity(R, chain));
  // At e = 2 the coefficient form is off by a sign; the root-product form matches.
  auto cf = closed_form_cA(R, A, chain.cA);
  EXPECT_FALSE(cf.coeff_form_agrees);
  EXPECT_EQ(cf.coeff_form, -cf.constructive);
  EXPECT_TRUE(cf.root_form_agrees);
}

TEST(Quotient, PointLevelCompatibility) {
  Field f3 = gf::build_field(3, 1), f729 = gf::build_field(3, 6);
  auto st = quotient_step(running_R(), f3.one());
  auto as = f729.matrix_of([](const FieldElement& y) { return y.frobenius(1) - y; });
  std::mt19937_64 rng(9);
  int checked = 0;
  while (checked < 100) {
    FieldElement x = f729.element(rng() % f729.order());
    auto sol = gf::linear_solve(as, x * running_R().eval(x));
    if (sol.empty()) continue;
    FieldElement y = *sol.particular;
    FieldElement u = st.u.eval(x);
    FieldElement v = y - st.delta0.eval(x);
    EXPECT_EQ(v.frobenius(1) - v, u * st.R1.eval(u));
    ++checked;
  }
}

}  // namespace
}  // namespace vdgv::quotient
