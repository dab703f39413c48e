// Copyright 2026 The vdgv Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <random>

#include "vdgv/cyclo/cyclotomic.hpp"
#include "vdgv/error.hpp"

namespace vdgv::cyclo {
namespace {

CyclotomicInteger Z(int n, long v) { return CyclotomicInteger::from_int(n, Int(v)); }
CyclotomicInteger zeta(int n, long k = 1) { return CyclotomicInteger::zeta_power(n, k); }

TEST(CycloRing, SmallOrders) {
  EXPECT_EQ(cyclo_ring(3).phi, (std::vector<Int>{1, 1, 1}));
  EXPECT_EQ(cyclo_ring(4).phi, (std::vector<Int>{1, 0, 1}));
  EXPECT_EQ(cyclo_ring(1).degree(), 1);
  EXPECT_EQ(cyclo_ring(12).phi, (std::vector<Int>{1, 0, -1, 0, 1}));
  try {
    cyclo_ring(0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnsupportedOrder);
  }
}

TEST(CycloArith, ZetaHasExactOrder) {
  for (int n : {3, 4, 5, 8, 12}) {
    EXPECT_EQ(zeta(n).pow(n), Z(n, 1));
    for (int k = 1; k < n; ++k) EXPECT_NE(zeta(n).pow(k), Z(n, 1));
    EXPECT_EQ(zeta(n, -1) * zeta(n), Z(n, 1));
  }
}

TEST(CycloArith, ConjIsInvolutiveAutomorphism) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> d(-5, 5);
  for (int n : {3, 4, 5}) {
    for (int t = 0; t < 50; ++t) {
      std::vector<Int> a(cyclo_ring(n).degree()), b(a.size());
      for (auto& x : a) x = d(rng);
      for (auto& x : b) x = d(rng);
      CyclotomicInteger x(n, a), y(n, b);
      EXPECT_EQ(x.conj().conj(), x);
      EXPECT_EQ((x * y).conj(), x.conj() * y.conj());
      EXPECT_EQ((x + y).conj(), x.conj() + y.conj());
      // Real subring of Z[zeta_3] and Z[i] is Z.
      if (n != 5) EXPECT_EQ(x.conj() == x, x.is_rational());
    }
    EXPECT_FALSE(zeta(n).conj() == zeta(n));
    EXPECT_TRUE(Z(n, 7).conj() == Z(n, 7));
  }
}

TEST(CycloNorm, Examples) {
  EXPECT_EQ(conj_norm(Z(3, 1) + zeta(3) * Int(2)), 3);
  EXPECT_EQ(conj_norm(Z(4, -2)), 4);
  EXPECT_EQ(conj_norm(zeta(3) - Z(3, 1)), 3);
  EXPECT_TRUE(equals_q(zeta(3) - Z(3, 1), Int(3)));
}

TEST(CycloRootOfUnity, Examples) {
  EXPECT_TRUE(is_q_times_root_of_unity(zeta(3) - Z(3, 1), Int(3), 12));
  EXPECT_TRUE(is_q_times_root_of_unity(Z(4, -2), Int(4), 8));
  EXPECT_FALSE(is_q_times_root_of_unity(zeta(3) + Z(3, 1), Int(3), 12));
}

TEST(CycloGaussian, Examples) {
  CyclotomicInteger i = zeta(4);
  auto c1 = classify_gaussian(Z(4, 1) + i, 1);
  EXPECT_EQ(c1.kind, GaussianClass::PrimitiveEighth);
  EXPECT_EQ(c1.eighth_index, 1);
  auto c2 = classify_gaussian(i * Int(2), 2);
  EXPECT_EQ(c2.kind, GaussianClass::FourthRoot);
  EXPECT_EQ(c2.eighth_index, 2);
  auto c3 = classify_gaussian(Z(4, -2) - i * Int(2), 3);
  EXPECT_EQ(c3.kind, GaussianClass::PrimitiveEighth);
  EXPECT_EQ(c3.eighth_index, 5);
  try {
    classify_gaussian(Z(4, 3), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NormMismatch);
  }
}

// Independent oracle: (1+i)^k / sqrt2^k enumerates all eighth roots.
TEST(CycloGaussian, AgreesWithPowersOfOnePlusI) {
  CyclotomicInteger w = Z(4, 1) + zeta(4);
  for (int k = 1; k <= 12; ++k)
    for (int u = 0; u < 4; ++u) {
      CyclotomicInteger tau = w.pow(k) * zeta(4, u);
      auto c = classify_gaussian(tau, k);
      EXPECT_EQ(c.eighth_index, (k + 2 * u) % 8);
      EXPECT_EQ(c.kind, k % 2 ? GaussianClass::PrimitiveEighth : GaussianClass::FourthRoot);
    }
}

TEST(CycloNewton, Examples) {
  std::vector<Int> s1{0, -6};
  EXPECT_EQ(newton_from_power_sums(s1, 2), IntPolynomial({1, 0, 3}));
  std::vector<Int> s2{-2};
  EXPECT_EQ(newton_from_power_sums(s2, 1), IntPolynomial({1, 2}));
  std::vector<Int> s3{-4, 8};
  EXPECT_EQ(newton_from_power_sums(s3, 2), IntPolynomial({1, 4, 4}));
  std::vector<Int> bad{1, 0};
  try {
    newton_from_power_sums(bad, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonIntegralCoefficient);
  }
}

TEST(CycloNewton, RoundTripRandomPolynomials) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(-20, 20), deg(1, 8);
  for (int t = 0; t < 200; ++t) {
    int n = deg(rng);
    std::vector<Int> c{1};
    for (int i = 1; i <= n; ++i) c.push_back(d(rng));
    if (c.back() == 0) c.back() = 1;
    IntPolynomial p(c);
    auto s = power_sums(p, n);
    EXPECT_EQ(newton_from_power_sums(s, n), p);
  }
}

TEST(CycloNewton, CyclotomicRoundTrip) {
  CycloPolynomial p = CycloPolynomial::linear_factor(zeta(3) - Z(3, 1)) *
                      CycloPolynomial::linear_factor(zeta(3) - Z(3, 1)) *
                      CycloPolynomial::linear_factor(-(Z(3, 1) + zeta(3) * Int(2)));
  auto s = power_sums(p, 3);
  EXPECT_EQ(newton_from_power_sums(s, 3), p);
  // The product with its conjugate is the running-example L-polynomial.
  EXPECT_EQ((p * p.conj()).to_integer(), IntPolynomial({1, 6, 18, 36, 54, 54, 27}));
}

}  // namespace
}  // namespace vdgv::cyclo
