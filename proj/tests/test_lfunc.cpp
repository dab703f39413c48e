// Copyright 2026 The vdgv Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <random>

#include "vdgv/error.hpp"
#include "vdgv/gauss/gauss.hpp"
#include "vdgv/lfunc/lfunc.hpp"
#include "vdgv/quotient/quotient.hpp"

namespace vdgv::lfunc {
namespace {

AdditivePolynomial poly(unsigned p0, unsigned m, unsigned step, std::vector<int> a) {
  Field f = gf::build_field(p0, m);
  std::vector<FieldElement> c;
  for (int v : a) c.push_back(f.from_int(v));
  return AdditivePolynomial(f, step, c);
}

IntPolynomial ip(std::vector<long> c) {
  std::vector<Int> v;
  for (long x : c) v.emplace_back(x);
  return IntPolynomial(v);
}

// #{(x, y) in F_Q^2 : y^p - y = x R(x)} + 1 by enumerating both coordinates.
Int brute_count(const AdditivePolynomial& R, unsigned n) {
  const Field big = gf::build_field(R.p0(), R.field().degree() * n);
  const unsigned k = R.step_exp();
  std::vector<std::uint64_t> image(big.order(), 0);
  for (std::uint64_t j = 0; j < big.order(); ++j) {
    const FieldElement y = big.element(j);
    ++image[(y.frobenius(k) - y).index()];
  }
  std::uint64_t n_aff = 0;
  for (std::uint64_t i = 0; i < big.order(); ++i) {
    const FieldElement x = big.element(i);
    n_aff += image[(x * R.eval(x)).index()];
  }
  return Int(static_cast<unsigned long>(n_aff + 1));
}

AdditivePolynomial random_R(std::mt19937_64& rng, unsigned p0, unsigned m, unsigned step, unsigned e) {
  Field f = gf::build_field(p0, m);
  std::vector<FieldElement> c;
  for (unsigned i = 0; i <= e; ++i) c.push_back(f.element(rng() % f.order()));
  if (c.back().is_zero()) c.back() = f.one();
  return AdditivePolynomial(f, step, c);
}

TEST(Count, ParallelMatchesSerial) {
  std::mt19937_64 rng(5);
  struct Shape {
    unsigned p0, m, step, e, n;
  };
  for (const Shape& s : {Shape{3, 1, 1, 1, 5}, Shape{3, 2, 1, 2, 3}, Shape{2, 2, 1, 1, 5}, Shape{2, 4, 2, 1, 2},
                         Shape{5, 1, 1, 1, 4}, Shape{3, 2, 2, 1, 3}, Shape{7, 1, 1, 0, 3}})
    for (int rep = 0; rep < 3; ++rep) {
      auto R = random_R(rng, s.p0, s.m, s.step, s.e);
      const Field big = gf::build_field(s.p0, s.m * s.n);
      EXPECT_EQ(trace_histogram(R, big), trace_histogram_serial(R, big)) << R.to_string() << " n=" << s.n;
      EXPECT_EQ(trace_histogram(R, big, 1), trace_histogram_serial(R, big));
    }
}

TEST(Count, Examples) {
  TraceCounts run(poly(3, 1, 1, {-1, 1}));
  EXPECT_EQ(count_points(run, 1), 10);
  EXPECT_EQ(count_points(run, 6), 892);
  TraceCounts c4(poly(2, 2, 1, {0, 1}));
  EXPECT_EQ(count_points(c4, 1), 9);
  EXPECT_EQ(count_points(c4, 2), 9);
}

TEST(Count, AgreesWithPairEnumeration) {
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 8; ++rep) {
    auto R = random_R(rng, 3, 1 + rep % 2, 1, 1 + rep % 2);
    TraceCounts tc(R);
    for (unsigned n = 1; n <= 2; ++n) EXPECT_EQ(count_points(tc, n), brute_count(R, n)) << R.to_string();
  }
  auto R = poly(2, 2, 2, {1, 1});
  TraceCounts tc(R);
  EXPECT_EQ(count_points(tc, 1), brute_count(R, 1));
  EXPECT_EQ(count_points(tc, 2), brute_count(R, 2));
}

TEST(Count, FiberStructure) {
  TraceCounts tc(poly(3, 2, 1, {1, 2}));
  for (unsigned n = 1; n <= 3; ++n) {
    const Int N = count_points(tc, n);
    EXPECT_GE(N, 1);
    EXPECT_EQ(Int(N % 3), 1);
  }
}

TEST(Count, SizeGuard) {
  const auto old = gf::size_guard();
  gf::set_size_guard(1000);
  TraceCounts tc(poly(3, 1, 1, {-1, 1}));
  EXPECT_FALSE(tc.feasible(7));
  try {
    (void)count_points(tc, 7);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SizeGuardExceeded);
  }
  gf::set_size_guard(old);
}

TEST(LPoly, OracleExamples) {
  TraceCounts run(poly(3, 1, 1, {-1, 1}));
  const auto L = lpoly_oracle(run);
  EXPECT_EQ(L, ip({1, 6, 18, 36, 54, 54, 27}));
  EXPECT_EQ(L, ip({1, 3, 3}) * ip({1, 3, 3}) * ip({1, 0, 3}));
  TraceCounts c4(poly(2, 2, 1, {0, 1}));
  EXPECT_EQ(lpoly_oracle(c4), ip({1, 4, 4}));
}

TEST(LPoly, FunctionalEquation) {
  EXPECT_TRUE(functional_equation_holds(ip({1, 6, 18, 36, 54, 54, 27}), 3, 3));
  EXPECT_FALSE(functional_equation_holds(ip({1, 6, 18, 36, 54, 54, 26}), 3, 3));
  EXPECT_FALSE(functional_equation_holds(ip({1, 4}), 4, 1));
}

CyclotomicInteger z3(long a, long b) { return CyclotomicInteger(3, {Int(a), Int(b)}); }

TEST(LPoly, PsiPartRunningExample) {
  TraceCounts run(poly(3, 1, 1, {-1, 1}));
  const Field f3 = run.fp();
  const auto L1 = psi_part_lpoly(run, f3.one());
  auto lin = [](const CyclotomicInteger& t) { return CycloPolynomial::linear_factor(t); };
  const auto expect = lin(z3(-1, 1)) * lin(z3(-1, 1)) * lin(z3(-1, -2));
  EXPECT_EQ(L1, expect);
  const auto L2 = psi_part_lpoly(run, f3.from_int(2));
  EXPECT_EQ(L2, L1.conj());
  EXPECT_EQ(product_of_parts({L1, L2}), ip({1, 6, 18, 36, 54, 54, 27}));
}

TEST(LPoly, PsiPartCharTwo) {
  TraceCounts c4(poly(2, 2, 1, {0, 1}));
  const auto L = psi_part_lpoly(c4, c4.fp().one());
  EXPECT_EQ(L.to_integer(), ip({1, 4, 4}));
}

struct Routes {
  IntPolynomial oracle, product, parts;
};

Routes three_routes(const AdditivePolynomial& R) {
  heis::Heisenberg H(R);
  heis::MaximalAbelian AR(H, heis::maximal_isotropic_rational(H));
  std::optional<FieldElement> cA;
  if (H.p0() != 2) cA = quotient::iterate_to_cA(R, AR.subspace()).cA;
  const auto table = gauss::compute_tau_table(AR, cA);
  TraceCounts tc(R);
  std::vector<CycloPolynomial> parts;
  for (std::uint64_t c = 1; c < H.fp().order(); ++c) parts.push_back(psi_part_lpoly(tc, H.fp().element(c)));
  return {lpoly_oracle(tc), lpoly_product(table, value_order(H.p0())), product_of_parts(parts)};
}

TEST(LPoly, ThreeWayAgreement) {
  Field f9 = gf::build_field(3, 2);
  for (const auto& R : {poly(3, 1, 1, {-1, 1}), poly(3, 1, 1, {1}), poly(3, 1, 1, {2}), poly(2, 2, 1, {0, 1}),
                        AdditivePolynomial(f9, 1, {f9.from_int(-1), f9.one()})}) {
    const auto r = three_routes(R);
    EXPECT_EQ(r.oracle, r.product) << R.to_string();
    EXPECT_EQ(r.oracle, r.parts) << R.to_string();
    EXPECT_EQ(static_cast<std::uint64_t>(r.oracle.degree()), two_genus(R));
  }
}

TEST(LPoly, EZeroIsQuadratic) {
  // y^3 - y = x^2 over F_3.
  const auto r = three_routes(poly(3, 1, 1, {1}));
  EXPECT_EQ(r.oracle.degree(), 2);
  EXPECT_EQ(r.oracle.coeff(2), 3);
}

TEST(Delta, FullAndTrivial) {
  auto R = poly(3, 1, 1, {-1, 1});
  TraceCounts tc(R);
  auto full = make_delta_curve(R, poly(3, 1, 1, {-1, 1}));
  EXPECT_EQ(full.psis.size(), 2u);
  EXPECT_EQ(delta_curve_lpoly(tc, full), lpoly_oracle(tc));
  auto line = make_delta_curve(R, poly(3, 1, 1, {1}));
  EXPECT_TRUE(line.psis.empty());
  EXPECT_EQ(delta_curve_lpoly(tc, line), ip({1}));
  EXPECT_EQ(count_points_delta(tc, line, 2), 10);
}

TEST(Delta, CharTwoSubCurve) {
  // y^2 + y = x^5 over F_16, p = 4.
  auto R = poly(2, 4, 2, {0, 1});
  auto dc = make_delta_curve(R, poly(2, 4, 1, {1, 1}));
  EXPECT_EQ(dc.psis.size(), 1u);
  TraceCounts tc(R);
  const auto L = delta_curve_lpoly(tc, dc);
  EXPECT_EQ(L.degree(), 4);
  // Pair count over F_16 as an independent check of n = 1.
  const Field f16 = R.field();
  std::uint64_t aff = 0;
  for (std::uint64_t i = 0; i < 16; ++i)
    for (std::uint64_t j = 0; j < 16; ++j) {
      const auto x = f16.element(i), y = f16.element(j);
      if (y * y + y == x.pow(5)) ++aff;
    }
  EXPECT_EQ(count_points_delta(tc, dc, 1), Int(static_cast<unsigned long>(aff + 1)));
  EXPECT_EQ(count_from_L(L, 16, 1), Int(static_cast<unsigned long>(aff + 1)));
}

TEST(Delta, Errors) {
  auto R = poly(3, 1, 1, {-1, 1});
  EXPECT_THROW(make_delta_curve(R, poly(3, 1, 1, {0, 1})), Error);
}

TEST(Classify, RunningExample) {
  const auto L = ip({1, 6, 18, 36, 54, 54, 27});
  EXPECT_EQ(count_from_L(L, 3, 6), 892);
  EXPECT_EQ(count_from_L(L, 3, 12), 527068);
  const auto v = classify(L, 3, 1, 12, nullptr, false);
  EXPECT_TRUE(v.supersingular);
  EXPECT_TRUE(v.minimal_at_4p0);
  ASSERT_TRUE(v.maximal_at_2p0.has_value());
  EXPECT_TRUE(*v.maximal_at_2p0);
  EXPECT_FALSE(v.minimal_at_2.has_value());
  EXPECT_EQ(v.maximal_at, std::vector<unsigned>{6});
  EXPECT_EQ(v.minimal_at, std::vector<unsigned>{12});
}

TEST(Classify, CharTwo) {
  const auto v = classify(ip({1, 4, 4}), 2, 2, 4, nullptr, true);
  // alpha = -2 twice: odd n maximal, even n minimal.
  EXPECT_EQ(v.maximal_at, (std::vector<unsigned>{1, 3}));
  EXPECT_EQ(v.minimal_at, (std::vector<unsigned>{2, 4}));
  ASSERT_TRUE(v.minimal_at_2.has_value());
  EXPECT_TRUE(*v.minimal_at_2);
  EXPECT_EQ(count_from_L(ip({1, 4, 4}), 4, 2), 9);
}

}  // namespace
}  // namespace vdgv::lfunc
