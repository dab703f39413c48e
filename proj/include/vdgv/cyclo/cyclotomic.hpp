// Copyright 2026 The vdgv Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef VDGV_CYCLO_CYCLOTOMIC_HPP
#define VDGV_CYCLO_CYCLOTOMIC_HPP

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace vdgv::cyclo {

using Int = mpz_class;

inline constexpr int kMaxOrder = 1024;

// Z[x]/(Phi_n). The class of x is the fixed primitive n-th root of unity.
struct CyclotomicRing {
  int order = 1;
  // Phi_n, monic, low-to-high.
  std::vector<Int> phi;
  int degree() const { return static_cast<int>(phi.size()) - 1; }
};

// Throws UnsupportedOrder outside [1, kMaxOrder].
const CyclotomicRing& cyclo_ring(int n);

/// Exact element of Z[zeta_n], stored as integer coordinates in the basis
/// 1, zeta, ..., zeta^{phi(n)-1}.
class CyclotomicInteger {
 public:
  CyclotomicInteger() : CyclotomicInteger(1) {}
  explicit CyclotomicInteger(int n);
  CyclotomicInteger(int n, std::vector<Int> coords);

  static CyclotomicInteger from_int(int n, const Int& v);
  // zeta_n^k for any integer k.
  static CyclotomicInteger zeta_power(int n, std::int64_t k);

  int order() const { return n_; }
  const std::vector<Int>& coords() const { return c_; }

  CyclotomicInteger operator+(const CyclotomicInteger& o) const;
  CyclotomicInteger operator-(const CyclotomicInteger& o) const;
  CyclotomicInteger operator-() const;
  CyclotomicInteger operator*(const CyclotomicInteger& o) const;
  CyclotomicInteger operator*(const Int& k) const;
  CyclotomicInteger& operator+=(const CyclotomicInteger& o);
  CyclotomicInteger& operator-=(const CyclotomicInteger& o);
  CyclotomicInteger& operator*=(const CyclotomicInteger& o);
  bool operator==(const CyclotomicInteger& o) const { return n_ == o.n_ && c_ == o.c_; }

  CyclotomicInteger pow(std::uint64_t e) const;
  // zeta -> zeta^{-1}.
  CyclotomicInteger conj() const;
  bool is_zero() const;
  bool is_rational() const;
  // Exact division by a rational integer; false when not divisible.
  bool divide_exact(const Int& k, CyclotomicInteger& out) const;
  // Same element viewed in Z[zeta_target], target a multiple of order().
  CyclotomicInteger lifted(int target) const;

  std::string to_string() const;

 private:
  int n_;
  std::vector<Int> c_;
};

// tau * conj(tau), which must be a rational integer (NotRationalInteger otherwise).
Int conj_norm(const CyclotomicInteger& tau);
bool equals_q(const CyclotomicInteger& tau, const Int& q);

// tau^m == q^{m/2}; m must be even.
bool is_q_times_root_of_unity(const CyclotomicInteger& tau, const Int& q, unsigned m);

enum class GaussianClass { PrimitiveEighth, FourthRoot };

// tau / 2^{n/2} = exp(pi i k / 4) with k = eighth_index in [0, 8).
struct GaussianClassification {
  GaussianClass kind;
  int eighth_index;
};

// tau in Z[i] with tau * conj(tau) == 2^n, n >= 1. Throws NormMismatch.
GaussianClassification classify_gaussian(const CyclotomicInteger& tau, unsigned n);

// Integer polynomial, low-to-high, trailing zeros trimmed.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Int> coeffs);

  const std::vector<Int>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Int coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Int(0); }
  IntPolynomial operator*(const IntPolynomial& o) const;
  bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }
  std::string to_string() const;

 private:
  std::vector<Int> c_;
};

class CycloPolynomial {
 public:
  explicit CycloPolynomial(int n) : n_(n) {}
  CycloPolynomial(int n, std::vector<CyclotomicInteger> coeffs);

  int order() const { return n_; }
  const std::vector<CyclotomicInteger>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  CycloPolynomial operator*(const CycloPolynomial& o) const;
  bool operator==(const CycloPolynomial& o) const { return n_ == o.n_ && c_ == o.c_; }
  CycloPolynomial conj() const;
  bool is_integral() const;
  // Throws NonIntegralCoefficient when some coefficient is not rational.
  IntPolynomial to_integer() const;
  static CycloPolynomial from_integer(int n, const IntPolynomial& p);
  // 1 - tau T
  static CycloPolynomial linear_factor(const CyclotomicInteger& tau);

 private:
  int n_;
  std::vector<CyclotomicInteger> c_;
};

// prod (1 - alpha_i T) from the power sums S_1..S_d of the alpha_i.
CycloPolynomial newton_from_power_sums(std::span<const CyclotomicInteger> sums, int d);
IntPolynomial newton_from_power_sums(std::span<const Int> sums, int d);

// Power sums S_1..S_count of the reciprocal roots of p (p(0) must be 1).
std::vector<Int> power_sums(const IntPolynomial& p, int count);
std::vector<CyclotomicInteger> power_sums(const CycloPolynomial& p, int count);

}  // namespace vdgv::cyclo

#endif  // VDGV_CYCLO_CYCLOTOMIC_HPP
