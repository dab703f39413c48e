// Copyright 2026 The vdgv Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef VDGV_ADDPOLY_SPARSE_POLY_HPP
#define VDGV_ADDPOLY_SPARSE_POLY_HPP

#include <cstdint>
#include <map>
#include <string>

#include "vdgv/gf/field.hpp"

namespace vdgv::addpoly {

using gf::Field;
using gf::FieldElement;

// Univariate polynomial over a finite field with sparse exponents. Used for
// the non-additive objects (x R(x), Delta, F_R^2) that appear in the quotient
// identities.
class SparsePoly {
 public:
  SparsePoly() = default;
  explicit SparsePoly(Field field) : field_(field) {}

  static SparsePoly monomial(const FieldElement& coeff, std::uint64_t exp);
  static SparsePoly constant(const FieldElement& c) { return monomial(c, 0); }
  static SparsePoly x(Field field) { return monomial(field.one(), 1); }

  Field field() const { return field_; }
  const std::map<std::uint64_t, FieldElement>& terms() const { return terms_; }
  FieldElement coeff(std::uint64_t exp) const;
  std::uint64_t degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(std::uint64_t exp, const FieldElement& c);

  SparsePoly operator+(const SparsePoly& o) const;
  SparsePoly operator-(const SparsePoly& o) const;
  SparsePoly operator-() const;
  SparsePoly operator*(const SparsePoly& o) const;
  SparsePoly scaled(const FieldElement& c) const;
  bool operator==(const SparsePoly& o) const { return field_ == o.field_ && terms_ == o.terms_; }

  // P^{p0^k}: Frobenius on coefficients, exponents times p0^k.
  SparsePoly frobenius_power(unsigned k) const;
  SparsePoly pow(std::uint64_t e) const;
  // this(inner(x)).
  SparsePoly compose(const SparsePoly& inner) const;
  FieldElement eval(const FieldElement& x) const;
  SparsePoly over(Field target) const;

  std::string to_string() const;

 private:
  Field field_;
  std::map<std::uint64_t, FieldElement> terms_;
};

}  // namespace vdgv::addpoly

#endif  // VDGV_ADDPOLY_SPARSE_POLY_HPP
