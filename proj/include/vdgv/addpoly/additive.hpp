// Copyright 2026 The vdgv Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef VDGV_ADDPOLY_ADDITIVE_HPP
#define VDGV_ADDPOLY_ADDITIVE_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "vdgv/addpoly/sparse_poly.hpp"
#include "vdgv/gf/field.hpp"
#include "vdgv/gf/matrix.hpp"

namespace vdgv::addpoly {

/// Additive polynomial sum_k c_k x^{p0^k} over a finite field.
///
/// Coefficients are stored densely by p0-exponent. The declared step
/// p = p0^step_exp only affects how the polynomial is presented: for
/// step_coeffs() to succeed every nonzero term must sit at a power of p.
class AdditivePolynomial {
 public:
  AdditivePolynomial() = default;
  // From the coefficients a_0..a_e of x^{p^i}, p = p0^step_exp.
  AdditivePolynomial(Field field, unsigned step_exp, const std::vector<FieldElement>& step_coeffs);

  static AdditivePolynomial from_p0_coeffs(Field field, unsigned step_exp, std::vector<FieldElement> coeffs);
  static AdditivePolynomial identity(Field field, unsigned step_exp = 1);
  // x^{p0^k} - x.
  static AdditivePolynomial frobenius_minus_identity(Field field, unsigned k, unsigned step_exp = 1);

  Field field() const { return field_; }
  unsigned p0() const { return field_.p0(); }
  unsigned step_exp() const { return step_exp_; }
  std::uint64_t step() const;
  const std::vector<FieldElement>& p0_coeffs() const { return c_; }
  FieldElement p0_coeff(unsigned k) const { return k < c_.size() ? c_[k] : field_.zero(); }
  // a_0..a_e; throws InvalidInput when a term is not at a power of the step.
  std::vector<FieldElement> step_coeffs() const;
  bool fits_step(unsigned step_exp) const;

  bool is_zero() const { return c_.empty(); }
  bool is_separable() const { return !c_.empty() && !c_[0].is_zero(); }
  // deg = p0^degree_exp().
  unsigned degree_exp() const { return c_.empty() ? 0 : static_cast<unsigned>(c_.size() - 1); }
  // deg = p^e.
  unsigned e() const { return degree_exp() / step_exp_; }
  FieldElement leading() const { return c_.back(); }

  // x may live in any extension of field().
  FieldElement eval(const FieldElement& x) const;
  gf::Matrix matrix_on(Field ambient) const;
  AdditivePolynomial over(Field target) const;
  AdditivePolynomial with_step(unsigned step_exp) const;
  SparsePoly to_sparse() const;

  AdditivePolynomial operator+(const AdditivePolynomial& o) const;
  AdditivePolynomial operator-(const AdditivePolynomial& o) const;
  AdditivePolynomial scaled(const FieldElement& c) const;
  bool operator==(const AdditivePolynomial& o) const { return field_ == o.field_ && c_ == o.c_; }

  std::string to_string() const;

 private:
  void trim();
  Field field_;
  unsigned step_exp_ = 1;
  std::vector<FieldElement> c_;
};

/// sum c_{uv} x^{p0^u} y^{p0^v}, additive in each variable separately.
class TwistedBiForm {
 public:
  TwistedBiForm() = default;
  explicit TwistedBiForm(Field field) : field_(field) {}

  Field field() const { return field_; }
  const std::map<std::pair<unsigned, unsigned>, FieldElement>& terms() const { return terms_; }
  void add_term(unsigned u, unsigned v, const FieldElement& c);
  bool is_zero() const { return terms_.empty(); }

  FieldElement eval(const FieldElement& x, const FieldElement& y) const;
  // The additive polynomial x -> f(x, y) with coefficients in y's field.
  AdditivePolynomial in_x(const FieldElement& y) const;
  // The additive polynomial y -> f(x, y) with coefficients in x's field.
  AdditivePolynomial in_y(const FieldElement& x) const;
  // f^{p0^k}.
  TwistedBiForm frobenius_power(unsigned k) const;
  TwistedBiForm over(Field target) const;

  TwistedBiForm operator+(const TwistedBiForm& o) const;
  TwistedBiForm operator-(const TwistedBiForm& o) const;
  bool operator==(const TwistedBiForm& o) const { return field_ == o.field_ && terms_ == o.terms_; }

  std::string to_string() const;

 private:
  Field field_;
  std::map<std::pair<unsigned, unsigned>, FieldElement> terms_;
};

// E_R(x) = R(x)^{p^e} + sum_i (a_i x)^{p^{e-i}}.
AdditivePolynomial make_ER(const AdditivePolynomial& R);
// The twisted form f_R with f_R^p - f_R = -x^{p^e} E_R(y) + x R(y) + y R(x).
TwistedBiForm make_fR(const AdditivePolynomial& R);
// Both sides of the identity above, built independently.
std::pair<TwistedBiForm, TwistedBiForm> bilinear_identity_sides(const AdditivePolynomial& R);
bool verify_bilinear_identity(const AdditivePolynomial& R);

// g o f.
AdditivePolynomial compose(const AdditivePolynomial& g, const AdditivePolynomial& f);
// g with h = g o f. Throws NoSuchFactor.
AdditivePolynomial outer_divide(const AdditivePolynomial& h, const AdditivePolynomial& f);
// f with h = g o f. Throws NoSuchFactor.
AdditivePolynomial inner_divide(const AdditivePolynomial& h, const AdditivePolynomial& g);

struct KernelInfo {
  // F_p0-basis of ker(f) inside the ambient field.
  std::vector<FieldElement> basis;
  // |ker f ∩ ambient| == deg f.
  bool full = false;
};

KernelInfo kernel(const AdditivePolynomial& f, Field ambient);

// Minimal n with ker f inside F_{q^n}, q the coefficient field. Throws
// SizeGuardExceeded when the search leaves the guard.
unsigned splitting_degree(const AdditivePolynomial& f);

// Checks that delta is reduced with all roots in F_p (p = p0^p_exp) and
// returns nu with delta o nu = y^p - y.
AdditivePolynomial validate_delta(const AdditivePolynomial& delta, unsigned p_exp);

}  // namespace vdgv::addpoly

#endif  // VDGV_ADDPOLY_ADDITIVE_HPP
