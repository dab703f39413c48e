// Copyright 2026 The vdgv Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef VDGV_QUOTIENT_QUOTIENT_HPP
#define VDGV_QUOTIENT_QUOTIENT_HPP

#include <vector>

#include "vdgv/addpoly/additive.hpp"
#include "vdgv/addpoly/sparse_poly.hpp"
#include "vdgv/heis/heisenberg.hpp"

namespace vdgv::quotient {

using addpoly::AdditivePolynomial;
using addpoly::SparsePoly;
using gf::Field;
using gf::FieldElement;
using heis::HeisenbergElement;

/// One step C_R -> C_{R_1} by the subgroup generated by (a, f_R(a,a)/2).
struct QuotientStep {
  AdditivePolynomial R;
  FieldElement a;
  FieldElement b;
  SparsePoly delta0;
  // x^p - a^{p-1} x.
  AdditivePolynomial u;
  AdditivePolynomial R1;
};

// Throws EvenCharacteristic, ZeroElement, NotInVR, NoSolution.
QuotientStep quotient_step(const AdditivePolynomial& R, const FieldElement& a);

// x R(x) = u R_1(u) + delta0^p - delta0, coefficientwise.
bool verify_step_identity(const QuotientStep& step);
// delta0(x+a') + f_{R_1}(u(x), u(a')) = delta0(x) + delta0(a') + f_R(x, a').
bool verify_descent_identity(const QuotientStep& step, const FieldElement& a2);

// u(a_1), ..., u(a_{d-1}) for a basis with a_d = step.a. Throws DependentImage.
std::vector<FieldElement> descend_subspace(const std::vector<FieldElement>& basis, const QuotientStep& step);
// (u(a'), f_{R_1}(u(a'), u(a'))/2). Throws NotCommuting.
HeisenbergElement descend_element(const HeisenbergElement& h, const QuotientStep& step);

struct QuotientChain {
  std::vector<QuotientStep> steps;
  // bases[k] is the basis handled by step k.
  std::vector<std::vector<FieldElement>> bases;
  FieldElement cA;
  SparsePoly delta;
  // u_e o ... o u_1, equal to F_R.
  AdditivePolynomial U;
};

QuotientChain iterate_to_cA(const AdditivePolynomial& R, const heis::IsotropicSubspace& A);

// x R(x) = c_A F_R(x)^2 + delta^p - delta.
bool verify_chain_identity(const AdditivePolynomial& R, const QuotientChain& chain);
// delta(x+a) - delta(x) = f_R(x,a) + f_R(a,a)/2 for every a in A.
bool verify_translation_identity(const AdditivePolynomial& R, const QuotientChain& chain,
                                 const std::vector<FieldElement>& A);

struct ClosedFormCA {
  FieldElement constructive;
  // (-1)^{e+1} a_e b_e / (2 b_0).
  FieldElement coeff_form;
  // (-1)^e (a_e / 2) prod_{alpha != 0} alpha^{-1}.
  FieldElement root_form;
  bool coeff_form_agrees = false;
  bool root_form_agrees = false;
  // prod_{alpha != 0} alpha against -b_0/b_e.
  FieldElement root_product;
  bool root_product_is_minus_b0_over_be = false;
};

ClosedFormCA closed_form_cA(const AdditivePolynomial& R, const heis::IsotropicSubspace& A,
                            const FieldElement& constructive);

}  // namespace vdgv::quotient

#endif  // VDGV_QUOTIENT_QUOTIENT_HPP
