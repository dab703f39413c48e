// Copyright 2026 The vdgv Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef VDGV_GAUSS_GAUSS_HPP
#define VDGV_GAUSS_GAUSS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vdgv/addpoly/additive.hpp"
#include "vdgv/cyclo/cyclotomic.hpp"
#include "vdgv/heis/heisenberg.hpp"

namespace vdgv::gauss {

using addpoly::AdditivePolynomial;
using cyclo::CyclotomicInteger;
using gf::Field;
using gf::FieldElement;
using heis::CharacterOfA;
using heis::HeisenbergElement;
using heis::MaximalAbelian;

/// t -> (a(t), b(t)) in A_R for t in F_q, with x^q - x = a o F_R.
struct FrobeniusDescent {
  AdditivePolynomial a;
  // Indexed by the enumeration index of t.
  std::vector<HeisenbergElement> table;
  // q = p^s.
  unsigned s = 0;
  // Number of t whose value was re-evaluated at a second root.
  std::size_t second_root_checks = 0;
};

// Throws NoSuchFactor, NoRoot. Odd p0 only (EvenCharacteristic).
FrobeniusDescent build_descent(const MaximalAbelian& AR);

// Root of unity zeta_M^k in Z[zeta_M].
CyclotomicInteger root_of_unity(unsigned M, unsigned k);

// -sum_t xi(a(t), b(t)).
CyclotomicInteger tau_via_sum(const MaximalAbelian& AR, const CharacterOfA& xi, const FrobeniusDescent& d);

// eta in F_q with xi(a(t), f_R(a(t),a(t))/2) = psi_{F_q}(eta t) for all t. Zero allowed.
FieldElement eta_of_xi(const MaximalAbelian& AR, const CharacterOfA& xi, const FrobeniusDescent& d);

// sum_{x in F_q} psi_{F_q}(x^2) in Z[zeta_{p0}]. Throws EvenCharacteristic.
CyclotomicInteger gauss_sum_G(const FieldElement& psi, Field fq);

// -psi(-eta^2 / (4 c_A)) (c_A / q) G_psi.
CyclotomicInteger tau_closed_form(const FieldElement& psi, const FieldElement& eta, const FieldElement& cA);

// -sum_{x in F_q} psi(Tr(x R(x))) as an element of Z[zeta_M].
CyclotomicInteger trace_sum(const AdditivePolynomial& R, const FieldElement& psi, unsigned M);

// p0 = 2 with H_R in F_q x F_q: tau = a_psi / p^e, returned in Z[i].
// Throws HypothesisViolated, NonIntegral.
CyclotomicInteger tau_via_schur(const heis::Heisenberg& H, const FieldElement& psi);

struct RootOfUnityCheck {
  bool order_ok = false;
  bool sign_applies = false;
  bool sign_ok = true;
  bool ok() const { return order_ok && sign_ok; }
};
// tau^{4 p0} = q^{2 p0}; tau^{2 p0} = -q^{p0} when f is odd and p0 != 1 mod 4.
RootOfUnityCheck check_tau_root_of_unity(const CyclotomicInteger& tau, unsigned p0, unsigned f);

struct TauRecord {
  FieldElement psi;
  std::vector<unsigned> xi;
  CyclotomicInteger tau;
  std::optional<FieldElement> eta;
  std::map<std::string, CyclotomicInteger> routes;
  bool routes_agree = true;
};

struct TauTable {
  std::vector<TauRecord> records;
  // Empty when no per-character route applies (p0 = 2, H_R not rational).
  bool complete = false;
  std::string reason;
};

// All (p-1) p^e records. cA is required for odd p0.
TauTable compute_tau_table(const MaximalAbelian& AR, const std::optional<FieldElement>& cA);

// b(t) - f_R(a(t),a(t))/2 = Tr_{F_q/F_p}(c_A t^2) for every t.
bool verify_cA_trace_identity(const MaximalAbelian& AR, const FrobeniusDescent& d, const FieldElement& cA);

// sum over xi extending psi of tau_xi equals trace_sum for every psi.
bool verify_sum_rule(const MaximalAbelian& AR, const TauTable& table);

}  // namespace vdgv::gauss

#endif  // VDGV_GAUSS_GAUSS_HPP
