// Copyright 2026 The vdgv Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef VDGV_HEIS_HEISENBERG_HPP
#define VDGV_HEIS_HEISENBERG_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vdgv/addpoly/additive.hpp"
#include "vdgv/gf/field.hpp"

namespace vdgv::heis {

using addpoly::AdditivePolynomial;
using addpoly::TwistedBiForm;
using gf::Field;
using gf::FieldElement;

struct HeisenbergElement {
  FieldElement a;
  FieldElement b;
  bool operator==(const HeisenbergElement&) const = default;
  std::string to_string() const;
};

using Point = std::pair<FieldElement, FieldElement>;

/// H_R for R over F_q with step p = p0^k.
class Heisenberg {
 public:
  explicit Heisenberg(AdditivePolynomial R);

  const AdditivePolynomial& R() const { return R_; }
  const AdditivePolynomial& E() const { return E_; }
  const TwistedBiForm& f() const { return f_; }
  Field base() const { return R_.field(); }
  Field fp() const { return fp_; }
  unsigned p0() const { return R_.p0(); }
  unsigned p_exp() const { return R_.step_exp(); }
  std::uint64_t p() const { return R_.step(); }
  unsigned e() const { return R_.e(); }

  // Smallest F_{q^n} containing V_R, and an F_p0-basis of V_R there.
  // Built on first use; may be a large extension.
  Field vr_field() const;
  const std::vector<FieldElement>& vr_basis() const;
  // Smallest F_{q^{n j}} (j in {1, p0}) containing all of H_R.
  Field group_field() const;

  bool in_VR(const FieldElement& a) const;
  bool contains(const HeisenbergElement& h) const;
  bool on_curve(const Point& pt) const;

  HeisenbergElement identity(Field where) const;
  HeisenbergElement multiply(const HeisenbergElement& h, const HeisenbergElement& g) const;
  HeisenbergElement inverse(const HeisenbergElement& h) const;
  // h^i = (ia, ib + C(i,2) f_R(a,a)).
  HeisenbergElement power(const HeisenbergElement& h, std::uint64_t i) const;
  unsigned element_order(const HeisenbergElement& h) const;
  Point act(const Point& pt, const HeisenbergElement& h) const;

  // f_R(a,a') - f_R(a',a) as an element of F_p.
  FieldElement omega(const FieldElement& a, const FieldElement& a2) const;
  // Tr_{F_p/F_p0} o omega on vr_basis().
  gf::Matrix gram_matrix() const;

  // All b in `where` with (a,b) in H_R, sorted by enumeration index.
  std::vector<HeisenbergElement> lifts(const FieldElement& a, Field where) const;
  // H_R ∩ where^2.
  std::vector<HeisenbergElement> enumerate(Field where) const;

 private:
  AdditivePolynomial R_;
  AdditivePolynomial E_;
  TwistedBiForm f_;
  Field fp_;
  struct VR {
    Field field;
    std::vector<FieldElement> basis;
  };
  const VR& vr() const;
  mutable std::shared_ptr<const VR> vr_;
  mutable std::mutex vr_mu_;
};

/// Maximal totally isotropic A inside V_R ∩ F_q with its annihilator F_A.
struct IsotropicSubspace {
  // F_p-basis a_1..a_e.
  std::vector<FieldElement> basis;
  // All of A sorted by enumeration index.
  std::vector<FieldElement> elements;
  // prod_{alpha in A} (x - alpha), monic, step p.
  AdditivePolynomial F;
};

// F_p-span of `gens` inside their common field.
std::vector<FieldElement> fp_span(Field fp, const std::vector<FieldElement>& gens);

IsotropicSubspace maximal_isotropic_rational(const Heisenberg& H);
// From a user-supplied F_R over F_q. Throws InvalidInput when F_R is not a
// monic divisor of E_R whose kernel is a rational maximal isotropic subspace.
IsotropicSubspace isotropic_from_FR(const Heisenberg& H, const AdditivePolynomial& F);
// prod_{alpha in span} (x - alpha) built by the additive recursion.
AdditivePolynomial subspace_polynomial(Field field, unsigned step_exp, const std::vector<FieldElement>& elements);

struct GroupStructure {
  std::vector<HeisenbergElement> generators;
  std::vector<unsigned> orders;
};

/// A_R = preimage of A in H_R, all coordinates in F_q.
class MaximalAbelian {
 public:
  MaximalAbelian(const Heisenberg& H, IsotropicSubspace A);

  const Heisenberg& heisenberg() const { return *H_; }
  const IsotropicSubspace& subspace() const { return A_; }
  const std::vector<HeisenbergElement>& elements() const { return elements_; }
  const GroupStructure& structure() const { return structure_; }
  // Root-of-unity order housing character values: p0, or 4 when p0 = 2.
  unsigned value_order() const { return p0() == 2 ? 4 : p0(); }
  unsigned p0() const { return H_->p0(); }

  // Odd p0: (a, f_R(a,a)/2). p0 = 2: enumeration-smallest b in F_q.
  HeisenbergElement lift(const FieldElement& a) const;
  // Exponent vector with respect to structure().generators.
  std::vector<unsigned> normal_form(const HeisenbergElement& h) const;
  bool contains(const HeisenbergElement& h) const;

 private:
  const Heisenberg* H_;
  IsotropicSubspace A_;
  std::vector<HeisenbergElement> elements_;
  GroupStructure structure_;
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::vector<unsigned>> nf_;
};

// Odd p0: the canonical lift. p0 = 2: smallest rational lift or NoRationalLift.
HeisenbergElement lift_to_AR(const Heisenberg& H, const FieldElement& a);

GroupStructure group_structure(const Heisenberg& H, const std::vector<HeisenbergElement>& elements);

// psi_c(t) = zeta_{p0}^{Tr_{F_p/F_p0}(c t)}; returns the exponent. t may lie
// in F_q, in which case psi_{F_q}(t) = psi_c(Tr_{F_q/F_p} t) is meant.
unsigned psi_exponent(const FieldElement& c, const FieldElement& t);

/// xi(prod g_j^{n_j}) = zeta_M^{sum n_j k_j}.
struct CharacterOfA {
  FieldElement psi;
  unsigned modulus = 0;
  std::vector<unsigned> exponents;
  unsigned value_exponent(const std::vector<unsigned>& normal_form) const;
};

std::vector<CharacterOfA> characters_extending(const MaximalAbelian& AR, const FieldElement& psi);
unsigned character_value(const MaximalAbelian& AR, const CharacterOfA& xi, const HeisenbergElement& h);

struct AssumptionReport {
  bool p0e_ok = true;
  bool has_rational_A = false;
  bool lifts_rational = false;
  // H_R ⊂ F_q x F_q.
  bool heisenberg_rational = false;
  std::vector<std::string> failures;
  bool ok() const { return p0e_ok && has_rational_A && lifts_rational; }
};

AssumptionReport validate_assumptions(const Heisenberg& H, const std::optional<IsotropicSubspace>& A);

}  // namespace vdgv::heis

#endif  // VDGV_HEIS_HEISENBERG_HPP
