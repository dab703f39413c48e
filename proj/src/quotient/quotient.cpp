// Copyright 2026 The vdgv Authors.
// SPDX-License-Identifier: Apache-2.0

#include "vdgv/quotient/quotient.hpp"

#include <map>
#include <set>

#include "vdgv/error.hpp"

namespace vdgv::quotient {

namespace {

SparsePoly as_sparse(const AdditivePolynomial& f) { return f.to_sparse(); }

FieldElement omega_raw(const addpoly::TwistedBiForm& f, const FieldElement& x, const FieldElement& y) {
  return f.eval(x, y) - f.eval(y, x);
}

SparsePoly shift(const SparsePoly& p, const FieldElement& c) {
  return p.compose(SparsePoly::x(c.field()) + SparsePoly::constant(c));
}

}  // namespace

QuotientStep quotient_step(const AdditivePolynomial& R0, const FieldElement& a) {
  check(R0.p0() != 2, ErrorKind::EvenCharacteristic, "the quotient step needs odd characteristic");
  check(R0.e() >= 1, ErrorKind::InvalidInput, "the quotient step needs e >= 1");
  check(!a.is_zero(), ErrorKind::ZeroElement, "a must be nonzero");
  const Field F = a.field();
  const AdditivePolynomial R = R0.over(F);
  check(addpoly::make_ER(R).eval(a).is_zero(), ErrorKind::NotInVR, a.to_string());
  const unsigned k = R.step_exp();
  const unsigned e = R.e();
  const auto fR = addpoly::make_fR(R);

  QuotientStep st;
  st.R = R;
  st.a = a;
  st.b = fR.eval(a, a) / F.from_int(2);

  // delta0 = -(b/a^2) x^2 + (1/a) x f_R(x, a).
  SparsePoly d(F);
  d.add_term(2, -st.b / (a * a));
  const auto fxa = fR.in_x(a);
  const FieldElement ainv = a.inverse();
  for (std::size_t u = 0; u < fxa.p0_coeffs().size(); ++u) {
    std::uint64_t pu = 1;
    for (std::size_t i = 0; i < u; ++i) pu *= F.p0();
    d.add_term(pu + 1, fxa.p0_coeffs()[u] * ainv);
  }
  st.delta0 = d;
  st.u = AdditivePolynomial(F, k, {-a.pow(R.step() - 1), F.one()});

  const SparsePoly x = SparsePoly::x(F);
  const SparsePoly target = x * as_sparse(R) - (d.frobenius_power(k) - d);
  const SparsePoly us = as_sparse(st.u);
  std::vector<SparsePoly> U;
  for (unsigned i = 0; i < e; ++i) U.push_back(us * us.frobenius_power(k * i));

  std::set<std::uint64_t> exps;
  for (const auto& [ex, c] : target.terms()) exps.insert(ex);
  for (const auto& P : U)
    for (const auto& [ex, c] : P.terms()) exps.insert(ex);
  const unsigned m = F.degree();
  const auto basis = F.basis();
  gf::Matrix sys(F.p0(), exps.size() * m, e * m);
  std::vector<gf::Coord> rhs(exps.size() * m, 0);
  std::size_t row = 0;
  for (std::uint64_t ex : exps) {
    for (unsigned i = 0; i < e; ++i)
      for (unsigned t = 0; t < m; ++t) {
        const FieldElement v = basis[t] * U[i].coeff(ex);
        for (unsigned r = 0; r < m; ++r) sys.at(row + r, i * m + t) = v.coords()[r];
      }
    const FieldElement tv = target.coeff(ex);
    for (unsigned r = 0; r < m; ++r) rhs[row + r] = tv.coords()[r];
    row += m;
  }
  auto sol = gf::solve(sys, rhs);
  check(sol.has_value(), ErrorKind::NoSolution, "x R(x) - (delta0^p - delta0) is not of the form u R_1(u)");
  std::vector<FieldElement> r;
  for (unsigned i = 0; i < e; ++i)
    r.emplace_back(F, std::vector<gf::Coord>(sol->particular.begin() + i * m, sol->particular.begin() + (i + 1) * m));
  st.R1 = AdditivePolynomial(F, k, r);
  check(verify_step_identity(st), ErrorKind::NoSolution, "step identity fails after elimination");

  const FieldElement ae = R.step_coeffs().back();
  const FieldElement lead = e > 1 ? -ae / a.pow(R.step() - 1) : -ae / (F.from_int(2) * a.pow(R.step() - 1));
  check(st.R1.e() == e - 1 && st.R1.leading() == lead, ErrorKind::InternalMismatch,
        "leading coefficient of R_1 is " + st.R1.leading().to_string() + ", expected " + lead.to_string());
  return st;
}

bool verify_step_identity(const QuotientStep& st) {
  const Field F = st.a.field();
  const SparsePoly x = SparsePoly::x(F);
  const SparsePoly us = as_sparse(st.u);
  const SparsePoly lhs = x * as_sparse(st.R);
  const SparsePoly rhs = us * as_sparse(st.R1).compose(us) + st.delta0.frobenius_power(st.R.step_exp()) - st.delta0;
  return lhs == rhs;
}

bool verify_descent_identity(const QuotientStep& st, const FieldElement& a2) {
  const Field F = st.a.field();
  const auto fR = addpoly::make_fR(st.R);
  const auto fR1 = addpoly::make_fR(st.R1);
  const FieldElement ua2 = st.u.eval(a2);
  const SparsePoly lhs = shift(st.delta0, a2) + as_sparse(fR1.in_x(ua2)).compose(as_sparse(st.u));
  const SparsePoly rhs = st.delta0 + SparsePoly::constant(st.delta0.eval(a2)) + as_sparse(fR.in_x(a2));
  (void)F;
  return lhs == rhs;
}

std::vector<FieldElement> descend_subspace(const std::vector<FieldElement>& basis, const QuotientStep& st) {
  check(!basis.empty() && basis.back() == st.a, ErrorKind::InvalidInput, "the last basis vector must be a");
  const Field fp = gf::build_field(st.R.p0(), st.R.step_exp());
  std::vector<FieldElement> out;
  for (std::size_t i = 0; i + 1 < basis.size(); ++i) out.push_back(st.u.eval(basis[i]));
  const auto span = heis::fp_span(fp, out);
  std::uint64_t expect = 1;
  for (std::size_t i = 0; i < out.size(); ++i) expect *= fp.order();
  check(out.empty() || span.size() == expect, ErrorKind::DependentImage, "u(a_i) are dependent over F_p");
  const auto E1 = addpoly::make_ER(st.R1);
  const auto f1 = addpoly::make_fR(st.R1);
  for (const auto& x : out) {
    check(E1.eval(x).is_zero(), ErrorKind::InternalMismatch, "u(a_i) is not in V_{R_1}");
    for (const auto& y : out)
      check(omega_raw(f1, x, y).is_zero(), ErrorKind::InternalMismatch, "descended basis is not isotropic");
  }
  return out;
}

HeisenbergElement descend_element(const HeisenbergElement& h, const QuotientStep& st) {
  const auto fR = addpoly::make_fR(st.R);
  const FieldElement a2 = gf::embed(h.a, st.a.field());
  check(omega_raw(fR, st.a, a2).is_zero(), ErrorKind::NotCommuting, "omega_R(a, a') is nonzero");
  check(verify_descent_identity(st, a2), ErrorKind::InternalMismatch, "descent identity fails");
  const auto f1 = addpoly::make_fR(st.R1);
  const FieldElement u2 = st.u.eval(a2);
  HeisenbergElement out{u2, f1.eval(u2, u2) / st.a.field().from_int(2)};
  const bool member =
      addpoly::make_ER(st.R1).eval(u2).is_zero() && out.b.frobenius(st.R.step_exp()) - out.b == u2 * st.R1.eval(u2);
  check(member, ErrorKind::InternalMismatch, "descended element is not in H_{R_1}");
  return out;
}

QuotientChain iterate_to_cA(const AdditivePolynomial& R, const heis::IsotropicSubspace& A) {
  const Field F = R.field();
  QuotientChain chain{{}, {}, F.zero(), SparsePoly(F), AdditivePolynomial::identity(F, R.step_exp())};
  check(A.basis.size() == R.e(), ErrorKind::InvalidInput, "A must have F_p-dimension e");
  if (R.e() == 0) {
    chain.cA = R.step_coeffs().front();
    return chain;
  }
  AdditivePolynomial cur = R;
  std::vector<FieldElement> basis = A.basis;
  for (unsigned j = 0; j < R.e(); ++j) {
    QuotientStep st = quotient_step(cur, basis.back());
    chain.bases.push_back(basis);
    chain.delta = chain.delta + st.delta0.compose(as_sparse(chain.U));
    basis = descend_subspace(basis, st);
    chain.U = addpoly::compose(st.u, chain.U);
    cur = st.R1;
    chain.steps.push_back(std::move(st));
  }
  check(cur.e() == 0, ErrorKind::InternalMismatch, "chain did not reach a linear polynomial");
  chain.cA = cur.step_coeffs().front();
  check(chain.U == A.F, ErrorKind::InternalMismatch, "composite of the u_k differs from F_R");
  check(verify_chain_identity(R, chain), ErrorKind::InternalMismatch, "chain identity fails");
  check(verify_translation_identity(R, chain, A.elements), ErrorKind::InternalMismatch, "translation identity fails");
  return chain;
}

bool verify_chain_identity(const AdditivePolynomial& R, const QuotientChain& chain) {
  const Field F = R.field();
  const SparsePoly FR = as_sparse(chain.U);
  const SparsePoly lhs = SparsePoly::x(F) * as_sparse(R);
  const SparsePoly rhs = (FR * FR).scaled(chain.cA) + chain.delta.frobenius_power(R.step_exp()) - chain.delta;
  return lhs == rhs;
}

bool verify_translation_identity(const AdditivePolynomial& R, const QuotientChain& chain,
                                 const std::vector<FieldElement>& A) {
  const auto fR = addpoly::make_fR(R);
  for (const auto& a : A) {
    const SparsePoly lhs = shift(chain.delta, a) - chain.delta;
    const SparsePoly rhs = as_sparse(fR.in_x(a)) + SparsePoly::constant(fR.eval(a, a) / a.field().from_int(2));
    if (!(lhs == rhs)) return false;
  }
  return true;
}

ClosedFormCA closed_form_cA(const AdditivePolynomial& R, const heis::IsotropicSubspace& A,
                            const FieldElement& constructive) {
  const Field F = R.field();
  ClosedFormCA out;
  out.constructive = constructive;
  const unsigned e = R.e();
  const FieldElement ae = R.step_coeffs().back();
  if (e == 0) {
    out.coeff_form = out.root_form = ae;
    out.root_product = F.one();
    out.coeff_form_agrees = out.root_form_agrees = (ae == constructive);
    out.root_product_is_minus_b0_over_be = true;
    return out;
  }
  check(F.p0() != 2, ErrorKind::EvenCharacteristic, "closed forms need odd characteristic");
  const auto b = A.F.with_step(R.step_exp()).step_coeffs();
  const FieldElement two = F.from_int(2);
  const FieldElement sign_coeff = (e % 2 == 1) ? F.one() : -F.one();
  out.coeff_form = sign_coeff * ae * b.back() / (two * b.front());
  FieldElement prod = F.one();
  for (const auto& alpha : A.elements)
    if (!alpha.is_zero()) prod *= alpha;
  out.root_product = prod;
  out.root_product_is_minus_b0_over_be = (prod == -b.front() / b.back());
  const FieldElement sign_root = (e % 2 == 0) ? F.one() : -F.one();
  out.root_form = sign_root * (ae / two) * prod.inverse();
  out.coeff_form_agrees = out.coeff_form == constructive;
  out.root_form_agrees = out.root_form == constructive;
  return out;
}

}  // namespace vdgv::quotient
