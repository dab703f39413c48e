// Copyright 2026 The vdgv Authors.
// SPDX-License-Identifier: Apache-2.0

#include "vdgv/gauss/gauss.hpp"

#include <vector>

#include "vdgv/error.hpp"

namespace vdgv::gauss {

namespace {

FieldElement half(const FieldElement& x) { return x * x.field().from_int(2).inverse(); }

CyclotomicInteger from_exponent_counts(unsigned M, const std::vector<std::uint64_t>& counts) {
  CyclotomicInteger acc(static_cast<int>(M));
  for (unsigned k = 0; k < M; ++k)
    if (counts[k] != 0) acc += root_of_unity(M, k) * cyclo::Int(static_cast<unsigned long>(counts[k]));
  return acc;
}

}  // namespace

CyclotomicInteger root_of_unity(unsigned M, unsigned k) {
  return CyclotomicInteger::zeta_power(static_cast<int>(M), static_cast<std::int64_t>(k % M));
}

FrobeniusDescent build_descent(const MaximalAbelian& AR) {
  const heis::Heisenberg& H = AR.heisenberg();
  check(H.p0() != 2, ErrorKind::EvenCharacteristic, "the descent uses the canonical lift");
  const Field fq = H.base();
  const AdditivePolynomial& F = AR.subspace().F;
  const unsigned f = fq.degree();

  FrobeniusDescent d;
  d.s = f / H.p_exp();
  d.a = addpoly::outer_divide(AdditivePolynomial::frobenius_minus_identity(fq, f, H.p_exp()), F);

  // x^{q^m} = x + m a(t), so every root lies in F_{q^{p0}}.
  const Field big = gf::build_field(H.p0(), f * H.p0());
  const gf::Matrix fm = F.matrix_on(big);
  const auto ker = addpoly::kernel(F, big);
  const auto& R = H.R();

  auto b_at = [&](const FieldElement& x, const FieldElement& at) {
    const FieldElement xr = x * R.eval(x);
    FieldElement acc = big.zero();
    for (unsigned i = 0; i < d.s; ++i) acc += xr.frobenius(static_cast<std::int64_t>(i) * H.p_exp());
    return acc - H.f().eval(x, gf::embed(at, big));
  };

  d.table.reserve(fq.order());
  for (std::uint64_t i = 0; i < fq.order(); ++i) {
    const FieldElement t = fq.element(i);
    const auto sol = gf::linear_solve(fm, gf::embed(t, big));
    check(!sol.empty(), ErrorKind::NoRoot, "F_R(x) = " + t.to_string() + " has no root in F_{q^p0}");
    const FieldElement x = *sol.particular;
    const FieldElement at = d.a.eval(t);
    check(x.frobenius(f) - x == gf::embed(at, big), ErrorKind::InternalMismatch, "x^q - x != a(t)");
    const FieldElement b = b_at(x, at);
    if (!ker.basis.empty()) {
      check(b_at(x + ker.basis.front(), at) == b, ErrorKind::InternalMismatch, "b(x,t) depends on the root");
      ++d.second_root_checks;
    }
    const auto bq = gf::try_restrict(b, fq);
    check(bq.has_value(), ErrorKind::InternalMismatch, "b(t) is not in F_q");
    HeisenbergElement h{at, *bq};
    check(AR.contains(h), ErrorKind::InternalMismatch, "(a(t), b(t)) is not in A_R");
    d.table.push_back(std::move(h));
  }
  return d;
}

CyclotomicInteger tau_via_sum(const MaximalAbelian& AR, const CharacterOfA& xi, const FrobeniusDescent& d) {
  std::vector<std::uint64_t> counts(xi.modulus, 0);
  for (const auto& h : d.table) ++counts[heis::character_value(AR, xi, h)];
  return -from_exponent_counts(xi.modulus, counts);
}

FieldElement eta_of_xi(const MaximalAbelian& AR, const CharacterOfA& xi, const FrobeniusDescent& d) {
  const heis::Heisenberg& H = AR.heisenberg();
  check(H.p0() != 2, ErrorKind::EvenCharacteristic, "eta is defined for odd p0");
  const Field fq = H.base();
  const unsigned m = fq.degree();
  const auto basis = fq.basis();
  auto xi_prime = [&](const FieldElement& t) { return heis::character_value(AR, xi, AR.lift(d.a.eval(t))); };

  gf::Matrix mat(H.p0(), m, m);
  std::vector<gf::Coord> rhs(m);
  for (unsigned j = 0; j < m; ++j) {
    for (unsigned l = 0; l < m; ++l) mat.at(j, l) = heis::psi_exponent(xi.psi, basis[l] * basis[j]);
    rhs[j] = xi_prime(basis[j]);
  }
  const auto sol = gf::solve(mat, rhs);
  check(sol.has_value() && sol->kernel.empty(), ErrorKind::NotACharacter, "no unique eta");
  std::vector<std::int64_t> coords(sol->particular.begin(), sol->particular.end());
  const FieldElement eta = fq.from_coords(coords);
  for (std::uint64_t i = 0; i < fq.order(); ++i) {
    const FieldElement t = fq.element(i);
    check(xi_prime(t) == heis::psi_exponent(xi.psi, eta * t), ErrorKind::NotACharacter,
          "xi' is not additive at t = " + t.to_string());
  }
  return eta;
}

CyclotomicInteger gauss_sum_G(const FieldElement& psi, Field fq) {
  const unsigned p0 = fq.p0();
  check(p0 != 2, ErrorKind::EvenCharacteristic, "quadratic Gauss sum needs odd p0");
  std::vector<std::uint64_t> counts(p0, 0);
  for (std::uint64_t i = 0; i < fq.order(); ++i) {
    const FieldElement x = fq.element(i);
    ++counts[heis::psi_exponent(psi, x * x)];
  }
  CyclotomicInteger g = from_exponent_counts(p0, counts);
  check(cyclo::equals_q(g, cyclo::Int(static_cast<unsigned long>(fq.order()))), ErrorKind::NormMismatch,
        "G conj(G) != q");
  return g;
}

CyclotomicInteger tau_closed_form(const FieldElement& psi, const FieldElement& eta, const FieldElement& cA) {
  const Field fq = cA.field();
  const unsigned p0 = fq.p0();
  check(!cA.is_zero(), ErrorKind::ZeroElement, "c_A must be nonzero");
  const FieldElement arg = -(eta * eta) / (fq.from_int(4) * cA);
  const int chi = gf::quadratic_character(cA);
  CyclotomicInteger t = root_of_unity(p0, heis::psi_exponent(psi, arg)) * gauss_sum_G(psi, fq);
  return chi == 1 ? -t : t;
}

CyclotomicInteger trace_sum(const AdditivePolynomial& R, const FieldElement& psi, unsigned M) {
  const Field fq = R.field();
  const unsigned scale = M / fq.p0();
  std::vector<std::uint64_t> counts(M, 0);
  for (std::uint64_t i = 0; i < fq.order(); ++i) {
    const FieldElement x = fq.element(i);
    ++counts[scale * heis::psi_exponent(psi, x * R.eval(x)) % M];
  }
  return -from_exponent_counts(M, counts);
}

CyclotomicInteger tau_via_schur(const heis::Heisenberg& H, const FieldElement& psi) {
  check(H.p0() == 2, ErrorKind::InvalidInput, "the Schur route is for p0 = 2");
  const auto rep = heis::validate_assumptions(H, std::nullopt);
  check(rep.heisenberg_rational, ErrorKind::HypothesisViolated, "H_R is not contained in F_q x F_q");
  // psi takes values +-1, so a_psi = (#trace 0) - (#trace 1) with a sign.
  const Field fq = H.base();
  cyclo::Int a = 0;
  for (std::uint64_t i = 0; i < fq.order(); ++i) {
    const FieldElement x = fq.element(i);
    a += heis::psi_exponent(psi, x * H.R().eval(x)) == 0 ? -1 : 1;
  }
  cyclo::Int pe = 1;
  for (unsigned i = 0; i < H.e(); ++i) pe *= static_cast<unsigned long>(H.p());
  check(a % pe == 0, ErrorKind::NonIntegral, "a_psi is not divisible by p^e");
  const cyclo::Int tau = a / pe;
  check(tau * tau == cyclo::Int(static_cast<unsigned long>(fq.order())), ErrorKind::NonIntegral, "tau^2 != q");
  return CyclotomicInteger::from_int(4, tau);
}

RootOfUnityCheck check_tau_root_of_unity(const CyclotomicInteger& tau, unsigned p0, unsigned f) {
  RootOfUnityCheck r;
  cyclo::Int q;
  mpz_ui_pow_ui(q.get_mpz_t(), p0, f);
  r.order_ok = cyclo::is_q_times_root_of_unity(tau, q, 4 * p0);
  r.sign_applies = f % 2 == 1 && p0 % 4 != 1;
  if (r.sign_applies) {
    cyclo::Int qp;
    mpz_pow_ui(qp.get_mpz_t(), q.get_mpz_t(), p0);
    r.sign_ok = tau.pow(2 * p0) == CyclotomicInteger::from_int(tau.order(), -qp);
  }
  return r;
}

TauTable compute_tau_table(const MaximalAbelian& AR, const std::optional<FieldElement>& cA) {
  const heis::Heisenberg& H = AR.heisenberg();
  const Field fp = H.fp();
  TauTable table;

  if (H.p0() == 2) {
    if (!heis::validate_assumptions(H, AR.subspace()).heisenberg_rational) {
      table.reason = "p0 = 2 and H_R is not contained in F_q x F_q";
      return table;
    }
    for (std::uint64_t c = 1; c < fp.order(); ++c) {
      const FieldElement psi = fp.element(c);
      const CyclotomicInteger tau = tau_via_schur(H, psi);
      for (auto& xi : heis::characters_extending(AR, psi))
        table.records.push_back({psi, std::move(xi.exponents), tau, std::nullopt, {{"schur", tau}}, true});
    }
    table.complete = true;
    return table;
  }

  check(cA.has_value(), ErrorKind::InvalidInput, "odd p0 needs c_A");
  const FrobeniusDescent d = build_descent(AR);
  for (std::uint64_t c = 1; c < fp.order(); ++c) {
    const FieldElement psi = fp.element(c);
    for (const auto& xi : heis::characters_extending(AR, psi)) {
      TauRecord rec;
      rec.psi = psi;
      rec.xi = xi.exponents;
      const CyclotomicInteger via_sum = tau_via_sum(AR, xi, d);
      rec.eta = eta_of_xi(AR, xi, d);
      const CyclotomicInteger closed = tau_closed_form(psi, *rec.eta, *cA);
      rec.routes = {{"sum", via_sum}, {"closed_form", closed}};
      rec.routes_agree = via_sum == closed;
      rec.tau = via_sum;
      table.records.push_back(std::move(rec));
    }
  }
  table.complete = true;
  return table;
}

bool verify_cA_trace_identity(const MaximalAbelian& AR, const FrobeniusDescent& d, const FieldElement& cA) {
  const heis::Heisenberg& H = AR.heisenberg();
  const Field fq = H.base();
  for (std::uint64_t i = 0; i < fq.order(); ++i) {
    const FieldElement t = fq.element(i);
    const auto& [a, b] = d.table[i];
    const FieldElement lhs = b - half(H.f().eval(a, a));
    if (lhs != gf::embed(gf::trace(cA * t * t, H.fp()), fq)) return false;
  }
  return true;
}

bool verify_sum_rule(const MaximalAbelian& AR, const TauTable& table) {
  const heis::Heisenberg& H = AR.heisenberg();
  const unsigned M = AR.value_order();
  std::map<std::uint64_t, CyclotomicInteger> sums;
  for (const auto& r : table.records) {
    auto [it, fresh] = sums.try_emplace(r.psi.index(), CyclotomicInteger(static_cast<int>(M)));
    it->second += r.tau.lifted(static_cast<int>(M));
  }
  if (sums.size() + 1 != H.fp().order()) return false;
  for (const auto& [c, s] : sums)
    if (!(s == trace_sum(H.R(), H.fp().element(c), M))) return false;
  return true;
}

}  // namespace vdgv::gauss
