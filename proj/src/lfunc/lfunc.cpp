// Copyright 2026 The vdgv Authors.
// SPDX-License-Identifier: Apache-2.0

#include "vdgv/lfunc/lfunc.hpp"

#include "vdgv/error.hpp"

namespace vdgv::lfunc {

namespace {

Int ipow(std::uint64_t b, std::uint64_t e) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), b, e);
  return r;
}

std::uint64_t p_pow_e(const AdditivePolynomial& R) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < R.e(); ++i) r *= R.step();
  return r;
}

IntPolynomial newton_from_counts(const std::vector<Int>& N, const Int& q, std::uint64_t d) {
  std::vector<Int> sums;
  Int qn = 1;
  for (const auto& n : N) {
    qn *= q;
    sums.push_back(qn + 1 - n);
  }
  if (d == 0) return IntPolynomial({Int(1)});
  return cyclo::newton_from_power_sums(std::span<const Int>(sums), static_cast<int>(d));
}

}  // namespace

unsigned value_order(unsigned p0) { return p0 == 2 ? 4 : p0; }

Field TraceCounts::fp() const { return gf::build_field(R_.p0(), R_.step_exp()); }

Int TraceCounts::q_pow(unsigned n) const { return ipow(fq().order(), n); }

bool TraceCounts::feasible(unsigned n) const { return gf::within_guard(R_.p0(), fq().degree() * n, gf::size_guard()); }

const Histogram& TraceCounts::hist(unsigned n) {
  auto it = hist_.find(n);
  if (it != hist_.end()) return it->second;
  check(feasible(n), ErrorKind::SizeGuardExceeded,
        "counting over F_{q^" + std::to_string(n) + "} exceeds the size guard");
  const Field big = gf::build_field(R_.p0(), fq().degree() * n);
  return hist_.emplace(n, trace_histogram(R_, big, jobs_)).first->second;
}

std::uint64_t two_genus(const AdditivePolynomial& R) { return (R.step() - 1) * p_pow_e(R); }

Int count_points(TraceCounts& counts, unsigned n) {
  return 1 + Int(static_cast<unsigned long>(counts.R().step())) * Int(static_cast<unsigned long>(counts.hist(n)[0]));
}

bool functional_equation_holds(const IntPolynomial& L, const Int& q, std::uint64_t g) {
  if (L.degree() != static_cast<int>(2 * g)) return false;
  Int qp = 1;
  // c_{2g-i} = q^{g-i} c_i for i = g, g-1, ..., 0.
  for (std::uint64_t j = 0; j <= g; ++j) {
    const std::uint64_t i = g - j;
    if (L.coeff(2 * g - i) != qp * L.coeff(i)) return false;
    qp *= q;
  }
  return L.coeff(0) == 1;
}

IntPolynomial lpoly_oracle(TraceCounts& counts) {
  const std::uint64_t d = two_genus(counts.R());
  std::vector<Int> N;
  for (unsigned n = 1; n <= d; ++n) N.push_back(count_points(counts, n));
  const Int q = counts.q_pow(1);
  IntPolynomial L = newton_from_counts(N, q, d);
  check(L.degree() == static_cast<int>(d), ErrorKind::InternalMismatch, "oracle degree differs from 2g");
  check(functional_equation_holds(L, q, d / 2), ErrorKind::InternalMismatch, "oracle fails the functional equation");
  return L;
}

CycloPolynomial psi_part_lpoly(TraceCounts& counts, const FieldElement& psi) {
  const unsigned p0 = counts.R().p0();
  const unsigned M = value_order(p0);
  const Field fp = counts.fp();
  const std::uint64_t d = p_pow_e(counts.R());
  std::vector<unsigned> expo(fp.order());
  for (std::uint64_t t = 0; t < fp.order(); ++t) expo[t] = (M / p0) * heis::psi_exponent(psi, fp.element(t)) % M;

  std::vector<CyclotomicInteger> sums;
  for (unsigned n = 1; n <= d; ++n) {
    const Histogram& h = counts.hist(n);
    std::vector<Int> by_exp(M, 0);
    for (std::uint64_t t = 0; t < h.size(); ++t) by_exp[expo[t]] += Int(static_cast<unsigned long>(h[t]));
    CyclotomicInteger s(static_cast<int>(M));
    for (unsigned k = 0; k < M; ++k)
      if (by_exp[k] != 0) s -= CyclotomicInteger::zeta_power(static_cast<int>(M), k) * by_exp[k];
    sums.push_back(std::move(s));
  }
  return cyclo::newton_from_power_sums(std::span<const CyclotomicInteger>(sums), static_cast<int>(d));
}

IntPolynomial product_of_parts(const std::vector<CycloPolynomial>& parts) {
  if (parts.empty()) return IntPolynomial({Int(1)});
  CycloPolynomial acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = acc * parts[i];
  return acc.to_integer();
}

IntPolynomial lpoly_product(const gauss::TauTable& table, unsigned M) {
  CycloPolynomial acc(static_cast<int>(M), {CyclotomicInteger::from_int(static_cast<int>(M), 1)});
  for (const auto& r : table.records) acc = acc * CycloPolynomial::linear_factor(r.tau.lifted(static_cast<int>(M)));
  return acc.to_integer();
}

DeltaCurve make_delta_curve(const AdditivePolynomial& R, const AdditivePolynomial& delta) {
  check(delta.field() == R.field(), ErrorKind::InvalidInput, "delta must have coefficients in F_q");
  DeltaCurve dc;
  dc.delta = delta;
  dc.nu = addpoly::validate_delta(delta, R.step_exp());
  dc.degree = 1;
  for (unsigned i = 0; i < delta.degree_exp(); ++i) dc.degree *= R.p0();

  const Field fp = gf::build_field(R.p0(), R.step_exp());
  std::vector<FieldElement> ker;
  for (std::uint64_t i = 0; i < fp.order(); ++i) {
    const FieldElement y = fp.element(i);
    if (dc.nu.eval(gf::embed(y, R.field())).is_zero()) ker.push_back(y);
  }
  for (std::uint64_t c = 1; c < fp.order(); ++c) {
    const FieldElement psi = fp.element(c);
    bool trivial = true;
    for (const auto& y : ker) trivial = trivial && heis::psi_exponent(psi, y) == 0;
    if (trivial) dc.psis.push_back(psi);
  }
  check(dc.psis.size() + 1 == dc.degree, ErrorKind::InternalMismatch, "characters through nu do not match |V_delta|");
  return dc;
}

std::uint64_t two_genus(const AdditivePolynomial& R, const DeltaCurve& dc) { return (dc.degree - 1) * p_pow_e(R); }

Int count_points_delta(TraceCounts& counts, const DeltaCurve& dc, unsigned n) {
  const Histogram& h = counts.hist(n);
  const Field big = gf::build_field(counts.R().p0(), counts.fq().degree() * n);
  const Field fp = counts.fp();
  std::vector<FieldElement> gens;
  for (const auto& g : big.basis()) gens.push_back(gf::trace(dc.delta.eval(g), fp));
  Int hits = 0;
  for (const auto& w : gf::span_elements(fp, gens)) hits += Int(static_cast<unsigned long>(h[w.index()]));
  return 1 + Int(static_cast<unsigned long>(dc.degree)) * hits;
}

IntPolynomial delta_oracle(TraceCounts& counts, const DeltaCurve& dc) {
  const std::uint64_t d = two_genus(counts.R(), dc);
  std::vector<Int> N;
  for (unsigned n = 1; n <= d; ++n) N.push_back(count_points_delta(counts, dc, n));
  IntPolynomial L = newton_from_counts(N, counts.q_pow(1), d);
  check(L.degree() == static_cast<int>(d), ErrorKind::InternalMismatch, "delta oracle degree differs from 2g");
  return L;
}

IntPolynomial delta_curve_lpoly(TraceCounts& counts, const DeltaCurve& dc, bool cross_check) {
  std::vector<CycloPolynomial> parts;
  for (const auto& psi : dc.psis) parts.push_back(psi_part_lpoly(counts, psi));
  IntPolynomial L = product_of_parts(parts);
  if (cross_check)
    check(L == delta_oracle(counts, dc), ErrorKind::OracleMismatch, "delta product differs from the point count");
  return L;
}

Int count_from_L(const IntPolynomial& L, const Int& q, unsigned n) {
  Int qn;
  mpz_pow_ui(qn.get_mpz_t(), q.get_mpz_t(), n);
  if (L.degree() <= 0) return qn + 1;
  return qn + 1 - cyclo::power_sums(L, static_cast<int>(n)).back();
}

Verdicts classify(const IntPolynomial& L, unsigned p0, unsigned f, unsigned max_n, const gauss::TauTable* table,
                  bool heisenberg_rational) {
  Verdicts v;
  const Int q = ipow(p0, f);
  const Int two_g = L.degree();
  auto kind = [&](unsigned n) {
    // +1 maximal, -1 minimal, 0 neither.
    if ((static_cast<std::uint64_t>(f) * n) % 2 != 0) return 0;
    const Int r = ipow(p0, static_cast<std::uint64_t>(f) * n / 2);
    const Int N = count_from_L(L, q, n);
    const Int base = r * r + 1;
    if (N == base + two_g * r) return 1;
    if (N == base - two_g * r) return -1;
    return 0;
  };
  for (unsigned n = 1; n <= max_n; ++n) {
    const int k = kind(n);
    if (k > 0) v.maximal_at.push_back(n);
    if (k < 0) v.minimal_at.push_back(n);
  }
  v.minimal_at_4p0 = kind(4 * p0) < 0;
  v.supersingular = v.minimal_at_4p0;
  if (f % 2 == 1 && p0 % 4 != 1) v.maximal_at_2p0 = kind(2 * p0) > 0;
  if (p0 == 2 && heisenberg_rational) v.minimal_at_2 = kind(2) < 0;
  if (table != nullptr && table->complete) {
    bool all = true;
    for (const auto& r : table->records) all = all && cyclo::is_q_times_root_of_unity(r.tau, q, 4 * p0);
    v.taus_supersingular = all;
  }
  return v;
}

}  // namespace vdgv::lfunc
