// Copyright 2026 The vdgv Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef VDGV_LFUNC_LFUNC_HPP
#define VDGV_LFUNC_LFUNC_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "vdgv/addpoly/additive.hpp"
#include "vdgv/cyclo/cyclotomic.hpp"
#include "vdgv/gauss/gauss.hpp"
#include "vdgv/lfunc/count.hpp"

namespace vdgv::lfunc {

using cyclo::CycloPolynomial;
using cyclo::CyclotomicInteger;
using cyclo::Int;
using cyclo::IntPolynomial;

// Z[zeta_M] housing psi values: p0, or 4 when p0 = 2.
unsigned value_order(unsigned p0);

/// Lazily computed trace histograms of x R(x) over F_{q^n}.
class TraceCounts {
 public:
  explicit TraceCounts(AdditivePolynomial R, unsigned jobs = 0) : R_(std::move(R)), jobs_(jobs) {}

  const AdditivePolynomial& R() const { return R_; }
  Field fq() const { return R_.field(); }
  Field fp() const;
  Int q_pow(unsigned n) const;
  // q^n <= size guard.
  bool feasible(unsigned n) const;
  // Throws SizeGuardExceeded.
  const Histogram& hist(unsigned n);
  // Histograms computed so far, by n.
  const std::map<unsigned, Histogram>& computed() const { return hist_; }

 private:
  AdditivePolynomial R_;
  unsigned jobs_;
  std::map<unsigned, Histogram> hist_;
};

// 2g = (p - 1) p^e.
std::uint64_t two_genus(const AdditivePolynomial& R);

// N_n = 1 + p #{x in F_{q^n} : Tr(x R(x)) = 0}.
Int count_points(TraceCounts& counts, unsigned n);

// From counts n = 1..2g by Newton's identities. Throws InternalMismatch when the
// degree or the functional equation fails.
IntPolynomial lpoly_oracle(TraceCounts& counts);

bool functional_equation_holds(const IntPolynomial& L, const Int& q, std::uint64_t g);

// S_n = -sum_t hist_n[t] psi(t) for n = 1..p^e, then Newton in Z[zeta_M].
CycloPolynomial psi_part_lpoly(TraceCounts& counts, const FieldElement& psi);

// prod over nontrivial psi in `psis` of L_psi. Throws NonIntegralCoefficient.
IntPolynomial product_of_parts(const std::vector<CycloPolynomial>& parts);

// prod (1 - tau T) over the table. Throws NonIntegralCoefficient.
IntPolynomial lpoly_product(const gauss::TauTable& table, unsigned M);

/// C_delta : delta(y) = x R(x).
struct DeltaCurve {
  AdditivePolynomial delta;
  AdditivePolynomial nu;
  // Nontrivial psi of F_p factoring through nu.
  std::vector<FieldElement> psis;
  std::uint64_t degree = 0;
};

// Throws NotReduced, RootsNotInFp.
DeltaCurve make_delta_curve(const AdditivePolynomial& R, const AdditivePolynomial& delta);
std::uint64_t two_genus(const AdditivePolynomial& R, const DeltaCurve& dc);
// 1 + deg(delta) #{x : Tr(x R(x)) in Tr(delta(F_{q^n}))}.
Int count_points_delta(TraceCounts& counts, const DeltaCurve& dc, unsigned n);
IntPolynomial delta_oracle(TraceCounts& counts, const DeltaCurve& dc);
// Product of psi_part_lpoly over dc.psis. Throws OracleMismatch against
// delta_oracle when `cross_check` is set.
IntPolynomial delta_curve_lpoly(TraceCounts& counts, const DeltaCurve& dc, bool cross_check = true);

// N_n = q^n + 1 - sum alpha^n from L.
Int count_from_L(const IntPolynomial& L, const Int& q, unsigned n);

struct Verdicts {
  bool supersingular = false;
  // Every tau satisfies tau^{4 p0} = q^{2 p0}; empty without a table.
  std::optional<bool> taus_supersingular;
  std::vector<unsigned> maximal_at;
  std::vector<unsigned> minimal_at;
  // Minimal over F_{q^{4 p0}}.
  bool minimal_at_4p0 = false;
  // Maximal over F_{q^{2 p0}}; set when f is odd and p0 != 1 mod 4.
  std::optional<bool> maximal_at_2p0;
  // Minimal over F_{q^2}; set when p0 = 2 and H_R in F_q x F_q.
  std::optional<bool> minimal_at_2;
};

Verdicts classify(const IntPolynomial& L, unsigned p0, unsigned f, unsigned max_n, const gauss::TauTable* table,
                  bool heisenberg_rational);

}  // namespace vdgv::lfunc

#endif  // VDGV_LFUNC_LFUNC_HPP
