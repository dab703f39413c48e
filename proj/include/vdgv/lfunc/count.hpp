// Copyright 2026 The vdgv Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef VDGV_LFUNC_COUNT_HPP
#define VDGV_LFUNC_COUNT_HPP

#include <cstdint>
#include <vector>

#include "vdgv/addpoly/additive.hpp"
#include "vdgv/gf/field.hpp"

namespace vdgv::lfunc {

using addpoly::AdditivePolynomial;
using gf::Field;
using gf::FieldElement;

/// x -> Tr_{F_Q/F_p}(x R(x)) as k quadratic forms over F_p0 in the
/// power-basis coordinates of F_Q (p = p0^k).
struct TraceForm {
  unsigned p0 = 0;
  unsigned m = 0;
  unsigned k = 0;
  // diag[i*k + l] = C_l[i][i].
  std::vector<std::uint32_t> diag;
  // sym[(i*m + j)*k + l] = C_l[i][j] + C_l[j][i].
  std::vector<std::uint32_t> sym;
};

TraceForm build_trace_form(const AdditivePolynomial& R, Field big);

// hist[t] = #{x in big : Tr_{big/F_p}(x R(x)) = t}, t an F_p enumeration index.
using Histogram = std::vector<std::uint64_t>;

// Element-by-element reference through the field API.
Histogram trace_histogram_serial(const AdditivePolynomial& R, Field big);

// Odometer walk over the quadratic forms, split across OpenMP threads on
// the top coordinates. jobs = 0 keeps the runtime default.
Histogram trace_histogram(const AdditivePolynomial& R, Field big, unsigned jobs = 0);

}  // namespace vdgv::lfunc

#endif  // VDGV_LFUNC_COUNT_HPP
