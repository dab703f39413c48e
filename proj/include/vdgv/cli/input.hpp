// Copyright 2026 The vdgv Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef VDGV_CLI_INPUT_HPP
#define VDGV_CLI_INPUT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vdgv/addpoly/additive.hpp"
#include "vdgv/error.hpp"

namespace vdgv::cli {

using addpoly::AdditivePolynomial;
using gf::Field;
using gf::FieldElement;

/// Curve description as typed on the command line.
struct CurveInput {
  unsigned p0 = 0;
  unsigned f = 0;
  std::uint64_t p = 0;
  // "a_0;a_1;...;a_e", each entry an integer or m comma-separated coordinates.
  std::string R;
  std::string FR;
  std::string delta;
};

struct Curve {
  CurveInput input;
  Field fq;
  unsigned p_exp = 0;
  AdditivePolynomial R;
  std::optional<AdditivePolynomial> FR;
  std::optional<AdditivePolynomial> delta;
};

// Throws InvalidInput (or NotPrime) on malformed input.
std::vector<FieldElement> parse_coefficients(const std::string& text, Field field);
Curve parse_curve(const CurveInput& in);

// 2 invalid input, 3 assumptions, 4 internal mismatch, 5 size guard.
int exit_code(ErrorKind kind);

}  // namespace vdgv::cli

#endif  // VDGV_CLI_INPUT_HPP
