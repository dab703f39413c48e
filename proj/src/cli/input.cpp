// Copyright 2026 The vdgv Authors.
// SPDX-License-Identifier: Apache-2.0

#include "vdgv/cli/input.hpp"

#include <charconv>
#include <string_view>

namespace vdgv::cli {

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

std::int64_t parse_int(std::string_view s) {
  s = trim(s);
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  check(!s.empty() && ec == std::errc() && ptr == s.data() + s.size(), ErrorKind::InvalidInput,
        "not an integer: '" + std::string(s) + "'");
  return v;
}

AdditivePolynomial parse_poly(const std::string& text, Field fq, unsigned step_exp, const char* what) {
  const auto c = parse_coefficients(text, fq);
  check(!c.back().is_zero(), ErrorKind::InvalidInput, std::string(what) + ": leading coefficient is zero");
  return AdditivePolynomial(fq, step_exp, c);
}

}  // namespace

std::vector<FieldElement> parse_coefficients(const std::string& text, Field field) {
  check(!trim(text).empty(), ErrorKind::InvalidInput, "empty coefficient list");
  std::vector<FieldElement> out;
  for (auto entry : split(text, ';')) {
    const auto parts = split(entry, ',');
    if (parts.size() == 1) {
      out.push_back(field.from_int(parse_int(parts[0])));
      continue;
    }
    check(parts.size() == field.degree(), ErrorKind::InvalidInput,
          "coefficient '" + std::string(entry) + "' needs " + std::to_string(field.degree()) + " coordinates");
    std::vector<std::int64_t> coords;
    for (auto p : parts) coords.push_back(parse_int(p));
    out.push_back(field.from_coords(coords));
  }
  return out;
}

Curve parse_curve(const CurveInput& in) {
  check(in.p0 >= 2 && gf::is_prime(in.p0), ErrorKind::InvalidInput, "p0 must be prime");
  check(in.f >= 1, ErrorKind::InvalidInput, "f must be positive");
  check(in.p >= 2, ErrorKind::InvalidInput, "p must be a power of p0");
  unsigned k = 0;
  std::uint64_t pp = 1;
  while (pp < in.p) {
    pp *= in.p0;
    ++k;
  }
  check(pp == in.p, ErrorKind::InvalidInput, "p must be a power of p0");
  check(in.f % k == 0, ErrorKind::InvalidInput, "q = p0^f must be a power of p");

  Curve c;
  c.input = in;
  c.fq = gf::build_field(in.p0, in.f);
  c.p_exp = k;
  c.R = parse_poly(in.R, c.fq, k, "R");
  if (!in.FR.empty()) c.FR = parse_poly(in.FR, c.fq, k, "F_R");
  if (!in.delta.empty()) c.delta = parse_poly(in.delta, c.fq, 1, "delta");
  return c;
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput:
    case ErrorKind::NotPrime:
    case ErrorKind::NotReduced:
    case ErrorKind::RootsNotInFp:
    case ErrorKind::NotASubfield:
      return 2;
    case ErrorKind::AssumptionViolated:
    case ErrorKind::NoRationalMaximalIsotropic:
    case ErrorKind::NoRationalLift:
    case ErrorKind::HypothesisViolated:
      return 3;
    case ErrorKind::SizeGuardExceeded:
      return 5;
    default:
      return 4;
  }
}

}  // namespace vdgv::cli
