// Copyright 2026 The vdgv Authors.
// SPDX-License-Identifier: Apache-2.0

#include "vdgv/addpoly/sparse_poly.hpp"

#include <cassert>
#include <sstream>
#include <vector>

namespace vdgv::addpoly {

SparsePoly SparsePoly::monomial(const FieldElement& coeff, std::uint64_t exp) {
  SparsePoly p(coeff.field());
  p.add_term(exp, coeff);
  return p;
}

FieldElement SparsePoly::coeff(std::uint64_t exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? field_.zero() : it->second;
}

void SparsePoly::add_term(std::uint64_t exp, const FieldElement& c) {
  assert(c.field() == field_);
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(exp, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SparsePoly SparsePoly::operator+(const SparsePoly& o) const {
  SparsePoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

SparsePoly SparsePoly::operator-(const SparsePoly& o) const {
  SparsePoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly r(field_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

SparsePoly SparsePoly::operator*(const SparsePoly& o) const {
  SparsePoly r(field_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
  return r;
}

SparsePoly SparsePoly::scaled(const FieldElement& c) const {
  SparsePoly r(field_);
  for (const auto& [e, v] : terms_) r.add_term(e, v * c);
  return r;
}

SparsePoly SparsePoly::frobenius_power(unsigned k) const {
  std::uint64_t factor = 1;
  for (unsigned i = 0; i < k; ++i) factor *= field_.p0();
  SparsePoly r(field_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e * factor, c.frobenius(k));
  return r;
}

SparsePoly SparsePoly::pow(std::uint64_t e) const {
  // P^e = prod_i (P^{p0^i})^{d_i} over the base-p0 digits d_i of e.
  SparsePoly result = constant(field_.one());
  SparsePoly frob = *this;
  const unsigned p0 = field_.p0();
  while (e > 0) {
    const std::uint64_t digit = e % p0;
    for (std::uint64_t k = 0; k < digit; ++k) result = result * frob;
    e /= p0;
    if (e) frob = frob.frobenius_power(1);
  }
  return result;
}

SparsePoly SparsePoly::compose(const SparsePoly& inner) const {
  SparsePoly r(field_);
  for (const auto& [e, c] : terms_) r = r + inner.pow(e).scaled(c);
  return r;
}

FieldElement SparsePoly::eval(const FieldElement& x) const {
  const Field f = x.field();
  FieldElement acc = f.zero();
  for (const auto& [e, c] : terms_) acc += gf::embed(c, f) * x.pow(e);
  return acc;
}

SparsePoly SparsePoly::over(Field target) const {
  SparsePoly r(target);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, gf::embed(c, target));
  return r;
}

std::string SparsePoly::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    os << (first ? "" : " + ") << it->second.to_string() << "*x^" << it->first;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace vdgv::addpoly
