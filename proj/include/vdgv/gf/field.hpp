// Copyright 2026 The vdgv Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef VDGV_GF_FIELD_HPP
#define VDGV_GF_FIELD_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vdgv/gf/matrix.hpp"

namespace vdgv::gf {

inline constexpr std::uint64_t kDefaultSizeGuard = std::uint64_t{1} << 40;

// Largest field order that may be built or enumerated. Process-wide.
std::uint64_t size_guard();
void set_size_guard(std::uint64_t guard);

class FieldCtx;
class FieldElement;

/// Handle to an interned finite field F_{p0^m}.
///
/// Contexts are created once per (p0, m), live for the whole process and are
/// never mutated afterwards, so handles compare by identity and may be shared
/// freely between threads.
class Field {
 public:
  Field() = default;

  unsigned p0() const;
  unsigned degree() const;
  std::uint64_t order() const;
  // Monic modulus, low-to-high, length degree()+1.
  const std::vector<Coord>& modulus() const;
  const FieldCtx& ctx() const { return *ctx_; }

  FieldElement zero() const;
  FieldElement one() const;
  // Class of the indeterminate (the power-basis generator).
  FieldElement gen() const;
  FieldElement from_int(std::int64_t v) const;
  FieldElement from_coords(std::span<const std::int64_t> coords) const;
  // Enumeration order: index = sum c_i p0^i over the power-basis coordinates.
  FieldElement element(std::uint64_t index) const;
  std::vector<FieldElement> basis() const;

  // Matrix (over F_p0, power basis) of an F_p0-linear self-map.
  Matrix matrix_of(const std::function<FieldElement(const FieldElement&)>& map) const;

  bool valid() const { return ctx_ != nullptr; }
  bool operator==(const Field&) const = default;

 private:
  friend Field build_field(unsigned, unsigned);
  explicit Field(const FieldCtx* ctx) : ctx_(ctx) {}
  const FieldCtx* ctx_ = nullptr;
};

/// F_{p0^m} with the lexicographically smallest monic irreducible modulus.
/// Throws NotPrime or SizeGuardExceeded.
Field build_field(unsigned p0, unsigned m);

class FieldCtx {
 public:
  unsigned p0 = 0;
  unsigned m = 0;
  std::uint64_t order = 0;
  std::vector<Coord> modulus;
  // reduce[j] = x^{m+j} mod modulus, j < m-1.
  std::vector<std::vector<Coord>> reduce;
  // Matrix of x -> x^{p0}.
  Matrix frobenius;
  // Tr_{F/F_p0}(g^j).
  std::vector<Coord> abs_trace;
};

class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(Field field, std::vector<Coord> coords) : field_(field), c_(std::move(coords)) {}

  Field field() const { return field_; }
  const std::vector<Coord>& coords() const { return c_; }
  std::uint64_t index() const;
  bool is_zero() const;
  bool is_one() const;

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement scaled(std::uint32_t k) const;

  FieldElement pow(std::uint64_t e) const;
  FieldElement inverse() const;
  // x^{p0^k}; negative k allowed.
  FieldElement frobenius(std::int64_t k) const;

  bool operator==(const FieldElement& o) const { return field_ == o.field_ && c_ == o.c_; }

  std::string to_string() const;

 private:
  Field field_;
  std::vector<Coord> c_;
};

// Orders elements by enumeration index.
struct EnumerationLess {
  bool operator()(const FieldElement& a, const FieldElement& b) const { return a.index() < b.index(); }
};

FieldElement frobenius(const FieldElement& x, std::int64_t k);

bool is_subfield(Field sub, Field sup);
// Compatible embedding along the tower: embed(embed(x, F), G) == embed(x, G).
FieldElement embed(const FieldElement& x, Field target);
// Inverse of embed; throws NotASubfield when x does not lie in the image.
FieldElement restrict_to(const FieldElement& x, Field sub);
std::optional<FieldElement> try_restrict(const FieldElement& x, Field sub);
// Matrix (target.degree() x sub.degree()) of the embedding sub -> target.
const Matrix& embedding_matrix(Field sub, Field target);

FieldElement trace(const FieldElement& x, Field sub);
Coord absolute_trace(const FieldElement& x);
// x^{(q-1)/2} mapped to {-1, 0, 1}. Throws EvenCharacteristic.
int quadratic_character(const FieldElement& x);

// Solution set of an F_p0-linear equation L(v) = rhs on a field.
struct SolutionSet {
  std::optional<FieldElement> particular;
  std::vector<FieldElement> kernel;
  bool empty() const { return !particular.has_value(); }
};

SolutionSet linear_solve(const Matrix& map, const FieldElement& rhs);

// All elements of the F_p0-span of `basis`, sorted by enumeration index.
std::vector<FieldElement> span_elements(Field field, std::span<const FieldElement> basis);

bool is_prime(std::uint64_t n);
// Checks p0^m <= guard without overflow.
bool within_guard(unsigned p0, unsigned m, std::uint64_t guard);

}  // namespace vdgv::gf

#endif  // VDGV_GF_FIELD_HPP
