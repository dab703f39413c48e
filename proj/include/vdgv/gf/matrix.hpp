// Copyright 2026 The vdgv Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef VDGV_GF_MATRIX_HPP
#define VDGV_GF_MATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace vdgv::gf {

using Coord = std::uint32_t;

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p);

// Dense matrix over the prime field Z/p, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::uint32_t p, std::size_t rows, std::size_t cols) : p_(p), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  std::uint32_t prime() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Coord& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  Coord at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  std::vector<Coord> apply(std::span<const Coord> v) const;
  Matrix operator*(const Matrix& rhs) const;
  bool operator==(const Matrix&) const = default;

  Matrix transposed() const;
  std::size_t rank() const;
  // Basis of {v : M v = 0}.
  std::vector<std::vector<Coord>> kernel() const;

 private:
  std::uint32_t p_ = 2;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Coord> a_;
};

// Full solution set of M v = rhs: one particular solution plus a kernel basis.
struct AffineSolution {
  std::vector<Coord> particular;
  std::vector<std::vector<Coord>> kernel;
};

std::optional<AffineSolution> solve(const Matrix& m, std::span<const Coord> rhs);

}  // namespace vdgv::gf

#endif  // VDGV_GF_MATRIX_HPP
