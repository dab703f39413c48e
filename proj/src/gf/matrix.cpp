// Copyright 2026 The vdgv Authors.
// SPDX-License-Identifier: Apache-2.0

#include "vdgv/gf/matrix.hpp"

#include <cassert>
#include <utility>

namespace vdgv::gf {

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a % p;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  assert(r == 1);
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

std::vector<Coord> Matrix::apply(std::span<const Coord> v) const {
  assert(v.size() == cols_);
  std::vector<Coord> out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::uint64_t acc = 0;
    const Coord* row = &a_[i * cols_];
    for (std::size_t j = 0; j < cols_; ++j) {
      acc += std::uint64_t{row[j]} * v[j];
      if ((j & 63) == 63) acc %= p_;
    }
    out[i] = static_cast<Coord>(acc % p_);
  }
  return out;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  assert(cols_ == rhs.rows_);
  Matrix out(p_, rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const std::uint64_t aik = at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        out.at(i, j) = static_cast<Coord>((out.at(i, j) + aik * rhs.at(k, j)) % p_);
      }
    }
  }
  return out;
}

Matrix Matrix::transposed() const {
  Matrix t(p_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

namespace {

// Reduced row echelon form in place; returns pivot columns. When `aug` is
// set, the last column is treated as the right-hand side and never pivoted.
std::vector<std::size_t> rref(std::vector<std::vector<std::uint64_t>>& rows, std::size_t ncols, std::uint32_t p) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    const std::uint64_t inv = mod_inverse(static_cast<std::uint32_t>(rows[r][c]), p);
    for (auto& x : rows[r]) x = x * inv % p;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const std::uint64_t f = p - rows[i][c];
      for (std::size_t j = c; j < rows[i].size(); ++j) rows[i][j] = (rows[i][j] + f * rows[r][j]) % p;
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<std::vector<std::uint64_t>> to_rows(const Matrix& m, std::span<const Coord> rhs) {
  std::vector<std::vector<std::uint64_t>> rows(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    rows[i].resize(m.cols() + (rhs.empty() ? 0 : 1));
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m.at(i, j);
    if (!rhs.empty()) rows[i][m.cols()] = rhs[i] % m.prime();
  }
  return rows;
}

std::vector<std::vector<Coord>> kernel_from_rref(const std::vector<std::vector<std::uint64_t>>& rows,
                                                 const std::vector<std::size_t>& pivots, std::size_t ncols,
                                                 std::uint32_t p) {
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Coord>> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Coord> v(ncols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      v[pivots[r]] = static_cast<Coord>((p - rows[r][free]) % p);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

std::size_t Matrix::rank() const {
  auto rows = to_rows(*this, {});
  return rref(rows, cols_, p_).size();
}

std::vector<std::vector<Coord>> Matrix::kernel() const {
  auto rows = to_rows(*this, {});
  auto pivots = rref(rows, cols_, p_);
  return kernel_from_rref(rows, pivots, cols_, p_);
}

std::optional<AffineSolution> solve(const Matrix& m, std::span<const Coord> rhs) {
  assert(rhs.size() == m.rows());
  const std::uint32_t p = m.prime();
  std::vector<Coord> padded(rhs.begin(), rhs.end());
  if (padded.empty()) padded.assign(m.rows(), 0);
  auto rows = to_rows(m, padded);
  if (m.rows() == 0) rows.clear();
  auto pivots = rref(rows, m.cols(), p);
  for (std::size_t r = pivots.size(); r < rows.size(); ++r) {
    if (rows[r][m.cols()] != 0) return std::nullopt;
  }
  AffineSolution sol;
  sol.particular.assign(m.cols(), 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    sol.particular[pivots[r]] = static_cast<Coord>(rows[r][m.cols()]);
  }
  sol.kernel = kernel_from_rref(rows, pivots, m.cols(), p);
  return sol;
}

}  // namespace vdgv::gf
