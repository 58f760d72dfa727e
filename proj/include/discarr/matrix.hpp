// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "discarr/scalar.hpp"

namespace discarr {

using Vector = std::vector<Scalar>;

// Dense row-major matrix of exact scalars.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix from_rows(std::span<const Vector> rows);
  static Matrix from_columns(std::span<const Vector> columns);
  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) {
    return entries_[r * cols_ + c];
  }
  const Scalar& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  Matrix transpose() const;
  bool is_zero() const;

  // Common radicand of the entries (0 for Q); throws FieldMismatch.
  long radicand() const;

  friend Matrix operator*(const Matrix& lhs, const Matrix& rhs);
  friend Vector operator*(const Matrix& lhs, const Vector& rhs);
  friend bool operator==(const Matrix& lhs, const Matrix& rhs);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> entries_;
};

Scalar dot(std::span<const Scalar> lhs, std::span<const Scalar> rhs);
bool is_zero(std::span<const Scalar> v);

// Determinant by fraction-free (Bareiss) elimination. Rows are first scaled
// to clear rational denominators so every intermediate is an integer (or an
// algebraic integer in Z[√d]); every division performed is exact.
Scalar det(const Matrix& m);

// Rank by the same fraction-free elimination, pivoting on the first nonzero
// entry in column order.
std::size_t rank(const Matrix& m);
std::size_t rank(std::span<const Vector> rows);

// Columns form a basis of {x : m x = 0}: one column per free variable of the
// reduced row echelon form, with that variable set to 1.
Matrix right_kernel_basis(const Matrix& m);

// Some x with m x = b (free variables set to 0), or nullopt if inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

// Canonical representative of span{v}. Denominators cleared, content
// divided out, and the first nonzero coordinate made positive (for Q(√d):
// a > 0, or a = 0 and b > 0). Throws DegenerateInput on the zero vector.
Vector primitive_normalize(Vector v);

// v divided by its first nonzero coordinate: equal for all nonzero scalar
// multiples over the whole field. Zero vectors are returned unchanged.
Vector leading_one(Vector v);

// Lexicographic order on vectors under key_compare.
struct VectorKeyLess {
  bool operator()(const Vector& lhs, const Vector& rhs) const;
};

// Incrementally maintained reduced row echelon basis of a row space.
// reduce() returns a canonical representative of v modulo the span: two
// vectors are congruent modulo the span iff their reductions agree.
class RowSpan {
 public:
  explicit RowSpan(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }

  Vector reduce(Vector v) const;
  bool contains(const Vector& v) const;
  // Returns true when v was independent of the current span.
  bool insert(const Vector& v);

 private:
  std::size_t dim_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace discarr
