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

#include "discarr/matrix.hpp"

#include <algorithm>
#include <utility>

#include "discarr/errors.hpp"

namespace discarr {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

Matrix Matrix::from_rows(std::span<const Vector> rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionError("ragged row list");
    std::copy(rows[r].begin(), rows[r].end(), m.entries_.begin() + r * cols);
  }
  return m;
}

Matrix Matrix::from_columns(std::span<const Vector> columns) {
  const std::size_t rows = columns.empty() ? 0 : columns.front().size();
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw DimensionError("ragged column list");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(entries_.begin() + r * cols_,
                entries_.begin() + (r + 1) * cols_);
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Scalar& s) { return s.is_zero(); });
}

long Matrix::radicand() const {
  long d = 0;
  for (const auto& e : entries_) {
    if (e.radicand() == 0) continue;
    if (d != 0 && d != e.radicand()) {
      throw FieldMismatch("matrix mixes radicands");
    }
    d = e.radicand();
  }
  return d;
}

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
  if (lhs.cols_ != rhs.rows_) throw DimensionError("matrix product shape");
  Matrix out(lhs.rows_, rhs.cols_);
  for (std::size_t i = 0; i < lhs.rows_; ++i) {
    for (std::size_t k = 0; k < lhs.cols_; ++k) {
      const Scalar& a = lhs(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        if (!rhs(k, j).is_zero()) out(i, j) += a * rhs(k, j);
      }
    }
  }
  return out;
}

Vector operator*(const Matrix& lhs, const Vector& rhs) {
  if (lhs.cols_ != rhs.size()) throw DimensionError("matrix-vector shape");
  Vector out(lhs.rows_);
  for (std::size_t i = 0; i < lhs.rows_; ++i) {
    out[i] = dot(std::span(lhs.entries_).subspan(i * lhs.cols_, lhs.cols_),
                 rhs);
  }
  return out;
}

bool operator==(const Matrix& lhs, const Matrix& rhs) {
  return lhs.rows_ == rhs.rows_ && lhs.cols_ == rhs.cols_ &&
         lhs.entries_ == rhs.entries_;
}

Scalar dot(std::span<const Scalar> lhs, std::span<const Scalar> rhs) {
  if (lhs.size() != rhs.size()) throw DimensionError("dot product length");
  Scalar acc;
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    if (!lhs[i].is_zero() && !rhs[i].is_zero()) acc += lhs[i] * rhs[i];
  }
  return acc;
}

bool is_zero(std::span<const Scalar> v) {
  return std::all_of(v.begin(), v.end(),
                     [](const Scalar& s) { return s.is_zero(); });
}

namespace {

// Multiplies the row by the lcm of all denominators; returns that lcm.
BigInt clear_row_denominators(Matrix& m, std::size_t r) {
  BigInt l = 1;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    const Scalar& e = m(r, c);
    l = lcm(l, e.a().get_den());
    if (e.b() != 0) l = lcm(l, e.b().get_den());
  }
  if (l != 1) {
    const Rational factor(l);
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c).scale(factor);
  }
  return l;
}

struct BareissResult {
  std::size_t rank = 0;
  int sign = 1;
};

// In-place fraction-free row echelon form.
BareissResult bareiss(Matrix& m) {
  BareissResult out;
  Scalar prev = 1;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = c; j < cols; ++j) std::swap(m(p, j), m(r, j));
      out.sign = -out.sign;
    }
    const Scalar pivot = m(r, c);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const Scalar lead = m(i, c);
      for (std::size_t j = c + 1; j < cols; ++j) {
        Scalar v = m(i, j) * pivot;
        if (!lead.is_zero() && !m(r, j).is_zero()) v -= lead * m(r, j);
        m(i, j) = v / prev;
      }
      m(i, c) = 0;
    }
    prev = pivot;
    ++r;
  }
  out.rank = r;
  return out;
}

struct Rref {
  Matrix m;
  std::vector<std::size_t> pivots;
};

Rref rref(Matrix m) {
  Rref out;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = c; j < cols; ++j) std::swap(m(p, j), m(r, j));
    }
    const Scalar inv = m(r, c).inverse();
    for (std::size_t j = c; j < cols; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const Scalar factor = m(i, c);
      for (std::size_t j = c; j < cols; ++j) {
        if (!m(r, j).is_zero()) m(i, j) -= factor * m(r, j);
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.m = std::move(m);
  return out;
}

}  // namespace

Scalar det(const Matrix& m) {
  if (m.rows() != m.cols()) {
    throw DimensionError("determinant of a non-square matrix");
  }
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Matrix work = m;
  BigInt scale = 1;
  for (std::size_t r = 0; r < n; ++r) scale *= clear_row_denominators(work, r);
  const BareissResult res = bareiss(work);
  if (res.rank < n) return Scalar(0).in_field(m.radicand());
  Scalar d = work(n - 1, n - 1);
  if (res.sign < 0) d = -d;
  if (scale != 1) d.scale(Rational(1) / Rational(scale));
  return d;
}

std::size_t rank(const Matrix& m) {
  Matrix work = m;
  for (std::size_t r = 0; r < work.rows(); ++r) clear_row_denominators(work, r);
  return bareiss(work).rank;
}

std::size_t rank(std::span<const Vector> rows) {
  return rank(Matrix::from_rows(rows));
}

Matrix right_kernel_basis(const Matrix& m) {
  const Rref red = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : red.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < cols; ++c)
    if (!is_pivot[c]) free.push_back(c);
  Matrix basis(cols, free.size());
  for (std::size_t f = 0; f < free.size(); ++f) {
    basis(free[f], f) = 1;
    for (std::size_t i = 0; i < red.pivots.size(); ++i) {
      basis(red.pivots[i], f) = -red.m(i, free[f]);
    }
  }
  return basis;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw DimensionError("right-hand side length");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  const Rref red = rref(std::move(aug));
  if (!red.pivots.empty() && red.pivots.back() == m.cols()) return std::nullopt;
  Vector x(m.cols());
  for (std::size_t i = 0; i < red.pivots.size(); ++i) {
    x[red.pivots[i]] = red.m(i, m.cols());
  }
  return x;
}

Vector primitive_normalize(Vector v) {
  auto first = std::find_if(v.begin(), v.end(),
                            [](const Scalar& s) { return !s.is_zero(); });
  if (first == v.end()) {
    throw DegenerateInput("cannot normalize the zero vector");
  }
  BigInt l = 1;
  for (const auto& e : v) {
    l = lcm(l, e.a().get_den());
    if (e.b() != 0) l = lcm(l, e.b().get_den());
  }
  BigInt g = 0;
  for (const auto& e : v) {
    const Rational a = e.a() * l;
    g = gcd(g, a.get_num());
    if (e.b() != 0) {
      const Rational b = e.b() * l;
      g = gcd(g, b.get_num());
    }
  }
  Rational factor(l, g);
  factor.canonicalize();
  const Scalar& lead = *first;
  if (sgn(lead.a()) < 0 || (lead.a() == 0 && sgn(lead.b()) < 0)) {
    factor = -factor;
  }
  for (auto& e : v) e.scale(factor);
  return v;
}

Vector leading_one(Vector v) {
  auto first = std::find_if(v.begin(), v.end(),
                            [](const Scalar& s) { return !s.is_zero(); });
  if (first == v.end()) return v;
  const Scalar inv = first->inverse();
  for (auto it = first; it != v.end(); ++it) {
    if (!it->is_zero()) *it *= inv;
  }
  return v;
}

bool VectorKeyLess::operator()(const Vector& lhs, const Vector& rhs) const {
  const std::size_t n = std::min(lhs.size(), rhs.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (const int c = key_compare(lhs[i], rhs[i])) return c < 0;
  }
  return lhs.size() < rhs.size();
}

Vector RowSpan::reduce(Vector v) const {
  if (v.size() != dim_) throw DimensionError("vector length vs span dimension");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const std::size_t p = pivots_[i];
    if (v[p].is_zero()) continue;
    const Scalar factor = v[p];
    const Vector& row = rows_[i];
    for (std::size_t j = 0; j < dim_; ++j) {
      if (!row[j].is_zero()) v[j] -= factor * row[j];
    }
  }
  return v;
}

bool RowSpan::contains(const Vector& v) const { return is_zero(reduce(v)); }

bool RowSpan::insert(const Vector& v) {
  Vector r = reduce(v);
  auto first = std::find_if(r.begin(), r.end(),
                            [](const Scalar& s) { return !s.is_zero(); });
  if (first == r.end()) return false;
  const std::size_t p = static_cast<std::size_t>(first - r.begin());
  r = leading_one(std::move(r));
  for (auto& row : rows_) {
    if (row[p].is_zero()) continue;
    const Scalar factor = row[p];
    for (std::size_t j = 0; j < dim_; ++j) {
      if (!r[j].is_zero()) row[j] -= factor * r[j];
    }
  }
  rows_.push_back(std::move(r));
  pivots_.push_back(p);
  return true;
}

}  // namespace discarr
