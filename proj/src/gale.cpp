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

#include "discarr/gale.hpp"

#include "discarr/errors.hpp"

namespace discarr {

PointConfiguration gale_diagram(const Arrangement& a) {
  const Matrix normals = a.normal_matrix();
  if (rank(normals) != a.k()) {
    throw DegenerateInput("normals do not span k-space");
  }
  const Matrix kernel = right_kernel_basis(normals);  // n x (n-k)
  PointConfiguration p;
  p.dimension = kernel.cols();
  p.labels = a.labels();
  std::vector<Vector> rows;
  for (std::size_t c = 0; c < kernel.cols(); ++c) {
    rows.push_back(primitive_normalize(kernel.column(c)));
  }
  const Matrix b = Matrix::from_rows(rows);
  for (std::size_t i = 0; i < a.n(); ++i) p.points.push_back(b.column(i));
  return p;
}

Arrangement as_arrangement(const PointConfiguration& p) {
  return Arrangement(p.dimension, p.points, p.labels);
}

bool in_general_position(const PointConfiguration& p) {
  return for_each_subset_of_size(
      IndexSet::range(p.n()), p.dimension, [&](IndexSet s) {
        std::vector<Vector> cols;
        for (auto i : s.positions()) cols.push_back(p.points[i]);
        return !det(Matrix::from_columns(cols)).is_zero();
      });
}

Vector span_normal(std::span<const Vector> points) {
  if (points.empty()) throw DimensionError("span_normal needs points");
  const std::size_t dim = points.front().size();
  if (points.size() + 1 != dim) {
    throw DimensionError("span_normal needs dimension-1 points");
  }
  const Matrix kernel = right_kernel_basis(Matrix::from_rows(points));
  if (kernel.cols() != 1) throw DegenerateInput("points are dependent");
  return primitive_normalize(kernel.column(0));
}

std::vector<AdjointHyperplane> adjoint_arrangement(
    const PointConfiguration& p) {
  if (!in_general_position(p)) {
    throw DegenerateInput("points are not in general position");
  }
  std::vector<AdjointHyperplane> out;
  for (IndexSet j : subsets_of_size(IndexSet::range(p.n()), p.dimension - 1)) {
    std::vector<Vector> pts;
    for (auto i : j.positions()) pts.push_back(p.points[i]);
    out.push_back({j, span_normal(pts)});
  }
  return out;
}

bool same_row_space(const Matrix& lhs, const Matrix& rhs) {
  if (lhs.cols() != rhs.cols()) return false;
  std::vector<Vector> stacked;
  for (std::size_t r = 0; r < lhs.rows(); ++r) stacked.push_back(lhs.row(r));
  for (std::size_t r = 0; r < rhs.rows(); ++r) stacked.push_back(rhs.row(r));
  const std::size_t rl = rank(lhs);
  return rl == rank(rhs) && rl == rank(stacked);
}

FalkComparison::FalkComparison(const Arrangement& a)
    : b_(a), gale_(gale_diagram(a)) {
  adjoint_.reserve(b_.size());
  for (const auto& h : b_.hyperplanes()) {
    std::vector<Vector> pts;
    for (auto i : (a.all() - h.L).positions()) pts.push_back(gale_.points[i]);
    // n = k+1: the Gale points live on a line and the only hyperplane is 0.
    adjoint_.push_back(pts.empty() ? Vector{Scalar(1)} : span_normal(pts));
  }
}

std::size_t FalkComparison::discriminantal_rank(
    std::span<const std::size_t> ids) const {
  std::vector<Vector> rows;
  for (auto id : ids) rows.push_back(b_[id].normal);
  return rows.empty() ? 0 : rank(rows);
}

std::size_t FalkComparison::adjoint_rank(
    std::span<const std::size_t> ids) const {
  std::vector<Vector> rows;
  for (auto id : ids) rows.push_back(adjoint_[id]);
  return rows.empty() ? 0 : rank(rows);
}

bool falk_rank_equivalence(const Arrangement& a,
                           std::span<const std::vector<IndexSet>> families) {
  const FalkComparison falk(a);
  for (const auto& family : families) {
    std::vector<std::size_t> ids;
    for (auto L : family) ids.push_back(falk.discriminantal().id_of(L));
    if (!falk.agrees(ids)) return false;
  }
  return true;
}

}  // namespace discarr
