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
#include <span>
#include <vector>

#include "discarr/discriminantal.hpp"

namespace discarr {

// n labelled vectors beta_1..beta_n in `dimension`-space.
struct PointConfiguration {
  std::size_t dimension = 0;
  std::vector<Vector> points;
  std::vector<int> labels;

  std::size_t n() const { return points.size(); }
  // dimension x n matrix with the points as columns.
  Matrix matrix() const { return Matrix::from_columns(points); }
};

// Points whose row space is the orthogonal complement of the row space of
// the normals: rows are the canonical kernel basis of the k x n normal
// matrix, each primitive-normalized. Throws DegenerateInput unless the
// normals have rank k.
PointConfiguration gale_diagram(const Arrangement& a);

// Reads the points as hyperplane normals (so Gale duality can be applied
// twice).
Arrangement as_arrangement(const PointConfiguration& p);

// True iff every `dimension` of the points are linearly independent.
bool in_general_position(const PointConfiguration& p);

// Primitive normal of the hyperplane spanned by dimension-1 independent
// points. DegenerateInput if they are dependent.
Vector span_normal(std::span<const Vector> points);

struct AdjointHyperplane {
  IndexSet J;  // the dimension-1 points spanning it
  Vector normal;
};

// Every hyperplane spanned by dimension-1 of the points, lexicographic in J.
// Throws DegenerateInput unless the points are in general position.
std::vector<AdjointHyperplane> adjoint_arrangement(const PointConfiguration& p);

// True iff the two matrices have equal row spaces.
bool same_row_space(const Matrix& lhs, const Matrix& rhs);

// Pairs every D_L of B(n,k,A) with the adjoint hyperplane spanned by the
// Gale points outside L, so rank functions can be compared family by family.
class FalkComparison {
 public:
  explicit FalkComparison(const Arrangement& a);

  const DiscriminantalArrangement& discriminantal() const { return b_; }
  const PointConfiguration& gale() const { return gale_; }
  const Vector& adjoint_normal(std::size_t id) const { return adjoint_[id]; }

  std::size_t discriminantal_rank(std::span<const std::size_t> ids) const;
  std::size_t adjoint_rank(std::span<const std::size_t> ids) const;
  bool agrees(std::span<const std::size_t> ids) const {
    return discriminantal_rank(ids) == adjoint_rank(ids);
  }

 private:
  DiscriminantalArrangement b_;
  PointConfiguration gale_;
  std::vector<Vector> adjoint_;  // indexed by hyperplane id of b_
};

// rank{alpha_L : L in F} == rank{gamma_([n] \ L) : L in F} for every family.
bool falk_rank_equivalence(const Arrangement& a,
                           std::span<const std::vector<IndexSet>> families);

}  // namespace discarr
