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
#include <string>
#include <vector>

#include "discarr/index_set.hpp"
#include "discarr/matrix.hpp"

namespace discarr {

// A central arrangement of n hyperplanes in k-space, given by its normals.
// Hyperplane i is {x : normal(i) . x = 0}; its translate by t_i is
// {x : normal(i) . x = t_i}.
//
// Construction validates shape and labels but not genericity: generators
// test candidates with is_generic() and retry.
class Arrangement {
 public:
  // Labels default to 1..n. All normals are re-tagged into one common field.
  Arrangement(std::size_t k, std::vector<Vector> normals,
              std::vector<int> labels = {});

  std::size_t k() const { return k_; }
  std::size_t n() const { return normals_.size(); }
  long radicand() const { return radicand_; }

  const std::vector<Vector>& normals() const { return normals_; }
  const Vector& normal(std::size_t pos) const { return normals_[pos]; }
  const std::vector<int>& labels() const { return labels_; }
  int label(std::size_t pos) const { return labels_[pos]; }

  // Throws ContractViolation for unknown labels.
  std::size_t position_of(int label) const;
  IndexSet index_set(std::span<const int> labels) const;
  std::vector<int> labels_of(IndexSet s) const;
  std::string format(IndexSet s) const;

  IndexSet all() const { return IndexSet::range(n()); }

  // k x n matrix whose columns are the normals.
  Matrix normal_matrix() const;

 private:
  std::size_t k_;
  std::vector<Vector> normals_;
  std::vector<int> labels_;
  long radicand_ = 0;
};

// True iff every k normals are linearly independent.
bool is_generic(const Arrangement& a);

// The arrangement without the hyperplane carrying `label`; other labels and
// their order are kept.
Arrangement delete_hyperplane(const Arrangement& a, int label);

}  // namespace discarr
