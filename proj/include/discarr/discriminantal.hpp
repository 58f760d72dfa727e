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
#include <unordered_map>
#include <vector>

#include "discarr/arrangement.hpp"

namespace discarr {

// D_L with L a (k+1)-subset: the translations t in S = R^n for which the
// translated hyperplanes {normal(i) . x = t_i : i in L} share a point.
struct DiscriminantalHyperplane {
  IndexSet L;
  Vector normal;  // primitive-normalized, supported on L
};

// The normal alpha_L. For L = {i_1 < ... < i_{k+1}} coordinate i_t carries
// (-1)^(t+1) det(normals of L without i_t) and every other coordinate is
// zero; the result is primitive-normalized. alpha_L . t = 0 exactly when
// the hyperplanes of L translated by t meet.
Vector discriminantal_normal(const Arrangement& a, IndexSet L);

// One hyperplane per (k+1)-subset in lexicographic order. Requires a generic
// arrangement.
std::vector<DiscriminantalHyperplane> build_discriminantal(const Arrangement& a);

// Semantic membership test, independent of the minor formula: is the system
// normal(i) . x = t_i (i in L) solvable?
bool translation_in_DL(const Arrangement& a, IndexSet L, const Vector& t);

// B(n,k,A) together with its source arrangement and an index from L to the
// hyperplane id (position in lexicographic order).
class DiscriminantalArrangement {
 public:
  explicit DiscriminantalArrangement(Arrangement a);

  const Arrangement& base() const { return base_; }
  std::size_t size() const { return hyperplanes_.size(); }
  std::size_t ambient_dim() const { return base_.n(); }
  std::size_t k() const { return base_.k(); }

  const DiscriminantalHyperplane& operator[](std::size_t id) const {
    return hyperplanes_[id];
  }
  const std::vector<DiscriminantalHyperplane>& hyperplanes() const {
    return hyperplanes_;
  }

  // Throws ContractViolation when L is not a (k+1)-subset.
  std::size_t id_of(IndexSet L) const;

 private:
  Arrangement base_;
  std::vector<DiscriminantalHyperplane> hyperplanes_;
  std::unordered_map<std::uint64_t, std::size_t> ids_;
};

}  // namespace discarr
