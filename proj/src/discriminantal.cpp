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

#include "discarr/discriminantal.hpp"

#include "discarr/errors.hpp"

namespace discarr {

Vector discriminantal_normal(const Arrangement& a, IndexSet L) {
  const std::size_t k = a.k();
  if (L.size() != k + 1) {
    throw DimensionError("|L| must be k+1 = " + std::to_string(k + 1));
  }
  if (!L.subset_of(a.all())) throw ContractViolation("L outside [n]");
  const auto pos = L.positions();
  Vector normal(a.n());
  if (a.radicand() != 0) {
    for (auto& e : normal) e = e.in_field(a.radicand());
  }
  for (std::size_t t = 0; t <= k; ++t) {
    Matrix minor(k, k);
    std::size_t col = 0;
    for (std::size_t s = 0; s <= k; ++s) {
      if (s == t) continue;
      for (std::size_t r = 0; r < k; ++r) minor(r, col) = a.normal(pos[s])[r];
      ++col;
    }
    Scalar d = det(minor);
    normal[pos[t]] = (t % 2 == 0) ? d : -d;
  }
  if (is_zero(normal)) {
    throw DegenerateInput("all minors vanish for L = " + a.format(L));
  }
  return primitive_normalize(std::move(normal));
}

std::vector<DiscriminantalHyperplane> build_discriminantal(
    const Arrangement& a) {
  if (!is_generic(a)) throw NonGeneric("arrangement is not generic");
  std::vector<DiscriminantalHyperplane> out;
  for (IndexSet L : subsets_of_size(a.all(), a.k() + 1)) {
    out.push_back({L, discriminantal_normal(a, L)});
  }
  return out;
}

bool translation_in_DL(const Arrangement& a, IndexSet L, const Vector& t) {
  if (L.size() != a.k() + 1) throw DimensionError("|L| must be k+1");
  if (t.size() != a.n()) throw DimensionError("translation must have n entries");
  std::vector<Vector> rows;
  Vector rhs;
  for (auto p : L.positions()) {
    rows.push_back(a.normal(p));
    rhs.push_back(t[p]);
  }
  return solve(Matrix::from_rows(rows), rhs).has_value();
}

DiscriminantalArrangement::DiscriminantalArrangement(Arrangement a)
    : base_(std::move(a)), hyperplanes_(build_discriminantal(base_)) {
  for (std::size_t id = 0; id < hyperplanes_.size(); ++id) {
    ids_.emplace(hyperplanes_[id].L.bits(), id);
  }
}

std::size_t DiscriminantalArrangement::id_of(IndexSet L) const {
  auto it = ids_.find(L.bits());
  if (it == ids_.end()) {
    throw ContractViolation("not a hyperplane of B: " + base_.format(L));
  }
  return it->second;
}

}  // namespace discarr
