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

#include "discarr/arrangement.hpp"

#include <algorithm>
#include <set>

#include "discarr/errors.hpp"

namespace discarr {

Arrangement::Arrangement(std::size_t k, std::vector<Vector> normals,
                         std::vector<int> labels)
    : k_(k), normals_(std::move(normals)), labels_(std::move(labels)) {
  const std::size_t n = normals_.size();
  if (k_ < 1) throw DimensionError("arrangement dimension must be >= 1");
  if (n <= k_) {
    throw DimensionError("need more hyperplanes than the dimension (n=" +
                         std::to_string(n) + ", k=" + std::to_string(k_) + ")");
  }
  if (n > 64) throw DimensionError("at most 64 hyperplanes are supported");
  if (labels_.empty()) {
    labels_.resize(n);
    for (std::size_t i = 0; i < n; ++i) labels_[i] = static_cast<int>(i + 1);
  }
  if (labels_.size() != n) throw DimensionError("one label per hyperplane");
  if (std::set<int>(labels_.begin(), labels_.end()).size() != n) {
    throw ContractViolation("hyperplane labels must be distinct");
  }
  for (const auto& v : normals_) {
    if (v.size() != k_) throw DimensionError("normal of wrong length");
    if (is_zero(v)) throw DegenerateInput("zero normal vector");
    for (const auto& e : v) {
      if (e.radicand() == 0) continue;
      if (radicand_ != 0 && radicand_ != e.radicand()) {
        throw FieldMismatch("normals mix radicands");
      }
      radicand_ = e.radicand();
    }
  }
  if (radicand_ != 0) {
    for (auto& v : normals_)
      for (auto& e : v) e = e.in_field(radicand_);
  }
}

std::size_t Arrangement::position_of(int label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) {
    throw ContractViolation("unknown hyperplane label " + std::to_string(label));
  }
  return static_cast<std::size_t>(it - labels_.begin());
}

IndexSet Arrangement::index_set(std::span<const int> labels) const {
  IndexSet s;
  for (int l : labels) {
    const std::size_t p = position_of(l);
    if (s.contains(p)) {
      throw ContractViolation("repeated label " + std::to_string(l));
    }
    s = s.with(p);
  }
  return s;
}

std::vector<int> Arrangement::labels_of(IndexSet s) const {
  std::vector<int> out;
  for (auto p : s.positions()) out.push_back(labels_.at(p));
  return out;
}

std::string Arrangement::format(IndexSet s) const {
  std::string out = "{";
  bool first = true;
  for (int l : labels_of(s)) {
    if (!first) out += ",";
    out += std::to_string(l);
    first = false;
  }
  return out + "}";
}

Matrix Arrangement::normal_matrix() const {
  return Matrix::from_columns(normals_);
}

bool is_generic(const Arrangement& a) {
  return for_each_subset_of_size(a.all(), a.k(), [&](IndexSet s) {
    std::vector<Vector> cols;
    for (auto p : s.positions()) cols.push_back(a.normal(p));
    return !det(Matrix::from_columns(cols)).is_zero();
  });
}

Arrangement delete_hyperplane(const Arrangement& a, int label) {
  const std::size_t pos = a.position_of(label);
  std::vector<Vector> normals;
  std::vector<int> labels;
  for (std::size_t i = 0; i < a.n(); ++i) {
    if (i == pos) continue;
    normals.push_back(a.normal(i));
    labels.push_back(a.label(i));
  }
  return Arrangement(a.k(), std::move(normals), std::move(labels));
}

}  // namespace discarr
