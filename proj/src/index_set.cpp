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

#include "discarr/index_set.hpp"

#include <algorithm>
#include <limits>

namespace discarr {

IndexSet::IndexSet(std::initializer_list<std::size_t> positions) {
  for (auto p : positions) bits_ |= std::uint64_t{1} << p;
}

std::vector<std::size_t> IndexSet::positions() const {
  std::vector<std::size_t> out;
  out.reserve(size());
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
  }
  return out;
}

bool lex_less(IndexSet a, IndexSet b) {
  std::uint64_t x = a.bits();
  std::uint64_t y = b.bits();
  while (x != 0 && y != 0) {
    const int px = std::countr_zero(x);
    const int py = std::countr_zero(y);
    if (px != py) return px < py;
    x &= x - 1;
    y &= y - 1;
  }
  return x == 0 && y != 0;
}

bool for_each_subset_of_size(IndexSet universe, std::size_t r,
                             const std::function<bool(IndexSet)>& f) {
  const auto pos = universe.positions();
  const std::size_t n = pos.size();
  if (r > n) return true;
  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  while (true) {
    std::uint64_t bits = 0;
    for (auto i : idx) bits |= std::uint64_t{1} << pos[i];
    if (!f(IndexSet(bits))) return false;
    // Advance to the next combination in lexicographic order.
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == n - r + i - 1) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<IndexSet> subsets_of_size(IndexSet universe, std::size_t r) {
  std::vector<IndexSet> out;
  for_each_subset_of_size(universe, r, [&](IndexSet s) {
    out.push_back(s);
    return true;
  });
  return out;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    acc = acc * (n - r + i) / i;
    if (acc > std::numeric_limits<std::uint64_t>::max()) {
      return std::numeric_limits<std::uint64_t>::max();
    }
  }
  return static_cast<std::uint64_t>(acc);
}

}  // namespace discarr
