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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace discarr {

// Set of hyperplane positions 0..63 of an arrangement. Positions follow the
// arrangement's own order, which is the fixed total order used for every
// sorted index list and for lexicographic enumeration.
class IndexSet {
 public:
  constexpr IndexSet() = default;
  constexpr explicit IndexSet(std::uint64_t bits) : bits_(bits) {}
  IndexSet(std::initializer_list<std::size_t> positions);

  static IndexSet range(std::size_t n) {
    return IndexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  std::size_t size() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }
  bool contains(std::size_t pos) const { return (bits_ >> pos) & 1U; }
  bool subset_of(IndexSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  IndexSet with(std::size_t pos) const {
    return IndexSet(bits_ | (std::uint64_t{1} << pos));
  }
  IndexSet without(std::size_t pos) const {
    return IndexSet(bits_ & ~(std::uint64_t{1} << pos));
  }
  // Largest position, or -1 for the empty set.
  int max_position() const { return bits_ ? 63 - std::countl_zero(bits_) : -1; }

  std::vector<std::size_t> positions() const;

  friend IndexSet operator|(IndexSet a, IndexSet b) {
    return IndexSet(a.bits_ | b.bits_);
  }
  friend IndexSet operator&(IndexSet a, IndexSet b) {
    return IndexSet(a.bits_ & b.bits_);
  }
  friend IndexSet operator-(IndexSet a, IndexSet b) {
    return IndexSet(a.bits_ & ~b.bits_);
  }
  friend bool operator==(IndexSet a, IndexSet b) = default;

 private:
  std::uint64_t bits_ = 0;
};

// Lexicographic order on the sorted position lists.
bool lex_less(IndexSet a, IndexSet b);

struct LexLess {
  bool operator()(IndexSet a, IndexSet b) const { return lex_less(a, b); }
};

// All r-subsets of `universe`, in lexicographic order.
std::vector<IndexSet> subsets_of_size(IndexSet universe, std::size_t r);

// Calls f on every r-subset of `universe` in lexicographic order; stops
// early when f returns false. Returns false iff stopped early.
bool for_each_subset_of_size(IndexSet universe, std::size_t r,
                             const std::function<bool(IndexSet)>& f);

// Binomial coefficient; saturates rather than overflowing.
std::uint64_t binomial(std::uint64_t n, std::uint64_t r);

}  // namespace discarr
