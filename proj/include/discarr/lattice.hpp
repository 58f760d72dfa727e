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

// An element X of the intersection lattice of B(n,k,A), identified by its
// closure: the ids of every D_L containing X.
struct Intersection {
  std::vector<std::size_t> closure;  // sorted hyperplane ids
  std::size_t rank = 0;
  std::vector<std::size_t> generators;  // ids whose meet produced X

  std::size_t multiplicity() const { return closure.size(); }

  friend bool operator==(const Intersection& a, const Intersection& b) {
    return a.closure == b.closure;
  }
};

// The components D_{S_1}, ..., D_{S_m} of X and a_X = sum (|S_i| - k).
struct CanonicalPresentation {
  std::vector<IndexSet> components;  // lexicographic order
  std::size_t athanasiadis_rank = 0;

  IndexSet support() const;
};

// All L with alpha_L in span{alpha_L' : L' in gens}. Throws ContractViolation
// on an empty generator list.
Intersection closure(const DiscriminantalArrangement& b,
                     std::span<const std::size_t> gens);
Intersection closure(const DiscriminantalArrangement& b,
                     std::span<const IndexSet> gens);

// The index sets L of the hyperplanes containing X.
std::vector<IndexSet> closure_sets(const DiscriminantalArrangement& b,
                                   const Intersection& x);

// Maximal sets S (|S| >= k+1) all of whose (k+1)-subsets are hyperedges,
// for a (k+1)-uniform hypergraph. Lexicographic order.
std::vector<IndexSet> maximal_complete_sets(std::span<const IndexSet> edges,
                                            std::size_t k);

CanonicalPresentation components(const DiscriminantalArrangement& b,
                                 const Intersection& x);

// Every intersection of rank 1..max_rank, each exactly once, ordered by rank
// and then by the lexicographic order of the closure id lists.
std::vector<Intersection> enumerate_intersections(
    const DiscriminantalArrangement& b, std::size_t max_rank);

// Same enumeration restricted to the hyperplanes with the given ids.
std::vector<Intersection> enumerate_within(const DiscriminantalArrangement& b,
                                           std::span<const std::size_t> pool,
                                           std::size_t max_rank);

// Every Y strictly containing X, i.e. the lattice of the hyperplanes of
// closure(X) below rank(X).
std::vector<Intersection> intersections_above(
    const DiscriminantalArrangement& b, const Intersection& x);

}  // namespace discarr
