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

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "discarr/classify.hpp"

namespace discarr {

// Deterministic generator behind every seeded construction. The engine is
// std::mt19937_64, whose output sequence is fixed by the standard; ranges
// are mapped by rejection sampling, so streams are identical on every
// platform.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  // Uniform integer in [lo, hi].
  long uniform(long lo, long hi);
  long nonzero(long lo, long hi);
  // Integer vector with entries in [-1000, 1000], not the zero vector.
  Vector integer_vector(std::size_t dim);

 private:
  std::mt19937_64 engine_;
};

inline constexpr std::size_t kRetryCap = 64;
inline constexpr long kCoordinateBound = 1000;

// What re-running the lattice and classification on a construction must
// reproduce.
struct ExpectedCertificate {
  std::vector<IndexSet> presentation;  // components, lexicographic
  std::size_t rank = 0;
  std::size_t a = 0;
  std::size_t multiplicity = 0;
  IntersectionClass cls = IntersectionClass::VeryGeneric;
  bool minimal = false;
  bool sparse = false;
  bool dense = false;
};

struct ConstructionResult {
  std::string family;
  Arrangement arrangement;
  std::vector<IndexSet> target;  // generators of the distinguished X
  ExpectedCertificate expected;
  std::uint64_t seed = 0;
  std::size_t retries_used = 0;
  // dense_uk only: the translation t_i = offset of the affine hull H'_i
  // along alpha_i, which lies on every D_L with L in U_k.
  std::optional<Vector> witness;
};

// K_{k,i} = [k+1] \ {i} + {-i} and K_{k,-i} = [+-(k+1)] \ K_{k,i} for
// i = 1..k, listed as K_{k,1..k} then K_{k,-1..-k}; each set sorted
// ascending. Requires k >= 2.
std::vector<std::vector<int>> u_k_family(int k);

// The family dense_uk realizes: u_k_family(k) for k >= 3. For k = 2 the
// literal U_2 puts labels 2 and -1 (and 1 and -2) in the same two sets, so
// H'_2 = H'_-1 for every choice of points; Crapo's family
// {-1,2,3}, {1,-2,3}, {1,2,-3}, {-1,-2,-3} (pairwise meeting in one label)
// is used instead.
std::vector<std::vector<int>> dense_family(int k);

// Labels -(k+1)..-1, 1..k+1 in that order.
std::vector<int> signed_labels(int k);

// 2k+2 hyperplanes in k-space indexed by [+-(k+1)] whose discriminantal
// arrangement contains X = meet of D_L over dense_family(k): that family as
// canonical presentation,
// rank k+1, a_X = 2k, minimal and dense. Normals are the normals of affine
// hulls of seeded points v_j, j in [+-k].
ConstructionResult dense_uk(int k, std::uint64_t seed);

// 2m planes H_i = g^i H_0 in 3-space, H_0 = {z = p x}, g the rotation by
// pi/m about the z axis; target S_i = {i, i+1, i+m, i+m+1} (mod 2m).
// Supported m: 3 and 6 over Q(sqrt 3), 4 over Q(sqrt 2).
ConstructionResult a2m(int m, const Rational& p);

// For i = 1..m: det(a_{i+1} a_{i+m} a_{i+m+1}), det(a_i a_{i+m} a_{i+m+1}),
// det(a_i a_{i+1} a_{i+m+1}), det(a_i a_{i+1} a_{i+m}), indices mod 2m.
std::vector<std::array<Scalar, 4>> a2m_determinants(const Arrangement& a,
                                                    int m);

// The literal 8 hyperplanes in 5-space with the rank 2, multiplicity 4
// intersection D_123456 . D_123478 . D_125678 . D_345678.
ConstructionResult example_8_5();

// Gale dual of beta_i = (x_i, y_i, 1), beta_{i+n/2} = (-x_i, -y_i, 1): a
// rank 2 intersection of multiplicity n/2 in B(n, n-3, A). n even, n >= 6.
ConstructionResult rank2_symmetric(int n, std::uint64_t seed);

// Gale dual of n/(n-k-1) groups of n-k-1 points, each group on a hyperplane
// through a common codimension-2 subspace: a rank 2 intersection of
// multiplicity n/(n-k-1). Requires (n-k-1) | n and n-2 > k > 1.
ConstructionResult rank2_general(int n, int k, std::uint64_t seed);

struct VerificationOutcome {
  bool ok = false;
  std::vector<std::string> mismatches;
  Intersection intersection;
  ClassificationReport report;
};

// Rebuilds B(n,k,A), takes the closure of the target and compares the
// classification against the expected certificate field by field.
VerificationOutcome verify(const ConstructionResult& c);

}  // namespace discarr
