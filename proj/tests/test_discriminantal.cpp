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

#include "discarr/constructions.hpp"
#include "discarr/discriminantal.hpp"
#include "discarr/errors.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace discarr;

namespace {

Vector ints(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.push_back(Scalar(x));
  return v;
}

bool proportional(const Vector& a, const Vector& b) {
  return rank(std::vector<Vector>{a, b}) == 1;
}

}  // namespace

TEST_CASE("normals of the 8 hyperplane example match the printed rows") {
  const Arrangement a = example_8_5().arrangement;
  REQUIRE(is_generic(a));
  const std::vector<std::pair<std::vector<int>, Vector>> expected{
      {{1, 2, 3, 4, 5, 6}, ints({1, 1, 1, 1, 1, -1, 0, 0})},
      {{1, 2, 3, 4, 7, 8}, ints({1, 1, -1, -1, 0, 0, 1, -1})},
      {{1, 2, 5, 6, 7, 8}, ints({-8, -8, 0, 0, -4, 4, -4, 4})},
      {{3, 4, 5, 6, 7, 8}, ints({0, 0, 8, 8, 4, -4, -4, 4})}};
  for (const auto& [labels, row] : expected) {
    const Vector n = discriminantal_normal(a, a.index_set(labels));
    CHECK(proportional(n, row));
    CHECK(n == primitive_normalize(row));
  }
}

TEST_CASE("normals agree with cofactor expansion") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const std::size_t k = 1 + seed % 4;
    const Arrangement a = fixture::random_generic(k + 3, k, seed);
    const DiscriminantalArrangement b(a);
    CHECK(b.size() == binomial(a.n(), k + 1));
    for (const auto& h : b.hyperplanes()) {
      const Vector raw = oracle::discriminantal_normal(a, h.L);
      CHECK(h.normal == primitive_normalize(raw));
      for (std::size_t i = 0; i < a.n(); ++i) {
        CHECK(h.normal[i].is_zero() != h.L.contains(i));
      }
    }
  }
}

TEST_CASE("hyperplane ids follow lexicographic order of L") {
  const DiscriminantalArrangement b(fixture::random_generic(5, 2, 3));
  for (std::size_t id = 1; id < b.size(); ++id) {
    CHECK(lex_less(b[id - 1].L, b[id].L));
  }
  CHECK(b.id_of(IndexSet{0, 1, 2}) == 0);
  CHECK(b.id_of(IndexSet{2, 3, 4}) == b.size() - 1);
  CHECK_THROWS_AS(b.id_of(IndexSet{0, 1}), ContractViolation);
}

TEST_CASE("membership is the vanishing of alpha_L . t") {
  const Arrangement a = fixture::random_generic(6, 3, 21);
  const DiscriminantalArrangement b(a);
  SeededRng rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    Vector t(a.n());
    for (auto& e : t) e = rng.uniform(-3, 3);
    for (const auto& h : b.hyperplanes()) {
      const bool semantic = translation_in_DL(a, h.L, t);
      CHECK(semantic == dot(h.normal, t).is_zero());
      CHECK(semantic == oracle::hyperplanes_concurrent(a, h.L, t));
    }
  }
}

TEST_CASE("invalid inputs") {
  const Arrangement a = fixture::random_generic(5, 2, 8);
  CHECK_THROWS_AS(discriminantal_normal(a, IndexSet{0, 1}), DimensionError);
  const Arrangement flat(
      2, {ints({1, 0}), ints({2, 0}), ints({0, 1}), ints({1, 1})});
  CHECK_THROWS_AS(build_discriminantal(flat), NonGeneric);
  CHECK_THROWS_AS(DiscriminantalArrangement{flat}, NonGeneric);
}
