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

#include <set>

#include "discarr/constructions.hpp"
#include "discarr/errors.hpp"
#include "discarr/lattice.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace discarr;

namespace {

std::vector<IndexSet> sets_of(const DiscriminantalArrangement& b,
                              const std::vector<std::size_t>& ids) {
  std::vector<IndexSet> out;
  for (auto id : ids) out.push_back(b[id].L);
  return out;
}

// Distinct closures of all families of at most `size` hyperplanes.
std::set<std::vector<std::size_t>> brute_closures(
    const DiscriminantalArrangement& b, std::size_t size) {
  std::set<std::vector<std::size_t>> out;
  const std::size_t n = b.size();
  std::vector<std::size_t> ids;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (!ids.empty()) out.insert(oracle::closure(b, ids));
    if (ids.size() == size) return;
    for (std::size_t i = start; i < n; ++i) {
      ids.push_back(i);
      self(self, i + 1);
      ids.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

TEST_CASE("closure matches the span oracle") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const DiscriminantalArrangement b(fixture::random_generic(6, 2 + seed % 2, seed));
    SeededRng rng(seed + 100);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<std::size_t> gens;
      for (int g = 0; g < 3; ++g) {
        gens.push_back(static_cast<std::size_t>(
            rng.uniform(0, static_cast<long>(b.size()) - 1)));
      }
      const Intersection x = closure(b, gens);
      CHECK(x.closure == oracle::closure(b, gens));
      std::vector<Vector> rows;
      for (auto g : gens) rows.push_back(b[g].normal);
      CHECK(x.rank == oracle::rank(rows));
    }
  }
  const DiscriminantalArrangement b(fixture::random_generic(4, 1, 0));
  CHECK_THROWS_AS(closure(b, std::vector<std::size_t>{}), ContractViolation);
}

TEST_CASE("the closure of D_L for L inside S is D_S") {
  const DiscriminantalArrangement b(fixture::random_generic(7, 2, 3));
  const IndexSet s{0, 1, 2, 3, 4};
  std::vector<IndexSet> gens{IndexSet{0, 1, 2}, IndexSet{1, 2, 3},
                             IndexSet{2, 3, 4}};
  const Intersection x = closure(b, gens);
  CHECK(x.rank == s.size() - 2);
  CHECK(x.multiplicity() == binomial(5, 3));
  const auto p = components(b, x);
  CHECK(p.components == std::vector<IndexSet>{s});
  CHECK(p.athanasiadis_rank == 3);
}

TEST_CASE("maximal complete sets against subset scan") {
  const std::size_t k = 2;
  const std::vector<IndexSet> edges{IndexSet{0, 1, 2}, IndexSet{0, 1, 3},
                                    IndexSet{0, 2, 3}, IndexSet{1, 2, 3},
                                    IndexSet{3, 4, 5}, IndexSet{2, 4, 5}};
  const auto got = maximal_complete_sets(edges, k);
  CHECK(got == oracle::components(edges, k));
  CHECK(got == std::vector<IndexSet>{IndexSet{0, 1, 2, 3}, IndexSet{2, 4, 5},
                                     IndexSet{3, 4, 5}});
  SeededRng rng(9);
  for (int trial = 0; trial < 60; ++trial) {
    const auto all = subsets_of_size(IndexSet::range(7), 3);
    std::vector<IndexSet> pick;
    for (auto e : all)
      if (rng.uniform(0, 3) == 0) pick.push_back(e);
    if (pick.empty()) continue;
    CHECK(maximal_complete_sets(pick, 2) == oracle::components(pick, 2));
  }
}

TEST_CASE("components of sampled intersections match brute force") {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const DiscriminantalArrangement b(fixture::random_generic(7, 3, seed));
    for (const auto& x : enumerate_intersections(b, 2)) {
      const auto p = components(b, x);
      CHECK(p.components ==
            oracle::components(sets_of(b, x.closure), b.k()));
    }
  }
  const auto crapo = dense_uk(2, 1);
  const DiscriminantalArrangement b(crapo.arrangement);
  const Intersection x = closure(b, crapo.target);
  CHECK(components(b, x).components ==
        oracle::components(sets_of(b, x.closure), 2));
}

TEST_CASE("enumeration finds every closure up to the rank bound") {
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const DiscriminantalArrangement b(fixture::random_generic(5, 2, seed));
    const auto brute = brute_closures(b, 3);
    std::set<std::vector<std::size_t>> expected;
    for (const auto& c : brute) {
      std::vector<Vector> rows;
      for (auto id : c) rows.push_back(b[id].normal);
      if (oracle::rank(rows) <= 2) expected.insert(c);
    }
    std::set<std::vector<std::size_t>> got;
    for (const auto& x : enumerate_intersections(b, 2)) {
      CHECK(x.rank >= 1);
      CHECK(x.rank <= 2);
      got.insert(x.closure);
    }
    CHECK(got == expected);
  }
}

TEST_CASE("enumeration on the 8 hyperplane example") {
  const auto ex = example_8_5();
  const DiscriminantalArrangement b(ex.arrangement);
  const auto xs = enumerate_intersections(b, 2);
  const Intersection target = closure(b, ex.target);
  CHECK(target.rank == 2);
  CHECK(target.multiplicity() == 4);
  CHECK(std::find(xs.begin(), xs.end(), target) != xs.end());
  // Ordered by rank, then by closure.
  for (std::size_t i = 1; i < xs.size(); ++i) {
    CHECK(std::make_pair(xs[i - 1].rank, xs[i - 1].closure) <
          std::make_pair(xs[i].rank, xs[i].closure));
  }
  CHECK(xs.size() == enumerate_intersections(b, 2).size());
}

TEST_CASE("intersections above X are those inside its closure") {
  const auto ex = example_8_5();
  const DiscriminantalArrangement b(ex.arrangement);
  const Intersection x = closure(b, ex.target);
  const auto above = intersections_above(b, x);
  CHECK(above.size() == 4);
  for (const auto& y : above) {
    CHECK(y.rank == 1);
    CHECK(std::includes(x.closure.begin(), x.closure.end(), y.closure.begin(),
                        y.closure.end()));
  }
}
