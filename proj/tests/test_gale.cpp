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
#include "discarr/errors.hpp"
#include "discarr/gale.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace discarr;

TEST_CASE("Gale diagram is the orthogonal complement of the row space") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const std::size_t k = 1 + seed % 4;
    const std::size_t n = k + 2 + seed % 3;
    const Arrangement a = fixture::random_generic(n, k, seed);
    const PointConfiguration g = gale_diagram(a);
    CHECK(g.dimension == n - k);
    CHECK(g.n() == n);
    CHECK(g.labels == a.labels());
    const Matrix B = g.matrix();
    CHECK((a.normal_matrix() * B.transpose()).is_zero());
    CHECK(rank(B) == n - k);
    const PointConfiguration back = gale_diagram(as_arrangement(g));
    CHECK(same_row_space(back.matrix(), a.normal_matrix()));
  }
}

TEST_CASE("Gale duality over Q(sqrt 3)") {
  const Arrangement a = a2m(3, Rational(1)).arrangement;
  const PointConfiguration g = gale_diagram(a);
  CHECK((a.normal_matrix() * g.matrix().transpose()).is_zero());
  CHECK(oracle::rank(std::vector<Vector>(g.points.begin(), g.points.end())) ==
        3);
}

TEST_CASE("general position and spanned hyperplanes") {
  PointConfiguration p;
  p.dimension = 3;
  p.points = {{Scalar(1), Scalar(0), Scalar(1)},
              {Scalar(0), Scalar(1), Scalar(1)},
              {Scalar(1), Scalar(1), Scalar(1)},
              {Scalar(2), Scalar(0), Scalar(2)}};  // parallel to the first
  p.labels = {1, 2, 3, 4};
  CHECK_FALSE(in_general_position(p));
  p.points[3] = {Scalar(1), Scalar(2), Scalar(5)};
  CHECK(in_general_position(p));
  const std::vector<Vector> two{p.points[0], p.points[1]};
  const Vector n = span_normal(two);
  CHECK(dot(n, p.points[0]).is_zero());
  CHECK(dot(n, p.points[1]).is_zero());
  CHECK_FALSE(dot(n, p.points[2]).is_zero());
  const std::vector<Vector> one{p.points[0]};
  CHECK_THROWS(span_normal(one));
}

TEST_CASE("Falk: discriminantal and adjoint ranks agree") {
  const auto ex = example_8_5();
  const FalkComparison falk(ex.arrangement);
  std::vector<std::size_t> ids;
  for (auto L : ex.target) ids.push_back(falk.discriminantal().id_of(L));
  CHECK(falk.discriminantal_rank(ids) == 2);
  CHECK(falk.adjoint_rank(ids) == 2);
  const std::vector<std::vector<IndexSet>> families{ex.target};
  CHECK(falk_rank_equivalence(ex.arrangement, families));

  // Exhaustive over families of size <= 3 for a dense n = 6, k = 2 instance;
  // index multisets cover sizes 1 and 2 as well.
  const auto crapo = dense_uk(2, 3);
  const FalkComparison f2(crapo.arrangement);
  const std::size_t N = f2.discriminantal().size();
  std::size_t checked = 0;
  bool all = true;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i; j < N; ++j)
      for (std::size_t l = j; l < N; ++l) {
        const std::vector<std::size_t> fam{i, j, l};
        all = all && f2.agrees(fam);
        ++checked;
      }
  CHECK(all);
  CHECK(checked == 1540);
}

TEST_CASE("adjoint arrangement needs points in general position") {
  PointConfiguration p;
  p.dimension = 2;
  p.points = {{Scalar(1), Scalar(0)}, {Scalar(2), Scalar(0)},
              {Scalar(0), Scalar(1)}};
  p.labels = {1, 2, 3};
  CHECK_THROWS_AS(adjoint_arrangement(p), DegenerateInput);
}
