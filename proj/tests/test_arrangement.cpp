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
#include "discarr/errors.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace discarr;

namespace {

Vector v2(long x, long y) { return {Scalar(x), Scalar(y)}; }

}  // namespace

TEST_CASE("construction validates shape and labels") {
  CHECK_THROWS_AS(Arrangement(2, {v2(1, 0), v2(0, 1)}), DimensionError);
  CHECK_THROWS_AS(Arrangement(2, {v2(1, 0), v2(0, 1), {Scalar(1)}}),
                  DimensionError);
  CHECK_THROWS_AS(Arrangement(2, {v2(1, 0), v2(0, 1), v2(0, 0)}),
                  DegenerateInput);
  CHECK_THROWS_AS(Arrangement(2, {v2(1, 0), v2(0, 1), v2(1, 1)}, {1, 2, 2}),
                  ContractViolation);
  CHECK_THROWS_AS(Arrangement(2, {v2(1, 0), v2(0, 1), v2(1, 1)}, {1, 2}),
                  DimensionError);
  CHECK_THROWS_AS(Arrangement(0, {{}, {}}), DimensionError);
}

TEST_CASE("genericity is independence of every k normals") {
  CHECK(is_generic(Arrangement(2, {v2(1, 0), v2(0, 1), v2(1, 1)})));
  CHECK_FALSE(is_generic(Arrangement(2, {v2(1, 0), v2(0, 1), v2(2, 0)})));
  const Arrangement three(
      3, {{Scalar(1), Scalar(0), Scalar(0)},
          {Scalar(0), Scalar(1), Scalar(0)},
          {Scalar(0), Scalar(0), Scalar(1)},
          {Scalar(1), Scalar(1), Scalar(0)}});  // 1, 2, 4 are dependent
  CHECK_FALSE(is_generic(three));
  CHECK(is_generic(fixture::random_generic(7, 3, 1)));
}

TEST_CASE("labels map to positions") {
  const auto labels = signed_labels(2);
  std::vector<Vector> normals;
  for (long i = 1; i <= 6; ++i) normals.push_back(v2(1, i));
  const Arrangement a(2, normals, labels);
  CHECK(a.labels() == std::vector<int>{-3, -2, -1, 1, 2, 3});
  CHECK(a.position_of(-1) == 2);
  CHECK(a.position_of(3) == 5);
  CHECK_THROWS_AS(a.position_of(0), ContractViolation);
  const std::vector<int> pick{-3, 2};
  const IndexSet s = a.index_set(pick);
  CHECK(s == IndexSet{0, 4});
  CHECK(a.labels_of(s) == pick);
  CHECK(a.format(s) == "{-3,2}");
}

TEST_CASE("quadratic normals share one field") {
  const Scalar s3 = Scalar::quadratic(0, 1, 3);
  const Arrangement a(2, {v2(1, 0), {Scalar(0), s3}, v2(1, 1)});
  CHECK(a.radicand() == 3);
  CHECK(is_generic(a));
  const Scalar s2 = Scalar::quadratic(0, 1, 2);
  CHECK_THROWS_AS(Arrangement(2, {v2(1, 0), {Scalar(0), s3}, {s2, Scalar(1)}}),
                  FieldMismatch);
}

TEST_CASE("deleting a hyperplane keeps the other labels in order") {
  const Arrangement a(2, {v2(1, 0), v2(0, 1), v2(1, 1), v2(1, -1)},
                      {4, 7, 9, 11});
  const Arrangement d = delete_hyperplane(a, 7);
  CHECK(d.n() == 3);
  CHECK(d.labels() == std::vector<int>{4, 9, 11});
  CHECK(d.normal(1) == v2(1, 1));
  CHECK_THROWS_AS(delete_hyperplane(a, 5), ContractViolation);
}

TEST_CASE("normal matrix has one column per hyperplane") {
  const Arrangement a(2, {v2(1, 2), v2(3, 4), v2(5, 6)});
  const Matrix m = a.normal_matrix();
  CHECK(m.rows() == 2);
  CHECK(m.cols() == 3);
  CHECK(m(1, 2) == Scalar(6));
}
