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

#include <algorithm>
#include <limits>

#include "discarr/errors.hpp"
#include "discarr/gale.hpp"

namespace discarr {

long SeededRng::uniform(long lo, long hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - max % span;
  std::uint64_t draw;
  do {
    draw = engine_();
  } while (draw >= limit);
  return lo + static_cast<long>(draw % span);
}

long SeededRng::nonzero(long lo, long hi) {
  long v;
  do {
    v = uniform(lo, hi);
  } while (v == 0);
  return v;
}

Vector SeededRng::integer_vector(std::size_t dim) {
  Vector v(dim);
  do {
    for (auto& e : v) e = uniform(-kCoordinateBound, kCoordinateBound);
  } while (is_zero(v));
  return v;
}

namespace {

ExpectedCertificate derive_expected(std::vector<IndexSet> presentation,
                                    std::size_t k, std::size_t rank,
                                    std::size_t multiplicity, bool minimal) {
  ExpectedCertificate e;
  std::sort(presentation.begin(), presentation.end(), LexLess{});
  e.presentation = std::move(presentation);
  e.rank = rank;
  e.multiplicity = multiplicity;
  IndexSet uni;
  for (auto s : e.presentation) {
    e.a += s.size() - k;
    uni = uni | s;
  }
  if (e.a == rank) {
    e.cls = IntersectionClass::VeryGeneric;
    return e;
  }
  e.cls = bba_satisfied(e.presentation, k) ? IntersectionClass::GNVG
                                           : IntersectionClass::ANVG;
  e.minimal = minimal;
  e.sparse = minimal && e.a * (k + 1) == 2 * uni.size();
  e.dense = minimal && e.a + 1 == rank + k;
  return e;
}

std::vector<std::size_t> ids_of(const DiscriminantalArrangement& b,
                                std::span<const IndexSet> sets) {
  std::vector<std::size_t> ids;
  for (auto s : sets) ids.push_back(b.id_of(s));
  return ids;
}

// Normal and offset of the affine hull of k points in k-space.
std::optional<std::pair<Vector, Scalar>> affine_hull(
    std::span<const Vector> pts) {
  const std::size_t k = pts.front().size();
  if (k == 1) return std::make_pair(Vector{Scalar(1)}, pts.front()[0]);
  std::vector<Vector> diffs;
  for (std::size_t s = 1; s < pts.size(); ++s) {
    Vector d(k);
    for (std::size_t r = 0; r < k; ++r) d[r] = pts[s][r] - pts[0][r];
    diffs.push_back(std::move(d));
  }
  const Matrix kernel = right_kernel_basis(Matrix::from_rows(diffs));
  if (kernel.cols() != 1) return std::nullopt;
  Vector normal = primitive_normalize(kernel.column(0));
  Scalar offset = dot(normal, pts[0]);
  return std::make_pair(std::move(normal), std::move(offset));
}

}  // namespace

std::vector<int> signed_labels(int k) {
  std::vector<int> labels;
  for (int i = -(k + 1); i <= k + 1; ++i)
    if (i != 0) labels.push_back(i);
  return labels;
}

std::vector<std::vector<int>> u_k_family(int k) {
  if (k < 2) throw ConstructionError("U_k needs k >= 2");
  std::vector<std::vector<int>> plus;
  std::vector<std::vector<int>> minus;
  const auto all = signed_labels(k);
  for (int i = 1; i <= k; ++i) {
    std::vector<int> s;
    for (int j = 1; j <= k + 1; ++j)
      if (j != i) s.push_back(j);
    s.push_back(-i);
    std::sort(s.begin(), s.end());
    std::vector<int> c;
    std::set_difference(all.begin(), all.end(), s.begin(), s.end(),
                        std::back_inserter(c));
    plus.push_back(std::move(s));
    minus.push_back(std::move(c));
  }
  plus.insert(plus.end(), minus.begin(), minus.end());
  return plus;
}

std::vector<std::vector<int>> dense_family(int k) {
  if (k == 2) return {{-1, 2, 3}, {-2, 1, 3}, {-3, 1, 2}, {-3, -2, -1}};
  return u_k_family(k);
}

ConstructionResult dense_uk(int k, std::uint64_t seed) {
  if (k < 2) throw ConstructionError("dense_uk needs k >= 2");
  const std::size_t kk = static_cast<std::size_t>(k);
  const auto labels = signed_labels(k);
  const auto family = dense_family(k);
  // Point v_j is indexed by the set K_{k,j}; family[s] is the s-th set.
  SeededRng rng(seed);
  std::string reason;
  for (std::size_t attempt = 0; attempt < kRetryCap; ++attempt) {
    std::vector<Vector> v;
    for (std::size_t s = 0; s < family.size(); ++s) {
      v.push_back(rng.integer_vector(kk));
    }
    std::vector<Vector> normals;
    Vector offsets;
    bool hulls_ok = true;
    for (int label : labels) {
      std::vector<Vector> pts;
      for (std::size_t s = 0; s < family.size(); ++s) {
        if (std::find(family[s].begin(), family[s].end(), label) !=
            family[s].end()) {
          pts.push_back(v[s]);
        }
      }
      auto hull = affine_hull(pts);
      if (!hull) {
        hulls_ok = false;
        break;
      }
      normals.push_back(std::move(hull->first));
      offsets.push_back(std::move(hull->second));
    }
    if (!hulls_ok) {
      reason = "degenerate affine hull";
      continue;
    }
    Arrangement a(kk, normals, labels);
    if (!is_generic(a)) {
      reason = "normals not generic";
      continue;
    }
    std::vector<IndexSet> target;
    for (const auto& s : family) target.push_back(a.index_set(s));
    if (!std::all_of(target.begin(), target.end(), [&](IndexSet L) {
          return translation_in_DL(a, L, offsets);
        })) {
      reason = "witness translation off some D_L";
      continue;
    }
    const DiscriminantalArrangement b(a);
    const Intersection x = closure(b, ids_of(b, target));
    if (x.rank != kk + 1) {
      reason = "rank of the U_k meet is " + std::to_string(x.rank);
      continue;
    }
    auto expected_presentation = target;
    std::sort(expected_presentation.begin(), expected_presentation.end(),
              LexLess{});
    if (components(b, x).components != expected_presentation) {
      reason = "canonical presentation differs from the family";
      continue;
    }
    // Minimality: every subfamily of size 2..k+1 meets transversally.
    bool transversal = true;
    const auto target_ids = ids_of(b, target);
    for (std::size_t size = 2; size <= kk + 1 && transversal; ++size) {
      for_each_subset_of_size(
          IndexSet::range(target.size()), size, [&](IndexSet pick) {
            std::vector<Vector> rows;
            for (auto s : pick.positions()) rows.push_back(b[target_ids[s]].normal);
            transversal = rank(rows) == size;
            return transversal;
          });
    }
    if (!transversal) {
      reason = "a subfamily is not transversal";
      continue;
    }
    ConstructionResult out{"dense-uk", a, target,
                           derive_expected(target, kk, kk + 1, target.size(),
                                           true),
                           seed, attempt, offsets};
    return out;
  }
  throw ConstructionError("dense_uk(" + std::to_string(k) + ", seed " +
                          std::to_string(seed) + "): retry cap reached, last "
                          "failure: " + reason);
}

ConstructionResult a2m(int m, const Rational& p) {
  if (m != 3 && m != 4 && m != 6) {
    throw ConstructionError("a2m supports m in {3, 4, 6} only (exact cos/sin "
                            "of pi/m in a quadratic field), got m = " +
                            std::to_string(m));
  }
  if (p == 0) throw ConstructionError("a2m needs p != 0");
  const long d = (m == 4) ? 2 : 3;
  const Rational half(1, 2);
  // cos(pi/m) and sin(pi/m).
  Scalar c;
  Scalar s;
  if (m == 3) {
    c = Scalar::quadratic(half, 0, d);
    s = Scalar::quadratic(0, half, d);
  } else if (m == 4) {
    c = Scalar::quadratic(0, half, d);
    s = Scalar::quadratic(0, half, d);
  } else {
    c = Scalar::quadratic(0, half, d);
    s = Scalar::quadratic(half, 0, d);
  }
  Vector alpha{Scalar(p).in_field(d), Scalar(0).in_field(d),
               Scalar(-1).in_field(d)};
  std::vector<Vector> normals;
  for (int i = 1; i <= 2 * m; ++i) {
    alpha = Vector{c * alpha[0] - s * alpha[1], s * alpha[0] + c * alpha[1],
                   alpha[2]};
    normals.push_back(alpha);
  }
  Arrangement a(3, normals);
  if (!is_generic(a)) {
    throw ConstructionError("a2m: arrangement is not generic for p = " +
                            rational_to_string(p) + "; choose another p");
  }
  std::vector<IndexSet> target;
  auto wrap = [&](int i) { return ((i - 1) % (2 * m)) + 1; };
  for (int i = 1; i <= m; ++i) {
    const std::vector<int> s{wrap(i), wrap(i + 1), wrap(i + m),
                             wrap(i + m + 1)};
    target.push_back(a.index_set(s));
  }
  // One linear relation among the alpha_{S_i} (they telescope to zero).
  ConstructionResult out{"a2m", a, target,
                         derive_expected(target, 3, static_cast<std::size_t>(m - 1),
                                         target.size(), true),
                         0, 0, std::nullopt};
  return out;
}

std::vector<std::array<Scalar, 4>> a2m_determinants(const Arrangement& a,
                                                    int m) {
  auto al = [&](int i) -> const Vector& {
    return a.normal(static_cast<std::size_t>(((i - 1) % (2 * m))));
  };
  auto d3 = [&](int x, int y, int z) {
    const std::vector<Vector> cols{al(x), al(y), al(z)};
    return det(Matrix::from_columns(cols));
  };
  std::vector<std::array<Scalar, 4>> out;
  for (int i = 1; i <= m; ++i) {
    out.push_back({d3(i + 1, i + m, i + m + 1), d3(i, i + m, i + m + 1),
                   d3(i, i + 1, i + m + 1), d3(i, i + 1, i + m)});
  }
  return out;
}

ConstructionResult example_8_5() {
  const long rows[5][8] = {{1, 0, 0, 0, 0, 1, 2, 3},
                           {0, 1, 0, 0, 0, 1, -2, -1},
                           {0, 0, 1, 0, 0, 1, 3, 2},
                           {0, 0, 0, 1, 0, 1, -1, -2},
                           {0, 0, 0, 0, 1, 1, 1, 1}};
  std::vector<Vector> normals(8, Vector(5));
  for (std::size_t r = 0; r < 5; ++r)
    for (std::size_t c = 0; c < 8; ++c) normals[c][r] = rows[r][c];
  Arrangement a(5, normals);
  const std::vector<std::vector<int>> sets{{1, 2, 3, 4, 5, 6},
                                           {1, 2, 3, 4, 7, 8},
                                           {1, 2, 5, 6, 7, 8},
                                           {3, 4, 5, 6, 7, 8}};
  std::vector<IndexSet> target;
  for (const auto& s : sets) target.push_back(a.index_set(s));
  ConstructionResult out{"example-8-5", a, target,
                         derive_expected(target, 5, 2, 4, true), 0, 0,
                         std::nullopt};
  return out;
}

namespace {

// Gale-dualizes the points, checks genericity and that the groups' index
// complements meet in rank 2 with nothing else on top.
std::optional<ConstructionResult> rank2_from_points(
    const std::string& family, const PointConfiguration& points,
    std::span<const IndexSet> groups, std::size_t k, std::string& reason) {
  if (!in_general_position(points)) {
    reason = "points not in general position";
    return std::nullopt;
  }
  const Arrangement a = as_arrangement(gale_diagram(as_arrangement(points)));
  if (a.k() != k || !is_generic(a)) {
    reason = "Gale dual not generic";
    return std::nullopt;
  }
  std::vector<IndexSet> target;
  for (auto g : groups) target.push_back(a.all() - g);
  const DiscriminantalArrangement b(a);
  const Intersection x = closure(b, ids_of(b, target));
  if (x.rank != 2 || x.multiplicity() != target.size()) {
    reason = "target meet has rank " + std::to_string(x.rank) +
             " and multiplicity " + std::to_string(x.multiplicity());
    return std::nullopt;
  }
  return ConstructionResult{family, a, target,
                            derive_expected(target, k, 2, target.size(), true),
                            0, 0, std::nullopt};
}

}  // namespace

ConstructionResult rank2_symmetric(int n, std::uint64_t seed) {
  if (n < 6 || n % 2 != 0) {
    throw ConstructionError("rank2_symmetric needs an even n >= 6");
  }
  const std::size_t half = static_cast<std::size_t>(n / 2);
  std::vector<IndexSet> groups;
  for (std::size_t i = 0; i < half; ++i) groups.push_back(IndexSet{i, i + half});
  SeededRng rng(seed);
  std::string reason;
  for (std::size_t attempt = 0; attempt < kRetryCap; ++attempt) {
    PointConfiguration pts;
    pts.dimension = 3;
    pts.points.resize(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < half; ++i) {
      const long x = rng.uniform(-kCoordinateBound, kCoordinateBound);
      const long y = rng.uniform(-kCoordinateBound, kCoordinateBound);
      pts.points[i] = Vector{Scalar(x), Scalar(y), Scalar(1)};
      pts.points[i + half] = Vector{Scalar(-x), Scalar(-y), Scalar(1)};
    }
    for (int i = 1; i <= n; ++i) pts.labels.push_back(i);
    if (auto r = rank2_from_points("rank2-symmetric", pts, groups,
                                   static_cast<std::size_t>(n - 3), reason)) {
      r->seed = seed;
      r->retries_used = attempt;
      return *r;
    }
  }
  throw ConstructionError("rank2_symmetric: retry cap reached, last failure: " +
                          reason);
}

ConstructionResult rank2_general(int n, int k, std::uint64_t seed) {
  if (!(k > 1 && n - 2 > k)) {
    throw ConstructionError("rank2_general needs n-2 > k > 1");
  }
  const int q = n - k - 1;
  if (n % q != 0) {
    throw ConstructionError("rank2_general needs n-k-1 = " + std::to_string(q) +
                            " to divide n = " + std::to_string(n));
  }
  const std::size_t dim = static_cast<std::size_t>(n - k);
  const std::size_t groups_count = static_cast<std::size_t>(n / q);
  const std::size_t per = static_cast<std::size_t>(q);
  std::vector<IndexSet> groups;
  for (std::size_t g = 0; g < groups_count; ++g) {
    IndexSet s;
    for (std::size_t j = 0; j < per; ++j) s = s.with(g * per + j);
    groups.push_back(s);
  }
  SeededRng rng(seed);
  std::string reason;
  for (std::size_t attempt = 0; attempt < kRetryCap; ++attempt) {
    // The common subspace is span(e_3, ..., e_dim); hyperplane g of the
    // pencil is spanned by it and the direction (u_g, w_g, 0, ..., 0).
    PointConfiguration pts;
    pts.dimension = dim;
    for (std::size_t g = 0; g < groups_count; ++g) {
      const long u = rng.uniform(-kCoordinateBound, kCoordinateBound);
      long w = rng.uniform(-kCoordinateBound, kCoordinateBound);
      if (u == 0 && w == 0) w = 1;
      for (std::size_t j = 0; j < per; ++j) {
        const long lambda = rng.nonzero(-kCoordinateBound, kCoordinateBound);
        Vector p(dim);
        p[0] = lambda * u;
        p[1] = lambda * w;
        for (std::size_t c = 2; c < dim; ++c) {
          p[c] = rng.uniform(-kCoordinateBound, kCoordinateBound);
        }
        pts.points.push_back(std::move(p));
      }
    }
    for (int i = 1; i <= n; ++i) pts.labels.push_back(i);
    if (auto r = rank2_from_points("rank2-general", pts, groups,
                                   static_cast<std::size_t>(k), reason)) {
      r->seed = seed;
      r->retries_used = attempt;
      return *r;
    }
  }
  throw ConstructionError("rank2_general: retry cap reached, last failure: " +
                          reason);
}

VerificationOutcome verify(const ConstructionResult& c) {
  VerificationOutcome out;
  const DiscriminantalArrangement b(c.arrangement);
  out.intersection = closure(b, ids_of(b, c.target));
  out.report = classify(b, out.intersection);
  const auto& r = out.report;
  const auto& e = c.expected;
  auto expect = [&](bool cond, const std::string& what) {
    if (!cond) out.mismatches.push_back(what);
  };
  expect(r.presentation.components == e.presentation, "canonical presentation");
  expect(r.rank == e.rank, "rank " + std::to_string(r.rank) + " != " +
                               std::to_string(e.rank));
  expect(r.a == e.a, "a_X " + std::to_string(r.a) + " != " +
                         std::to_string(e.a));
  expect(r.multiplicity == e.multiplicity,
         "multiplicity " + std::to_string(r.multiplicity) + " != " +
             std::to_string(e.multiplicity));
  expect(r.cls == e.cls, "class " + to_string(r.cls) + " != " + to_string(e.cls));
  expect(r.minimal == e.minimal, "minimal");
  expect(r.sparse == e.sparse, "sparse");
  expect(r.dense == e.dense, "dense");
  expect(r.audit_passed(), "audit");
  out.ok = out.mismatches.empty();
  return out;
}

}  // namespace discarr
