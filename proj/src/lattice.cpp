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

#include "discarr/lattice.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <unordered_set>

#include "discarr/errors.hpp"

namespace discarr {

IndexSet CanonicalPresentation::support() const {
  IndexSet u;
  for (auto s : components) u = u | s;
  return u;
}

Intersection closure(const DiscriminantalArrangement& b,
                     std::span<const std::size_t> gens) {
  if (gens.empty()) throw ContractViolation("closure of an empty generator set");
  RowSpan span(b.ambient_dim());
  for (auto id : gens) {
    if (id >= b.size()) throw ContractViolation("hyperplane id out of range");
    span.insert(b[id].normal);
  }
  Intersection x;
  x.rank = span.rank();
  x.generators.assign(gens.begin(), gens.end());
  for (std::size_t id = 0; id < b.size(); ++id) {
    if (span.contains(b[id].normal)) x.closure.push_back(id);
  }
  return x;
}

Intersection closure(const DiscriminantalArrangement& b,
                     std::span<const IndexSet> gens) {
  std::vector<std::size_t> ids;
  for (auto L : gens) ids.push_back(b.id_of(L));
  return closure(b, ids);
}

std::vector<IndexSet> closure_sets(const DiscriminantalArrangement& b,
                                   const Intersection& x) {
  std::vector<IndexSet> out;
  out.reserve(x.closure.size());
  for (auto id : x.closure) out.push_back(b[id].L);
  return out;
}

std::vector<IndexSet> maximal_complete_sets(std::span<const IndexSet> edges,
                                            std::size_t k) {
  std::unordered_set<std::uint64_t> edge_bits;
  IndexSet vertices;
  for (auto e : edges) {
    if (e.size() != k + 1) throw DimensionError("hyperedge of wrong size");
    edge_bits.insert(e.bits());
    vertices = vertices | e;
  }
  // S complete and j outside S: S + j is complete iff T + j is an edge for
  // every k-subset T of S.
  auto extends = [&](IndexSet s, std::size_t j) {
    return for_each_subset_of_size(s, k, [&](IndexSet t) {
      return edge_bits.count(t.with(j).bits()) > 0;
    });
  };
  std::vector<IndexSet> current;
  for (auto bits : std::set<std::uint64_t>(edge_bits.begin(), edge_bits.end())) {
    current.emplace_back(bits);
  }
  std::vector<IndexSet> maximal;
  while (!current.empty()) {
    std::vector<IndexSet> next;
    for (auto s : current) {
      bool extendable = false;
      for (auto j : (vertices - s).positions()) {
        if (!extends(s, j)) continue;
        extendable = true;
        // Each complete set is generated once, from itself minus its max.
        if (static_cast<int>(j) > s.max_position()) next.push_back(s.with(j));
      }
      if (!extendable) maximal.push_back(s);
    }
    current = std::move(next);
  }
  std::sort(maximal.begin(), maximal.end(), LexLess{});
  return maximal;
}

CanonicalPresentation components(const DiscriminantalArrangement& b,
                                 const Intersection& x) {
  const auto edges = closure_sets(b, x);
  CanonicalPresentation p;
  p.components = maximal_complete_sets(edges, b.k());
  for (auto s : p.components) p.athanasiadis_rank += s.size() - b.k();
  return p;
}

namespace {

struct Node {
  Intersection x;
  std::optional<RowSpan> span;
};

}  // namespace

std::vector<Intersection> enumerate_within(const DiscriminantalArrangement& b,
                                           std::span<const std::size_t> pool,
                                           std::size_t max_rank) {
  std::vector<Intersection> out;
  std::vector<Node> level;
  level.push_back({Intersection{}, RowSpan(b.ambient_dim())});
  std::vector<char> in_closure(b.size(), 0);
  for (std::size_t r = 0; r < max_rank && !level.empty(); ++r) {
    const bool keep_span = r + 1 < max_rank;
    std::map<std::vector<std::size_t>, Node> next;
    for (const Node& node : level) {
      for (auto id : node.x.closure) in_closure[id] = 1;
      // Hyperplanes outside closure(X) whose residuals modulo span(X) are
      // parallel produce the same cover of X.
      std::map<Vector, std::vector<std::size_t>, VectorKeyLess> groups;
      for (auto id : pool) {
        if (in_closure[id]) continue;
        groups[leading_one(node.span->reduce(b[id].normal))].push_back(id);
      }
      for (auto id : node.x.closure) in_closure[id] = 0;
      for (auto& [dir, ids] : groups) {
        std::vector<std::size_t> cl;
        cl.reserve(node.x.closure.size() + ids.size());
        std::merge(node.x.closure.begin(), node.x.closure.end(), ids.begin(),
                   ids.end(), std::back_inserter(cl));
        auto [it, fresh] = next.try_emplace(std::move(cl));
        if (!fresh) continue;
        Node& child = it->second;
        child.x.closure = it->first;
        child.x.rank = r + 1;
        child.x.generators = node.x.generators;
        child.x.generators.push_back(ids.front());
        if (keep_span) {
          child.span = *node.span;
          child.span->insert(b[ids.front()].normal);
        }
      }
    }
    level.clear();
    level.reserve(next.size());
    for (auto& [key, node] : next) {
      out.push_back(node.x);
      level.push_back(std::move(node));
    }
  }
  return out;
}

std::vector<Intersection> enumerate_intersections(
    const DiscriminantalArrangement& b, std::size_t max_rank) {
  std::vector<std::size_t> pool(b.size());
  for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = i;
  return enumerate_within(b, pool, max_rank);
}

std::vector<Intersection> intersections_above(
    const DiscriminantalArrangement& b, const Intersection& x) {
  if (x.rank <= 1) return {};
  return enumerate_within(b, x.closure, x.rank - 1);
}

}  // namespace discarr
