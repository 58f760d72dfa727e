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

#include "discarr/classify.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <sstream>

#include "discarr/errors.hpp"

namespace discarr {

std::string to_string(IntersectionClass c) {
  switch (c) {
    case IntersectionClass::VeryGeneric:
      return "VG";
    case IntersectionClass::ANVG:
      return "ANVG";
    case IntersectionClass::GNVG:
      return "GNVG";
  }
  return "?";
}

bool ClassificationReport::audit_passed() const {
  return std::all_of(audit.begin(), audit.end(),
                     [](const AuditOutcome& o) { return o.pass; });
}

bool bba_satisfied(std::span<const IndexSet> family, std::size_t k) {
  const std::size_t m = family.size();
  if (m <= 1) return true;
  if (m > 30) throw DimensionError("BBA check limited to 30 sets");
  // Depth-first over subfamilies carrying the running union and excess.
  std::function<bool(std::size_t, IndexSet, std::size_t, std::size_t)> walk =
      [&](std::size_t next, IndexSet uni, std::size_t excess,
          std::size_t count) {
        if (count >= 2 && uni.size() <= k + excess) return false;
        for (std::size_t i = next; i < m; ++i) {
          if (!walk(i + 1, uni | family[i], excess + family[i].size() - k,
                    count + 1)) {
            return false;
          }
        }
        return true;
      };
  return walk(0, IndexSet{}, 0, 0);
}

bool bba_satisfied(const CanonicalPresentation& p, std::size_t k) {
  return bba_satisfied(p.components, k);
}

std::size_t ell(const CanonicalPresentation& p) {
  if (p.components.empty()) throw ContractViolation("empty presentation");
  std::size_t best = p.components.size();
  for (auto j : p.support().positions()) {
    std::size_t count = 0;
    for (auto s : p.components) count += s.contains(j) ? 1 : 0;
    best = std::min(best, count);
  }
  return best;
}

namespace {

bool very_generic(const DiscriminantalArrangement& b, const Intersection& y) {
  return components(b, y).athanasiadis_rank == y.rank;
}

bool all_above_very_generic(const DiscriminantalArrangement& b,
                            const Intersection& x) {
  for (const auto& y : intersections_above(b, x)) {
    if (!very_generic(b, y)) return false;
  }
  return true;
}

using i64 = std::int64_t;

void check(std::vector<AuditOutcome>& out, std::string name, bool pass,
           std::string detail) {
  out.push_back({std::move(name), pass, std::move(detail)});
}

std::string fields(const ClassificationReport& r, std::size_t n,
                   std::size_t support) {
  std::ostringstream s;
  s << "rank=" << r.rank << " a=" << r.a << " m="
    << r.presentation.components.size() << " ell=" << r.ell << " |U|="
    << support << " k=" << r.k << " n=" << n;
  return s.str();
}

std::vector<AuditOutcome> audit(const ClassificationReport& r,
                                std::size_t n) {
  std::vector<AuditOutcome> out;
  const auto& comps = r.presentation.components;
  const IndexSet uni = r.presentation.support();
  const i64 rank = static_cast<i64>(r.rank);
  const i64 a = static_cast<i64>(r.a);
  const i64 m = static_cast<i64>(comps.size());
  const i64 l = static_cast<i64>(r.ell);
  const i64 u = static_cast<i64>(uni.size());
  const i64 k = static_cast<i64>(r.k);
  const std::string f = fields(r, n, uni.size());

  check(out, "rank <= a_X", rank <= a, f);
  check(out, "a_X >= m", a >= m, f);
  check(out, "a_X >= |U|*ell - m*k", a >= u * l - m * k, f);

  if (r.minimal) {
    check(out, "2 <= ell <= k", 2 <= l && l <= k, f);
    check(out, "a_X >= ell*|U|/(k+1)", a * (k + 1) >= l * u, f);
    check(out, "a_X >= 2|U|/(k+1)", a * (k + 1) >= 2 * u, f);
    check(out, "rank < a_X < rank + ell", rank < a && a < rank + l, f);
    check(out, "a_X <= rank + k - 1", a <= rank + k - 1, f);
    check(out, "rank > ell*(|U|/(k+1) - 1)", rank * (k + 1) > l * (u - k - 1),
          f);
    check(out, "ell*(|U|/(k+1) - 1) >= 2|U|/(k+1) - 2",
          l * (u - k - 1) >= 2 * u - 2 * (k + 1), f);
  }
  if (r.dense) check(out, "dense => rank >= k+1", rank >= k + 1, f);

  const i64 nn = static_cast<i64>(n);
  if (r.non_very_generic() && rank == nn - k - 1) {
    check(out, "|U| = n at rank n-k-1", u == nn, f);
    check(out, "ANVG at rank n-k-1", r.cls == IntersectionClass::ANVG,
          f + " class=" + to_string(r.cls));
  }

  if (rank == 2) {
    check(out, "a_X <= |U|/(|U|-k-1) at rank 2", a * (u - k - 1) <= u, f);
    if (r.non_very_generic()) {
      bool cover = true;
      for (std::size_t i = 0; i < comps.size(); ++i)
        for (std::size_t j = i + 1; j < comps.size(); ++j)
          cover = cover && ((comps[i] | comps[j]) == uni);
      check(out, "pairwise unions cover U at rank 2", cover, f);
      const bool simple =
          std::all_of(comps.begin(), comps.end(), [&](IndexSet s) {
            return static_cast<i64>(s.size()) == k + 1;
          });
      check(out, "components simple at rank 2", simple, f);
    }
  }

  // Certificate family {U}: when its rank condition holds, NVG implies ANVG.
  if (r.non_very_generic()) {
    const i64 t0 = m >= 2 ? 1 : 0;
    if (rank >= (u - k) - t0) {
      check(out, "certificate {U} => ANVG", r.cls == IntersectionClass::ANVG,
            f + " class=" + to_string(r.cls));
    }
  }
  return out;
}

}  // namespace

bool is_minimal_nvg(const DiscriminantalArrangement& b, const Intersection& x) {
  if (very_generic(b, x)) {
    throw ContractViolation("minimality is defined for NVG intersections only");
  }
  return all_above_very_generic(b, x);
}

bool is_sparse(const ClassificationReport& r) {
  if (!r.minimal || !r.non_very_generic()) return false;
  return r.a * (r.k + 1) == 2 * r.presentation.support().size();
}

bool is_dense(const ClassificationReport& r) {
  if (!r.minimal || !r.non_very_generic()) return false;
  return r.a + 1 == r.rank + r.k;
}

bool anvg_certificate_check(const DiscriminantalArrangement& b,
                            const Intersection& x,
                            std::span<const IndexSet> family) {
  const std::size_t k = b.k();
  for (auto t : family) {
    if (t.size() <= k) {
      throw DimensionError("certificate sets need at least k+1 elements");
    }
  }
  if (!bba_satisfied(family, k)) return false;
  const auto p = components(b, x);
  for (auto s : p.components) {
    if (std::none_of(family.begin(), family.end(),
                     [&](IndexSet t) { return s.subset_of(t); })) {
      return false;
    }
  }
  std::int64_t bound = 0;
  for (auto t : family) {
    bound += static_cast<std::int64_t>(t.size() - k);
    const auto inside = std::count_if(
        p.components.begin(), p.components.end(),
        [&](IndexSet s) { return s.subset_of(t); });
    if (inside >= 2) --bound;
  }
  return static_cast<std::int64_t>(x.rank) >= bound;
}

ClassificationReport classify(const DiscriminantalArrangement& b,
                              const Intersection& x) {
  ClassificationReport r;
  r.k = b.k();
  r.rank = x.rank;
  r.multiplicity = x.multiplicity();
  r.presentation = components(b, x);
  r.a = r.presentation.athanasiadis_rank;
  r.ell = ell(r.presentation);
  r.bba = bba_satisfied(r.presentation, r.k);
  if (r.rank == r.a) {
    r.cls = IntersectionClass::VeryGeneric;
  } else {
    r.cls = r.bba ? IntersectionClass::GNVG : IntersectionClass::ANVG;
    r.minimal = all_above_very_generic(b, x);
    r.sparse = is_sparse(r);
    r.dense = is_dense(r);
  }
  r.audit = audit(r, b.base().n());
  return r;
}

std::vector<AuditOutcome> theorem_b_audit(const DiscriminantalArrangement& b,
                                          const Intersection& x) {
  return classify(b, x).audit;
}

void require_audit_pass(const DiscriminantalArrangement& b,
                        const Intersection& x, const ClassificationReport& r) {
  if (r.audit_passed()) return;
  std::ostringstream msg;
  msg << "theorem violation at intersection with closure {";
  for (std::size_t i = 0; i < x.closure.size(); ++i) {
    msg << (i ? "," : "") << b.base().format(b[x.closure[i]].L);
  }
  msg << "} components {";
  for (std::size_t i = 0; i < r.presentation.components.size(); ++i) {
    msg << (i ? "," : "") << b.base().format(r.presentation.components[i]);
  }
  msg << "} class " << to_string(r.cls) << ":";
  for (const auto& o : r.audit) {
    if (!o.pass) msg << " [" << o.name << ": " << o.detail << "]";
  }
  throw TheoremViolation(msg.str());
}

std::optional<Intersection> anvg_below(
    const DiscriminantalArrangement& b, const Intersection& x,
    std::span<const Intersection> candidates) {
  for (const auto& y : candidates) {
    if (y.closure.size() <= x.closure.size()) continue;
    if (!std::includes(y.closure.begin(), y.closure.end(), x.closure.begin(),
                       x.closure.end())) {
      continue;
    }
    if (classify(b, y).cls == IntersectionClass::ANVG) return y;
  }
  return std::nullopt;
}

}  // namespace discarr
