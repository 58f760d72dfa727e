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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "discarr/lattice.hpp"

namespace discarr {

enum class IntersectionClass { VeryGeneric, ANVG, GNVG };

// "VG", "ANVG", "GNVG".
std::string to_string(IntersectionClass c);

struct AuditOutcome {
  std::string name;
  bool pass = true;
  std::string detail;  // the numbers the inequality was evaluated on
};

struct ClassificationReport {
  IntersectionClass cls = IntersectionClass::VeryGeneric;
  std::size_t k = 0;
  std::size_t rank = 0;
  std::size_t a = 0;  // Athanasiadis rank
  std::size_t ell = 0;
  std::size_t multiplicity = 0;
  bool bba = true;
  bool minimal = false;
  bool sparse = false;
  bool dense = false;
  CanonicalPresentation presentation;
  std::vector<AuditOutcome> audit;

  bool non_very_generic() const { return cls != IntersectionClass::VeryGeneric; }
  bool audit_passed() const;
};

// |U_I| > k + sum_{i in I} (|S_i| - k) for every I with |I| >= 2, checked
// over all subfamilies. Vacuously true for m <= 1.
bool bba_satisfied(std::span<const IndexSet> family, std::size_t k);
bool bba_satisfied(const CanonicalPresentation& p, std::size_t k);

// min over j in the support of the number of components containing j.
std::size_t ell(const CanonicalPresentation& p);

// Every Y strictly above X is very generic. ContractViolation if X is VG.
bool is_minimal_nvg(const DiscriminantalArrangement& b, const Intersection& x);

// Only minimal NVG intersections can be sparse or dense.
bool is_sparse(const ClassificationReport& r);
bool is_dense(const ClassificationReport& r);

// Evaluates the certificate family T against X:
//  (a) T satisfies the BBA condition itself,
//  (b) every component of X lies inside some T,
//  (c) rank(X) >= sum_T (|T| - k) - |T_0|, T_0 = {T containing >= 2 S_i}.
// When all hold and X is NVG, X is ANVG. Throws DimensionError if some
// |T| <= k.
bool anvg_certificate_check(const DiscriminantalArrangement& b,
                            const Intersection& x,
                            std::span<const IndexSet> family);

ClassificationReport classify(const DiscriminantalArrangement& b,
                              const Intersection& x);

// The inequality checks applicable to X (see README for the list of names).
std::vector<AuditOutcome> theorem_b_audit(const DiscriminantalArrangement& b,
                                          const Intersection& x);

// Throws TheoremViolation describing X and every failed check.
void require_audit_pass(const DiscriminantalArrangement& b,
                        const Intersection& x,
                        const ClassificationReport& r);

// Empirical companion for GNVG intersections: an ANVG intersection among
// `candidates` lying inside X (closure strictly larger), if any.
std::optional<Intersection> anvg_below(const DiscriminantalArrangement& b,
                                       const Intersection& x,
                                       std::span<const Intersection> candidates);

}  // namespace discarr
