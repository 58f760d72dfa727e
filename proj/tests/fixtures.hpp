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

#include <cstdint>

#include "discarr/arrangement.hpp"
#include "discarr/constructions.hpp"

namespace fixture {

// A generic arrangement of n integer normals in k-space, entries in
// [-bound, bound], drawn from `seed` until generic.
inline discarr::Arrangement random_generic(std::size_t n, std::size_t k,
                                           std::uint64_t seed,
                                           long bound = 9) {
  discarr::SeededRng rng(seed);
  while (true) {
    std::vector<discarr::Vector> normals;
    for (std::size_t i = 0; i < n; ++i) {
      discarr::Vector v(k);
      do {
        for (auto& e : v) e = rng.uniform(-bound, bound);
      } while (discarr::is_zero(v));
      normals.push_back(v);
    }
    discarr::Arrangement a(k, normals);
    if (discarr::is_generic(a)) return a;
  }
}

}  // namespace fixture
